#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qlw/linalg.hpp"

namespace qlw {

/// A finite-dimensional C*-bialgebra given by structure constants over a
/// fixed basis b_0..b_{d-1}, together with a faithful unital *-representation
/// used for element operator norms.
struct FiniteBialgebra {
  std::size_t dim = 0;
  std::vector<std::string> basis_labels;
  /// Rank-3 product tensor, b_i b_j = sum_k mult[(i*d+j)*d+k] b_k.
  std::vector<cx> mult;
  /// Coefficients of the unit element.
  CVec unit;
  /// Involution: b_i^* = sum_k star(i,k) b_k. Acts antilinearly on
  /// coefficients: (sum c_i b_i)^* = sum conj(c_i) star(i,.).
  Mat star;
  /// Counit row, counit[i] = eps(b_i).
  CVec counit;
  /// Coproduct as a d^2 x d matrix, Delta(b_i) = sum_{j,k} coproduct(j*d+k, i) b_j (x) b_k.
  Mat coproduct;
  std::vector<Mat> faithful_rep;

  cx m(std::size_t i, std::size_t j, std::size_t k) const {
    return mult[(i * dim + j) * dim + k];
  }
  std::size_t rep_dim() const { return faithful_rep.empty() ? 0 : faithful_rep[0].rows; }

  /// Throws std::invalid_argument when tensor shapes are inconsistent.
  void check_shapes() const;

  CVec multiply(const CVec& x, const CVec& y) const;
  CVec star_of(const CVec& x) const;
  cx counit_of(const CVec& x) const;
  /// Coefficients of Delta(x) in the b_j (x) b_k basis, size d^2.
  CVec coproduct_of(const CVec& x) const;
  Mat rep_of(const CVec& x) const;
  /// Matrix of left multiplication by b_i on coefficient columns.
  Mat left_mult(std::size_t i) const;
  /// Operator norm of an element, computed in the faithful representation.
  double elem_op_norm(const CVec& x) const;
  /// Coefficient vector of the single basis element b_i.
  CVec basis_vector(std::size_t i) const;
  /// Coefficient vector of b_i^*, i.e. row i of the star matrix.
  CVec star_row(std::size_t i) const;

  // Arithmetic in A (x) A on coefficient vectors of size d^2.
  CVec tensor_multiply(const CVec& x, const CVec& y) const;
  CVec tensor_star(const CVec& x) const;
};

/// Linear functional as a coefficient row: f(sum c_i b_i) = sum c_i coeffs[i].
struct Functional {
  CVec coeffs;

  cx operator()(const CVec& x) const;
  cx at(std::size_t i) const { return coeffs[i]; }
  std::size_t dim() const { return coeffs.size(); }
};

struct StateCertificate {
  double hermitian_residual = 0.0;
  double min_eigenvalue = 0.0;
  double unit_residual = 0.0;
  bool passed = false;
};

struct ValidationReport {
  struct Entry {
    std::string axiom;
    double residual;
  };
  std::vector<Entry> entries;
  double tol = 0.0;
  bool passed = false;

  double max_residual() const;
  std::string table() const;
};

/// Checks every bialgebra axiom and reports the max absolute residual per
/// axiom. Dimension mismatches throw; axiom failures only clear `passed`.
ValidationReport validate_bialgebra(const FiniteBialgebra& a, double tol = 1e-9);

/// Multiplication table of a finite group; element 0 is the identity.
struct GroupTable {
  std::size_t order = 0;
  std::vector<std::vector<std::size_t>> table;

  std::size_t mul(std::size_t g, std::size_t h) const { return table[g][h]; }
  std::size_t inverse(std::size_t g) const;
  /// Throws std::invalid_argument unless the table is a group with identity 0.
  void validate() const;
};

GroupTable cyclic_group_table(std::size_t n);
GroupTable symmetric_group_3_table();
GroupTable dihedral_group_4_table();

std::vector<std::string> cyclic_labels(std::size_t n);
std::vector<std::string> symmetric_group_3_labels();
std::vector<std::string> dihedral_group_4_labels();

/// Group algebra C[G]: basis lambda_g, lambda_g lambda_h = lambda_{gh},
/// Delta lambda_g = lambda_g (x) lambda_g, left regular representation.
FiniteBialgebra build_group_algebra(const GroupTable& g, std::vector<std::string> labels = {});

/// Function algebra C(G): basis of indicators e_g, pointwise product,
/// Delta e_g = sum_{h h' = g} e_h (x) e_{h'}, diagonal representation.
FiniteBialgebra build_function_algebra(const GroupTable& g, std::vector<std::string> labels = {});

/// Counit as a functional (the convolution unit).
Functional counit_functional(const FiniteBialgebra& a);

/// Convolution (mu * nu)(x) = (mu (x) nu)(Delta x).
Functional convolve(const FiniteBialgebra& a, const Functional& mu, const Functional& nu);

Functional convolution_power(const FiniteBialgebra& a, const Functional& f, std::size_t n);

/// Matrix of (id (x) gamma) Delta acting on coefficient columns. Convolution
/// exponentials and the walk recursion are matrix actions of this operator.
Mat conv_operator(const FiniteBialgebra& a, const Functional& gamma);

/// exp_*(t gamma) = eps . exp(t T_gamma); equals sum_n t^n gamma^{*n} / n!.
Functional convolution_exponential(const FiniteBialgebra& a, const Functional& gamma, double t);

/// max |f(b_i^*) - conj f(b_i)| over the basis.
double hermitian_residual(const FiniteBialgebra& a, const Functional& f);

/// Positivity matrix P(i,j) = f(b_i^* b_j).
Mat positivity_matrix(const FiniteBialgebra& a, const Functional& f);

StateCertificate certify_state(const FiniteBialgebra& a, const Functional& f, double tol = 1e-9);

inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr std::size_t kDefaultNormSamples = 200;

/// Sampled lower-bound estimate of the norm of the linear map psi, given by
/// its values on the basis. Maximizes ||psi(x)||_op over basis elements and
/// seeded Gaussian random elements, normalized to ||rho(x)||_op = 1.
double map_norm_estimate(const FiniteBialgebra& a, std::span<const Mat> psi_on_basis,
                         std::size_t samples = kDefaultNormSamples,
                         std::uint64_t seed = kDefaultSeed);

}  // namespace qlw
