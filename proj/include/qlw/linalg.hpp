#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qlw {

using cx = std::complex<double>;
using CVec = std::vector<cx>;

/// Dense complex matrix, row-major.
struct Mat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<cx> a;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  cx& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const cx& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  bool same_shape(const Mat& o) const { return rows == o.rows && cols == o.cols; }

  static Mat identity(std::size_t n);
  static Mat zero(std::size_t r, std::size_t c);
  static Mat diag(const CVec& d);
  /// Column vector as a d x 1 matrix.
  static Mat column(const CVec& v);
  /// Row vector as a 1 x d matrix.
  static Mat row(const CVec& v);
};

namespace linalg {

// Serial reference kernels. These stay as the ground truth the parallel
// kernels are tested against; they use the same per-entry summation order.
namespace ref {
Mat matmul(const Mat& x, const Mat& y);
Mat kron(const Mat& x, const Mat& y);
void kron_acc(Mat& out, cx w, const Mat& x, const Mat& y);
CVec matvec(const Mat& m, const CVec& v);
}  // namespace ref

// OpenMP kernels. Small inputs run the serial loop; the switch point is
// in linalg.cpp. Entry-wise work is independent, so results are
// bit-identical to the reference kernels at any thread count.
Mat matmul(const Mat& x, const Mat& y);
Mat kron(const Mat& x, const Mat& y);
/// out += w * kron(x, y); out must be pre-sized to (x.rows*y.rows, x.cols*y.cols).
void kron_acc(Mat& out, cx w, const Mat& x, const Mat& y);
CVec matvec(const Mat& m, const CVec& v);

Mat adjoint(const Mat& m);
Mat transpose(const Mat& m);
Mat add(const Mat& x, const Mat& y);
Mat sub(const Mat& x, const Mat& y);
Mat scale(cx s, const Mat& x);
void add_scaled(Mat& x, cx s, const Mat& y);

/// <x, y>, conjugate-linear in the first argument.
cx dot(const CVec& x, const CVec& y);
double norm2(const CVec& v);
CVec scale_vec(cx s, const CVec& v);

double max_abs(const Mat& m);
double max_abs_diff(const Mat& x, const Mat& y);
double fro_norm(const Mat& m);
cx trace(const Mat& m);

/// Eigendecomposition of a Hermitian matrix: H = V diag(values) V^dagger,
/// eigenvalues ascending, eigenvectors in the columns of `vectors`.
struct HermEig {
  std::vector<double> values;
  Mat vectors;
};

/// Cyclic complex Jacobi. Deterministic; intended for small matrices.
HermEig herm_eig(const Mat& h);

/// Largest singular value. Rows/columns use the Euclidean norm directly.
double op_norm(const Mat& m);

/// Matrix exponential by scaling-and-squaring with an error-controlled
/// Taylor sum of the scaled block.
Mat expm(const Mat& m);

}  // namespace linalg

Mat operator*(const Mat& x, const Mat& y);
Mat operator+(const Mat& x, const Mat& y);
Mat operator-(const Mat& x, const Mat& y);
Mat operator*(cx s, const Mat& x);

}  // namespace qlw
