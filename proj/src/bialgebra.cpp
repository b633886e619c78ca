#include "qlw/bialgebra.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qlw {

namespace {

double abs_max(double a, double b) { return a > b ? a : b; }

// Sparse view of the product tensor: nonzeros of b_p b_r.
struct SparseMult {
  std::size_t d;
  std::vector<std::vector<std::pair<std::size_t, cx>>> entries;  // indexed p*d+r

  explicit SparseMult(const FiniteBialgebra& a) : d(a.dim), entries(a.dim * a.dim) {
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t u = 0; u < d; ++u) {
          const cx c = a.m(p, r, u);
          if (c != cx(0.0)) entries[p * d + r].push_back({u, c});
        }
  }
};

}  // namespace

void FiniteBialgebra::check_shapes() const {
  const std::size_t d = dim;
  if (d == 0) throw std::invalid_argument("bialgebra: dim must be positive");
  if (basis_labels.size() != d) throw std::invalid_argument("bialgebra: label count != dim");
  if (mult.size() != d * d * d) throw std::invalid_argument("bialgebra: product tensor shape");
  if (unit.size() != d) throw std::invalid_argument("bialgebra: unit vector shape");
  if (star.rows != d || star.cols != d) throw std::invalid_argument("bialgebra: star matrix shape");
  if (counit.size() != d) throw std::invalid_argument("bialgebra: counit row shape");
  if (coproduct.rows != d * d || coproduct.cols != d)
    throw std::invalid_argument("bialgebra: coproduct matrix shape");
  if (faithful_rep.size() != d) throw std::invalid_argument("bialgebra: representation count != dim");
  const std::size_t r = rep_dim();
  if (r == 0) throw std::invalid_argument("bialgebra: representation dimension must be positive");
  for (const Mat& m : faithful_rep)
    if (m.rows != r || m.cols != r)
      throw std::invalid_argument("bialgebra: representation matrix shape");
}

CVec FiniteBialgebra::multiply(const CVec& x, const CVec& y) const {
  CVec out(dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i] == cx(0.0)) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      const cx w = x[i] * y[j];
      if (w == cx(0.0)) continue;
      for (std::size_t k = 0; k < dim; ++k) out[k] += w * m(i, j, k);
    }
  }
  return out;
}

CVec FiniteBialgebra::star_of(const CVec& x) const {
  CVec out(dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) {
    const cx c = std::conj(x[i]);
    if (c == cx(0.0)) continue;
    for (std::size_t k = 0; k < dim; ++k) out[k] += c * star(i, k);
  }
  return out;
}

cx FiniteBialgebra::counit_of(const CVec& x) const {
  cx s = 0.0;
  for (std::size_t i = 0; i < dim; ++i) s += x[i] * counit[i];
  return s;
}

CVec FiniteBialgebra::coproduct_of(const CVec& x) const {
  CVec out(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i] == cx(0.0)) continue;
    for (std::size_t row = 0; row < dim * dim; ++row) out[row] += coproduct(row, i) * x[i];
  }
  return out;
}

Mat FiniteBialgebra::rep_of(const CVec& x) const {
  Mat out(rep_dim(), rep_dim());
  for (std::size_t i = 0; i < dim; ++i)
    if (x[i] != cx(0.0)) linalg::add_scaled(out, x[i], faithful_rep[i]);
  return out;
}

Mat FiniteBialgebra::left_mult(std::size_t i) const {
  Mat out(dim, dim);
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t k = 0; k < dim; ++k) out(k, j) = m(i, j, k);
  return out;
}

double FiniteBialgebra::elem_op_norm(const CVec& x) const { return linalg::op_norm(rep_of(x)); }

CVec FiniteBialgebra::basis_vector(std::size_t i) const {
  CVec v(dim, 0.0);
  v[i] = 1.0;
  return v;
}

CVec FiniteBialgebra::star_row(std::size_t i) const {
  CVec v(dim);
  for (std::size_t k = 0; k < dim; ++k) v[k] = star(i, k);
  return v;
}

CVec FiniteBialgebra::tensor_multiply(const CVec& x, const CVec& y) const {
  const std::size_t d = dim;
  const SparseMult sp(*this);
  CVec out(d * d, 0.0);
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q) {
      const cx xv = x[p * d + q];
      if (xv == cx(0.0)) continue;
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t s = 0; s < d; ++s) {
          const cx w = xv * y[r * d + s];
          if (w == cx(0.0)) continue;
          for (const auto& [u, cu] : sp.entries[p * d + r])
            for (const auto& [v, cv] : sp.entries[q * d + s]) out[u * d + v] += w * cu * cv;
        }
    }
  return out;
}

CVec FiniteBialgebra::tensor_star(const CVec& x) const {
  const std::size_t d = dim;
  CVec out(d * d, 0.0);
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q) {
      const cx c = std::conj(x[p * d + q]);
      if (c == cx(0.0)) continue;
      for (std::size_t u = 0; u < d; ++u) {
        const cx su = star(p, u);
        if (su == cx(0.0)) continue;
        for (std::size_t v = 0; v < d; ++v) out[u * d + v] += c * su * star(q, v);
      }
    }
  return out;
}

cx Functional::operator()(const CVec& x) const {
  cx s = 0.0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) s += x[i] * coeffs[i];
  return s;
}

double ValidationReport::max_residual() const {
  double r = 0.0;
  for (const auto& e : entries) r = abs_max(r, e.residual);
  return r;
}

std::string ValidationReport::table() const {
  std::ostringstream os;
  for (const auto& e : entries) {
    os.setf(std::ios::scientific);
    os.precision(3);
    os << (e.residual <= tol ? "  ok   " : "  FAIL ") << e.residual << "  " << e.axiom << "\n";
  }
  os << (passed ? "passed" : "FAILED") << " (tol " << tol << ")\n";
  return os.str();
}

ValidationReport validate_bialgebra(const FiniteBialgebra& a, double tol) {
  a.check_shapes();
  const std::size_t d = a.dim;
  ValidationReport rep;
  rep.tol = tol;
  auto push = [&](const std::string& name, double residual) {
    rep.entries.push_back({name, residual});
  };

  // Associativity of the product tensor.
  double res = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t q = 0; q < d; ++q) {
          cx lhs = 0.0, rhs = 0.0;
          for (std::size_t p = 0; p < d; ++p) {
            lhs += a.m(i, j, p) * a.m(p, k, q);
            rhs += a.m(j, k, p) * a.m(i, p, q);
          }
          res = abs_max(res, std::abs(lhs - rhs));
        }
  push("associativity", res);

  // Unit element.
  res = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    const CVec bi = a.basis_vector(i);
    const CVec lu = a.multiply(a.unit, bi);
    const CVec ru = a.multiply(bi, a.unit);
    for (std::size_t k = 0; k < d; ++k) {
      const cx want = (k == i) ? cx(1.0) : cx(0.0);
      res = abs_max(res, std::abs(lu[k] - want));
      res = abs_max(res, std::abs(ru[k] - want));
    }
  }
  push("unit_law", res);

  // Involution: conj(S) S = I, antimultiplicativity, 1^* = 1.
  res = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t l = 0; l < d; ++l) {
      cx s = 0.0;
      for (std::size_t k = 0; k < d; ++k) s += std::conj(a.star(i, k)) * a.star(k, l);
      res = abs_max(res, std::abs(s - ((i == l) ? cx(1.0) : cx(0.0))));
    }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      CVec prod(d, 0.0);
      for (std::size_t k = 0; k < d; ++k) prod[k] = a.m(i, j, k);
      const CVec lhs = a.star_of(prod);
      const CVec rhs = a.multiply(a.star_row(j), a.star_row(i));
      for (std::size_t k = 0; k < d; ++k) res = abs_max(res, std::abs(lhs[k] - rhs[k]));
    }
  {
    const CVec su = a.star_of(a.unit);
    for (std::size_t k = 0; k < d; ++k) res = abs_max(res, std::abs(su[k] - a.unit[k]));
  }
  push("involution", res);

  // Counit is a unital *-homomorphism.
  res = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      cx lhs = 0.0;
      for (std::size_t k = 0; k < d; ++k) lhs += a.m(i, j, k) * a.counit[k];
      res = abs_max(res, std::abs(lhs - a.counit[i] * a.counit[j]));
    }
  res = abs_max(res, std::abs(a.counit_of(a.unit) - cx(1.0)));
  for (std::size_t i = 0; i < d; ++i) {
    const cx se = a.counit_of(a.star_row(i));
    res = abs_max(res, std::abs(se - std::conj(a.counit[i])));
  }
  push("hom_counit", res);

  // Coproduct is a unital *-homomorphism.
  res = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const CVec di = a.coproduct_of(a.basis_vector(i));
      const CVec dj = a.coproduct_of(a.basis_vector(j));
      const CVec prod = a.tensor_multiply(di, dj);
      CVec want(d * d, 0.0);
      for (std::size_t k = 0; k < d; ++k) {
        const cx c = a.m(i, j, k);
        if (c == cx(0.0)) continue;
        for (std::size_t row = 0; row < d * d; ++row) want[row] += c * a.coproduct(row, k);
      }
      for (std::size_t row = 0; row < d * d; ++row) res = abs_max(res, std::abs(prod[row] - want[row]));
    }
  {
    const CVec du = a.coproduct_of(a.unit);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        res = abs_max(res, std::abs(du[j * d + k] - a.unit[j] * a.unit[k]));
  }
  for (std::size_t i = 0; i < d; ++i) {
    const CVec lhs = a.coproduct_of(a.star_row(i));
    const CVec rhs = a.tensor_star(a.coproduct_of(a.basis_vector(i)));
    for (std::size_t row = 0; row < d * d; ++row) res = abs_max(res, std::abs(lhs[row] - rhs[row]));
  }
  push("hom_coproduct", res);

  // Coassociativity.
  res = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = 0; q < d; ++q)
        for (std::size_t k = 0; k < d; ++k) {
          cx lhs = 0.0, rhs = 0.0;
          for (std::size_t j = 0; j < d; ++j) {
            lhs += a.coproduct(p * d + q, j) * a.coproduct(j * d + k, i);
            rhs += a.coproduct(p * d + j, i) * a.coproduct(q * d + k, j);
          }
          res = abs_max(res, std::abs(lhs - rhs));
        }
  push("coassociativity", res);

  // Counit law.
  res = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      cx left = 0.0, right = 0.0;
      for (std::size_t j = 0; j < d; ++j) {
        left += a.counit[j] * a.coproduct(j * d + k, i);
        right += a.counit[j] * a.coproduct(k * d + j, i);
      }
      const cx want = (k == i) ? cx(1.0) : cx(0.0);
      res = abs_max(res, std::abs(left - want));
      res = abs_max(res, std::abs(right - want));
    }
  push("counit_law", res);

  // Faithful representation: unital *-homomorphism.
  res = 0.0;
  {
    const Mat ru = a.rep_of(a.unit);
    res = abs_max(res, linalg::max_abs_diff(ru, Mat::identity(a.rep_dim())));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        Mat want(a.rep_dim(), a.rep_dim());
        for (std::size_t k = 0; k < d; ++k)
          if (a.m(i, j, k) != cx(0.0)) linalg::add_scaled(want, a.m(i, j, k), a.faithful_rep[k]);
        res = abs_max(res, linalg::max_abs_diff(a.faithful_rep[i] * a.faithful_rep[j], want));
      }
    for (std::size_t i = 0; i < d; ++i)
      res = abs_max(res, linalg::max_abs_diff(a.rep_of(a.star_row(i)),
                                              linalg::adjoint(a.faithful_rep[i])));
  }
  push("rep_homomorphism", res);

  // Injectivity of the representation as a linear map (a rank decision, so
  // reported as 0 or 1 rather than a residual magnitude).
  {
    Mat gram(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        cx s = 0.0;
        for (std::size_t e = 0; e < a.faithful_rep[i].a.size(); ++e)
          s += std::conj(a.faithful_rep[i].a[e]) * a.faithful_rep[j].a[e];
        gram(i, j) = s;
      }
    const auto eig = linalg::herm_eig(gram);
    const double lo = eig.values.front(), hi = eig.values.back();
    const bool injective = lo > 1e-8 * std::max(1.0, hi);
    push("rep_injectivity", injective ? 0.0 : 1.0);
  }

  rep.passed = true;
  for (const auto& e : rep.entries) rep.passed = rep.passed && e.residual <= tol;
  return rep;
}

std::size_t GroupTable::inverse(std::size_t g) const {
  for (std::size_t h = 0; h < order; ++h)
    if (table[g][h] == 0) return h;
  throw std::invalid_argument("group table: element has no inverse");
}

void GroupTable::validate() const {
  const std::size_t n = order;
  if (n == 0 || table.size() != n) throw std::invalid_argument("group table: bad shape");
  for (const auto& row : table) {
    if (row.size() != n) throw std::invalid_argument("group table: bad row");
    for (std::size_t v : row)
      if (v >= n) throw std::invalid_argument("group table: entry out of range");
  }
  for (std::size_t g = 0; g < n; ++g)
    if (table[0][g] != g || table[g][0] != g)
      throw std::invalid_argument("group table: element 0 is not an identity");
  for (std::size_t g = 0; g < n; ++g) (void)inverse(g);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      for (std::size_t k = 0; k < n; ++k)
        if (table[table[g][h]][k] != table[g][table[h][k]])
          throw std::invalid_argument("group table: not associative");
}

GroupTable cyclic_group_table(std::size_t n) {
  GroupTable g;
  g.order = n;
  g.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g.table[i][j] = (i + j) % n;
  return g;
}

namespace {

using Perm = std::vector<std::size_t>;

Perm compose(const Perm& p, const Perm& q) {  // (p q)(x) = p(q(x))
  Perm out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) out[x] = p[q[x]];
  return out;
}

GroupTable table_from_perms(const std::vector<Perm>& elems) {
  GroupTable g;
  g.order = elems.size();
  g.table.assign(g.order, std::vector<std::size_t>(g.order));
  for (std::size_t i = 0; i < g.order; ++i)
    for (std::size_t j = 0; j < g.order; ++j) {
      const Perm prod = compose(elems[i], elems[j]);
      const auto it = std::find(elems.begin(), elems.end(), prod);
      if (it == elems.end()) throw std::logic_error("permutation set not closed");
      g.table[i][j] = static_cast<std::size_t>(it - elems.begin());
    }
  return g;
}

}  // namespace

GroupTable symmetric_group_3_table() {
  const std::vector<Perm> elems = {
      {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  return table_from_perms(elems);
}

std::vector<std::string> symmetric_group_3_labels() {
  return {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
}

GroupTable dihedral_group_4_table() {
  const Perm r = {1, 2, 3, 0};
  const Perm s = {0, 3, 2, 1};
  const Perm e = {0, 1, 2, 3};
  std::vector<Perm> elems = {e, r, compose(r, r), compose(r, compose(r, r))};
  const std::size_t rot = elems.size();
  for (std::size_t i = 0; i < rot; ++i) elems.push_back(compose(elems[i], s));
  return table_from_perms(elems);
}

std::vector<std::string> dihedral_group_4_labels() {
  return {"e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"};
}

std::vector<std::string> cyclic_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("g" + std::to_string(i));
  return out;
}

FiniteBialgebra build_group_algebra(const GroupTable& g, std::vector<std::string> labels) {
  g.validate();
  const std::size_t d = g.order;
  FiniteBialgebra a;
  a.dim = d;
  a.basis_labels = labels.empty() ? cyclic_labels(d) : std::move(labels);
  a.mult.assign(d * d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) a.mult[(i * d + j) * d + g.mul(i, j)] = 1.0;
  a.unit.assign(d, 0.0);
  a.unit[0] = 1.0;
  a.star = Mat(d, d);
  for (std::size_t i = 0; i < d; ++i) a.star(i, g.inverse(i)) = 1.0;
  a.counit.assign(d, 1.0);
  a.coproduct = Mat(d * d, d);
  for (std::size_t i = 0; i < d; ++i) a.coproduct(i * d + i, i) = 1.0;
  a.faithful_rep.assign(d, Mat(d, d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) a.faithful_rep[i](g.mul(i, k), k) = 1.0;
  return a;
}

FiniteBialgebra build_function_algebra(const GroupTable& g, std::vector<std::string> labels) {
  g.validate();
  const std::size_t d = g.order;
  FiniteBialgebra a;
  a.dim = d;
  a.basis_labels = labels.empty() ? cyclic_labels(d) : std::move(labels);
  a.mult.assign(d * d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i) a.mult[(i * d + i) * d + i] = 1.0;
  a.unit.assign(d, 1.0);
  a.star = Mat::identity(d);
  a.counit.assign(d, 0.0);
  a.counit[0] = 1.0;
  a.coproduct = Mat(d * d, d);
  for (std::size_t h = 0; h < d; ++h)
    for (std::size_t hp = 0; hp < d; ++hp) a.coproduct(h * d + hp, g.mul(h, hp)) = 1.0;
  a.faithful_rep.assign(d, Mat(d, d));
  for (std::size_t i = 0; i < d; ++i) a.faithful_rep[i](i, i) = 1.0;
  return a;
}

Functional counit_functional(const FiniteBialgebra& a) { return Functional{a.counit}; }

Functional convolve(const FiniteBialgebra& a, const Functional& mu, const Functional& nu) {
  const std::size_t d = a.dim;
  if (mu.dim() != d || nu.dim() != d)
    throw std::invalid_argument("convolve: functional dimension mismatch");
  Functional out;
  out.coeffs.assign(d, 0.0);
  for (std::size_t j = 0; j < d; ++j) {
    if (mu.coeffs[j] == cx(0.0)) continue;
    for (std::size_t k = 0; k < d; ++k) {
      const cx w = mu.coeffs[j] * nu.coeffs[k];
      if (w == cx(0.0)) continue;
      for (std::size_t i = 0; i < d; ++i) out.coeffs[i] += w * a.coproduct(j * d + k, i);
    }
  }
  return out;
}

Functional convolution_power(const FiniteBialgebra& a, const Functional& f, std::size_t n) {
  Functional acc = counit_functional(a);
  for (std::size_t i = 0; i < n; ++i) acc = convolve(a, acc, f);
  return acc;
}

Mat conv_operator(const FiniteBialgebra& a, const Functional& gamma) {
  const std::size_t d = a.dim;
  if (gamma.dim() != d) throw std::invalid_argument("conv_operator: functional dimension mismatch");
  Mat t(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) {
      cx s = 0.0;
      for (std::size_t k = 0; k < d; ++k) s += a.coproduct(j * d + k, i) * gamma.coeffs[k];
      t(j, i) = s;
    }
  return t;
}

Functional convolution_exponential(const FiniteBialgebra& a, const Functional& gamma, double t) {
  if (t < 0.0) throw std::invalid_argument("convolution_exponential: t must be nonnegative");
  const Mat e = linalg::expm(linalg::scale(t, conv_operator(a, gamma)));
  Functional out;
  out.coeffs.assign(a.dim, 0.0);
  for (std::size_t i = 0; i < a.dim; ++i) {
    cx s = 0.0;
    for (std::size_t j = 0; j < a.dim; ++j) s += a.counit[j] * e(j, i);
    out.coeffs[i] = s;
  }
  return out;
}

double hermitian_residual(const FiniteBialgebra& a, const Functional& f) {
  double res = 0.0;
  for (std::size_t i = 0; i < a.dim; ++i) {
    const cx fs = f(a.star_row(i));
    res = abs_max(res, std::abs(fs - std::conj(f.coeffs[i])));
  }
  return res;
}

Mat positivity_matrix(const FiniteBialgebra& a, const Functional& f) {
  const std::size_t d = a.dim;
  Mat p(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    const CVec bi_star = a.star_row(i);
    for (std::size_t j = 0; j < d; ++j) p(i, j) = f(a.multiply(bi_star, a.basis_vector(j)));
  }
  return p;
}

StateCertificate certify_state(const FiniteBialgebra& a, const Functional& f, double tol) {
  StateCertificate cert;
  cert.hermitian_residual = hermitian_residual(a, f);
  Mat p = positivity_matrix(a, f);
  const Mat pa = linalg::adjoint(p);
  cert.hermitian_residual = abs_max(cert.hermitian_residual, linalg::max_abs_diff(p, pa));
  for (std::size_t i = 0; i < p.a.size(); ++i) p.a[i] = 0.5 * (p.a[i] + pa.a[i]);
  const auto eig = linalg::herm_eig(p);
  cert.min_eigenvalue = eig.values.front();
  cert.unit_residual = std::abs(f(a.unit) - cx(1.0));
  cert.passed = cert.min_eigenvalue >= -tol && cert.unit_residual <= tol &&
                cert.hermitian_residual <= tol;
  return cert;
}

double map_norm_estimate(const FiniteBialgebra& a, std::span<const Mat> psi_on_basis,
                         std::size_t samples, std::uint64_t seed) {
  const std::size_t d = a.dim;
  if (psi_on_basis.size() != d)
    throw std::invalid_argument("map_norm_estimate: psi must be given on every basis element");
  for (const Mat& m : psi_on_basis)
    if (!m.same_shape(psi_on_basis[0]))
      throw std::invalid_argument("map_norm_estimate: inconsistent psi shapes");

  double best = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    const double nb = a.elem_op_norm(a.basis_vector(i));
    if (nb > 0.0) best = abs_max(best, linalg::op_norm(psi_on_basis[i]) / nb);
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const std::size_t rows = psi_on_basis[0].rows, cols = psi_on_basis[0].cols;
  for (std::size_t s = 0; s < samples; ++s) {
    CVec x(d);
    for (std::size_t i = 0; i < d; ++i) {
      const double re = gauss(rng), im = gauss(rng);
      x[i] = cx(re, im);
    }
    const double nx = a.elem_op_norm(x);
    if (nx <= 1e-300) continue;
    Mat px(rows, cols);
    for (std::size_t i = 0; i < d; ++i) linalg::add_scaled(px, x[i], psi_on_basis[i]);
    best = abs_max(best, linalg::op_norm(px) / nx);
  }
  return best;
}

}  // namespace qlw
