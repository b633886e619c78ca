#include "qlw/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qlw {

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Mat Mat::zero(std::size_t r, std::size_t c) { return Mat(r, c); }

Mat Mat::diag(const CVec& d) {
  Mat m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Mat Mat::column(const CVec& v) {
  Mat m(v.size(), 1);
  m.a = v;
  return m;
}

Mat Mat::row(const CVec& v) {
  Mat m(1, v.size());
  m.a = v;
  return m;
}

namespace linalg {

namespace {
// Anything smaller runs serially; the fork/join overhead dominates below this.
constexpr std::size_t kParallelWork = std::size_t(1) << 16;

void check_mul(const Mat& x, const Mat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matmul: inner dimensions differ");
}
}  // namespace

namespace ref {

Mat matmul(const Mat& x, const Mat& y) {
  check_mul(x, y);
  Mat out(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      const cx xv = x(i, k);
      if (xv == cx(0.0)) continue;
      for (std::size_t j = 0; j < y.cols; ++j) out(i, j) += xv * y(k, j);
    }
  return out;
}

Mat kron(const Mat& x, const Mat& y) {
  Mat out(x.rows * y.rows, x.cols * y.cols);
  kron_acc(out, cx(1.0), x, y);
  return out;
}

void kron_acc(Mat& out, cx w, const Mat& x, const Mat& y) {
  for (std::size_t i1 = 0; i1 < x.rows; ++i1)
    for (std::size_t i2 = 0; i2 < y.rows; ++i2) {
      cx* dst = &out(i1 * y.rows + i2, 0);
      for (std::size_t j1 = 0; j1 < x.cols; ++j1) {
        const cx wx = w * x(i1, j1);
        if (wx == cx(0.0)) continue;
        const cx* src = &y(i2, 0);
        cx* d = dst + j1 * y.cols;
        for (std::size_t j2 = 0; j2 < y.cols; ++j2) d[j2] += wx * src[j2];
      }
    }
}

CVec matvec(const Mat& m, const CVec& v) {
  if (m.cols != v.size()) throw std::invalid_argument("matvec: dimension mismatch");
  CVec out(m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) {
    cx s = 0.0;
    const cx* row = &m(i, 0);
    for (std::size_t j = 0; j < m.cols; ++j) s += row[j] * v[j];
    out[i] = s;
  }
  return out;
}

}  // namespace ref

Mat matmul(const Mat& x, const Mat& y) {
  check_mul(x, y);
  const std::size_t work = x.rows * x.cols * y.cols;
  if (work < kParallelWork) return ref::matmul(x, y);
  Mat out(x.rows, y.cols);
#pragma omp parallel for schedule(static)
  for (long long ii = 0; ii < static_cast<long long>(x.rows); ++ii) {
    const std::size_t i = static_cast<std::size_t>(ii);
    for (std::size_t k = 0; k < x.cols; ++k) {
      const cx xv = x(i, k);
      if (xv == cx(0.0)) continue;
      const cx* src = &y(k, 0);
      cx* dst = &out(i, 0);
      for (std::size_t j = 0; j < y.cols; ++j) dst[j] += xv * src[j];
    }
  }
  return out;
}

Mat kron(const Mat& x, const Mat& y) {
  Mat out(x.rows * y.rows, x.cols * y.cols);
  kron_acc(out, cx(1.0), x, y);
  return out;
}

void kron_acc(Mat& out, cx w, const Mat& x, const Mat& y) {
  if (out.rows != x.rows * y.rows || out.cols != x.cols * y.cols)
    throw std::invalid_argument("kron_acc: output shape mismatch");
  const std::size_t work = out.rows * out.cols;
  if (work < kParallelWork) {
    ref::kron_acc(out, w, x, y);
    return;
  }
#pragma omp parallel for schedule(static)
  for (long long rr = 0; rr < static_cast<long long>(out.rows); ++rr) {
    const std::size_t r = static_cast<std::size_t>(rr);
    const std::size_t i1 = r / y.rows, i2 = r % y.rows;
    cx* dst = &out(r, 0);
    for (std::size_t j1 = 0; j1 < x.cols; ++j1) {
      const cx wx = w * x(i1, j1);
      if (wx == cx(0.0)) continue;
      const cx* src = &y(i2, 0);
      cx* d = dst + j1 * y.cols;
      for (std::size_t j2 = 0; j2 < y.cols; ++j2) d[j2] += wx * src[j2];
    }
  }
}

CVec matvec(const Mat& m, const CVec& v) {
  if (m.cols != v.size()) throw std::invalid_argument("matvec: dimension mismatch");
  const std::size_t work = m.rows * m.cols;
  if (work < kParallelWork) return ref::matvec(m, v);
  CVec out(m.rows);
#pragma omp parallel for schedule(static)
  for (long long ii = 0; ii < static_cast<long long>(m.rows); ++ii) {
    const std::size_t i = static_cast<std::size_t>(ii);
    cx s = 0.0;
    const cx* row = &m(i, 0);
    for (std::size_t j = 0; j < m.cols; ++j) s += row[j] * v[j];
    out[i] = s;
  }
  return out;
}

Mat adjoint(const Mat& m) {
  Mat out(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) out(j, i) = std::conj(m(i, j));
  return out;
}

Mat transpose(const Mat& m) {
  Mat out(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) out(j, i) = m(i, j);
  return out;
}

Mat add(const Mat& x, const Mat& y) {
  if (!x.same_shape(y)) throw std::invalid_argument("add: shape mismatch");
  Mat out = x;
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] += y.a[i];
  return out;
}

Mat sub(const Mat& x, const Mat& y) {
  if (!x.same_shape(y)) throw std::invalid_argument("sub: shape mismatch");
  Mat out = x;
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] -= y.a[i];
  return out;
}

Mat scale(cx s, const Mat& x) {
  Mat out = x;
  for (auto& v : out.a) v *= s;
  return out;
}

void add_scaled(Mat& x, cx s, const Mat& y) {
  if (!x.same_shape(y)) throw std::invalid_argument("add_scaled: shape mismatch");
  for (std::size_t i = 0; i < x.a.size(); ++i) x.a[i] += s * y.a[i];
}

cx dot(const CVec& x, const CVec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("dot: dimension mismatch");
  cx s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
  return s;
}

double norm2(const CVec& v) {
  double s = 0.0;
  for (const cx& z : v) s += std::norm(z);
  return std::sqrt(s);
}

CVec scale_vec(cx s, const CVec& v) {
  CVec out = v;
  for (auto& z : out) z *= s;
  return out;
}

double max_abs(const Mat& m) {
  double r = 0.0;
  for (const cx& z : m.a) r = std::max(r, std::abs(z));
  return r;
}

double max_abs_diff(const Mat& x, const Mat& y) {
  if (!x.same_shape(y)) throw std::invalid_argument("max_abs_diff: shape mismatch");
  double r = 0.0;
  for (std::size_t i = 0; i < x.a.size(); ++i) r = std::max(r, std::abs(x.a[i] - y.a[i]));
  return r;
}

double fro_norm(const Mat& m) {
  double s = 0.0;
  for (const cx& z : m.a) s += std::norm(z);
  return std::sqrt(s);
}

cx trace(const Mat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("trace: matrix not square");
  cx s = 0.0;
  for (std::size_t i = 0; i < m.rows; ++i) s += m(i, i);
  return s;
}

HermEig herm_eig(const Mat& h) {
  if (h.rows != h.cols) throw std::invalid_argument("herm_eig: matrix not square");
  const std::size_t n = h.rows;
  Mat a = h;
  Mat v = Mat::identity(n);
  if (n <= 1) {
    HermEig out;
    out.vectors = v;
    if (n == 1) out.values = {a(0, 0).real()};
    return out;
  }

  const double scale = std::max(1.0, fro_norm(a));
  const double eps = 1e-15 * scale;

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += 2.0 * std::norm(a(p, q));
    if (std::sqrt(off) <= eps) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cx apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag <= 1e-300) continue;
        const cx phase = apq / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        // Small-magnitude root of t^2 - 2*tau*t - 1 = 0.
        double t;
        if (tau >= 0.0)
          t = -1.0 / (tau + std::sqrt(1.0 + tau * tau));
        else
          t = 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cx spq = s * phase;        // enters column q update
        const cx spq_c = std::conj(spq); // enters column p update

        // a <- J^dagger a J with J(p,p)=c, J(p,q)=-s*phase, J(q,p)=s*conj(phase), J(q,q)=c
        for (std::size_t i = 0; i < n; ++i) {
          const cx aip = a(i, p), aiq = a(i, q);
          a(i, p) = c * aip + spq_c * aiq;
          a(i, q) = -spq * aip + c * aiq;
        }
        for (std::size_t j = 0; j < n; ++j) {
          const cx apj = a(p, j), aqj = a(q, j);
          a(p, j) = c * apj + spq * aqj;
          a(q, j) = -spq_c * apj + c * aqj;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const cx vip = v(i, p), viq = v(i, q);
          v(i, p) = c * vip + spq_c * viq;
          v(i, q) = -spq * vip + c * viq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t(0));
  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i).real();
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return diag[x] < diag[y]; });

  HermEig out;
  out.values.resize(n);
  out.vectors = Mat(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = diag[order[k]];
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

double op_norm(const Mat& m) {
  if (m.rows == 0 || m.cols == 0) return 0.0;
  if (m.rows == 1 || m.cols == 1) return norm2(m.a);
  const Mat g = matmul(adjoint(m), m);
  const HermEig e = herm_eig(g);
  const double top = e.values.empty() ? 0.0 : e.values.back();
  return std::sqrt(std::max(0.0, top));
}

Mat expm(const Mat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("expm: matrix not square");
  const std::size_t n = m.rows;
  const double nrm = fro_norm(m);
  int s = 0;
  double scaled = nrm;
  while (scaled > 0.5) {
    scaled *= 0.5;
    ++s;
  }
  Mat b = scale(std::ldexp(1.0, -s), m);

  Mat sum = Mat::identity(n);
  Mat term = Mat::identity(n);
  for (int k = 1; k <= 64; ++k) {
    term = matmul(term, b);
    term = scale(1.0 / k, term);
    for (std::size_t i = 0; i < sum.a.size(); ++i) sum.a[i] += term.a[i];
    if (fro_norm(term) < 1e-18 * std::max(1.0, fro_norm(sum))) break;
  }
  for (int k = 0; k < s; ++k) sum = matmul(sum, sum);
  return sum;
}

}  // namespace linalg

Mat operator*(const Mat& x, const Mat& y) { return linalg::matmul(x, y); }
Mat operator+(const Mat& x, const Mat& y) { return linalg::add(x, y); }
Mat operator-(const Mat& x, const Mat& y) { return linalg::sub(x, y); }
Mat operator*(cx s, const Mat& x) { return linalg::scale(s, x); }

}  // namespace qlw
