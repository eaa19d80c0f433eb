#include "leibrack/matrix.hpp"

#include <limits>
#include <utility>

namespace leibrack {

FloatMatrix to_float(const ExactMatrix &m) {
  FloatMatrix f(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      f(i, j) = m(i, j).to_double();
  return f;
}

FloatVector to_float(std::span<const Rational> v) {
  FloatVector f(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    f[i] = v[i].to_double();
  return f;
}

double norm1(const FloatMatrix &m) {
  double best = 0.0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
      s += std::abs(m(i, j));
    best = std::max(best, s);
  }
  return best;
}

Rational norm1(const ExactMatrix &m) {
  Rational best(0);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Rational s(0);
    for (std::size_t i = 0; i < m.rows(); ++i)
      s += abs(m(i, j));
    if (s > best)
      best = s;
  }
  return best;
}

double max_abs(const FloatMatrix &m) { return max_abs(m.data()); }

double max_abs(std::span<const double> v) {
  double best = 0.0;
  for (double x : v)
    best = std::max(best, std::abs(x));
  return best;
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size())
    throw DimensionError("vector length mismatch");
  double best = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    best = std::max(best, std::abs(a[i] - b[i]));
  return best;
}

EchelonForm rref(ExactMatrix m) {
  EchelonForm out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m(pivot, c).is_zero())
      ++pivot;
    if (pivot == m.rows())
      continue;
    if (pivot != lead_row)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m(pivot, j), m(lead_row, j));
    const Rational inv = Rational(1) / m(lead_row, c);
    for (std::size_t j = c; j < m.cols(); ++j)
      m(lead_row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, c).is_zero())
        continue;
      const Rational f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        m(r, j) -= f * m(lead_row, j);
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const ExactMatrix &m) { return rref(m).pivots.size(); }

std::vector<ExactVector> nullspace(const ExactMatrix &m) {
  const EchelonForm e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots)
    is_pivot[p] = true;
  std::vector<ExactVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free])
      continue;
    ExactVector v(m.cols(), Rational(0));
    v[free] = Rational(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<ExactVector> row_space_basis(const ExactMatrix &m) {
  const EchelonForm e = rref(m);
  std::vector<ExactVector> rows;
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    rows.push_back(e.reduced.row(r));
  return rows;
}

ExactMatrix inverse(const ExactMatrix &m) {
  if (!m.is_square())
    throw DimensionError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  ExactMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug(i, j) = m(i, j);
    aug(i, n + i) = Rational(1);
  }
  const EchelonForm e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1)
    throw std::domain_error("singular matrix");
  ExactMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv(i, j) = e.reduced(i, n + j);
  return inv;
}

namespace {

struct LU {
  FloatMatrix lu;
  std::vector<std::size_t> perm;
};

LU lu_decompose(FloatMatrix a) {
  if (!a.is_square())
    throw DimensionError("LU of non-square matrix");
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i)
    perm[i] = i;
  const double scale = std::max(norm1(a), std::numeric_limits<double>::min());
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > std::abs(a(p, k)))
        p = i;
    if (std::abs(a(p, k)) <= 1e-14 * scale)
      throw std::domain_error("numerically singular matrix");
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(a(p, j), a(k, j));
      std::swap(perm[p], perm[k]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      a(i, k) /= a(k, k);
      const double f = a(i, k);
      if (f == 0.0)
        continue;
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) -= f * a(k, j);
    }
  }
  return {std::move(a), std::move(perm)};
}

} // namespace

FloatMatrix solve(const FloatMatrix &a, const FloatMatrix &b) {
  if (a.rows() != b.rows())
    throw DimensionError("solve shape mismatch");
  const LU f = lu_decompose(a);
  const std::size_t n = a.rows();
  FloatMatrix x(n, b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      double s = b(f.perm[i], c);
      for (std::size_t j = 0; j < i; ++j)
        s -= f.lu(i, j) * y[j];
      y[i] = s;
    }
    for (std::size_t ii = n; ii-- > 0;) {
      double s = y[ii];
      for (std::size_t j = ii + 1; j < n; ++j)
        s -= f.lu(ii, j) * x(j, c);
      x(ii, c) = s / f.lu(ii, ii);
    }
  }
  return x;
}

FloatMatrix inverse(const FloatMatrix &m) { return solve(m, FloatMatrix::identity(m.rows())); }

} // namespace leibrack
