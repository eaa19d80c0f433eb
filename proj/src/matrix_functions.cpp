#include "leibrack/matrix_functions.hpp"

#include <cmath>
#include <sstream>

namespace leibrack {

namespace {

template <typename T> std::optional<std::size_t> nilpotency_index_impl(const Matrix<T> &m) {
  if (!m.is_square())
    throw DimensionError("nilpotency of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0 || m.is_zero())
    return std::size_t{1};
  Matrix<T> power = m;
  for (std::size_t d = 2; d <= n; ++d) {
    power = power * m;
    if (power.is_zero())
      return d;
  }
  return std::nullopt;
}

// Finite exp series for N with N^d = 0.
template <typename T> Matrix<T> exp_series(const Matrix<T> &m, std::size_t index) {
  const std::size_t n = m.rows();
  Matrix<T> result = Matrix<T>::identity(n);
  Matrix<T> term = Matrix<T>::identity(n);
  for (std::size_t j = 1; j < index; ++j) {
    term = term * m;
    term *= T(1) / T(static_cast<long>(j));
    result += term;
  }
  return result;
}

// Finite log series for I + X with X^d = 0.
template <typename T> Matrix<T> log_series(const Matrix<T> &x, std::size_t index) {
  const std::size_t n = x.rows();
  Matrix<T> result(n, n);
  Matrix<T> power = Matrix<T>::identity(n);
  for (std::size_t k = 1; k < index; ++k) {
    power = power * x;
    const T coeff = T(k % 2 == 1 ? 1L : -1L) / T(static_cast<long>(k));
    result += power * coeff;
  }
  return result;
}

FloatMatrix pade_exp(const FloatMatrix &a) {
  // [6/6] Pade approximant after scaling to ||A||_1 <= 1/2.
  constexpr int q = 6;
  const std::size_t n = a.rows();
  const double norm = norm1(a);
  int squarings = 0;
  if (norm > 0.5)
    squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const FloatMatrix scaled = a * std::ldexp(1.0, -squarings);

  FloatMatrix num = FloatMatrix::identity(n);
  FloatMatrix den = FloatMatrix::identity(n);
  FloatMatrix power = FloatMatrix::identity(n);
  double c = 1.0;
  for (int k = 1; k <= q; ++k) {
    c *= static_cast<double>(q - k + 1) / static_cast<double>(k * (2 * q - k + 1));
    power = power * scaled;
    num += power * c;
    den += power * ((k % 2 == 0) ? c : -c);
  }
  FloatMatrix result = solve(den, num);
  for (int s = 0; s < squarings; ++s)
    result = result * result;
  return result;
}

FloatMatrix denman_beavers_sqrt(const FloatMatrix &a) {
  const std::size_t n = a.rows();
  FloatMatrix y = a;
  FloatMatrix z = FloatMatrix::identity(n);
  for (int it = 0; it < 100; ++it) {
    const FloatMatrix y_inv = inverse(y);
    const FloatMatrix z_inv = inverse(z);
    FloatMatrix y_next = (y + z_inv) * 0.5;
    FloatMatrix z_next = (z + y_inv) * 0.5;
    const double change = max_abs(y_next - y);
    y = std::move(y_next);
    z = std::move(z_next);
    if (change <= 1e-16 * std::max(1.0, max_abs(y)))
      break;
  }
  return y;
}

FloatMatrix gregory_log(const FloatMatrix &a) {
  // log A = 2 atanh(Z), Z = (A - I)(A + I)^{-1}, valid for A close to I.
  const std::size_t n = a.rows();
  const FloatMatrix id = FloatMatrix::identity(n);
  const FloatMatrix z = (a - id) * inverse(a + id);
  const FloatMatrix z2 = z * z;
  FloatMatrix power = z;
  FloatMatrix sum = z;
  for (int k = 1; k < 200; ++k) {
    power = power * z2;
    const FloatMatrix term = power * (1.0 / static_cast<double>(2 * k + 1));
    sum += term;
    if (max_abs(term) <= 1e-18 * std::max(1.0, max_abs(sum)))
      break;
  }
  return sum * 2.0;
}

std::string chart_message(double norm) {
  std::ostringstream os;
  os << "matrix_log: ||m - I||_1 = " << norm << " is outside the unit chart";
  return os.str();
}

} // namespace

std::optional<std::size_t> nilpotency_index(const ExactMatrix &m) { return nilpotency_index_impl(m); }
std::optional<std::size_t> nilpotency_index(const FloatMatrix &m) { return nilpotency_index_impl(m); }

MatrixFunctionResult matrix_exp(const ExactMatrix &m) {
  if (!m.is_square())
    throw DimensionError("matrix_exp of non-square matrix");
  MatrixFunctionResult out;
  if (const auto index = nilpotency_index(m)) {
    out.exact = exp_series(m, *index);
    out.value = to_float(*out.exact);
  } else {
    out.value = matrix_exp(to_float(m));
    out.float_fallback = true;
  }
  return out;
}

FloatMatrix matrix_exp(const FloatMatrix &m) {
  if (!m.is_square())
    throw DimensionError("matrix_exp of non-square matrix");
  if (const auto index = nilpotency_index(m))
    return exp_series(m, *index);
  return pade_exp(m);
}

MatrixFunctionResult matrix_log(const ExactMatrix &m) {
  if (!m.is_square())
    throw DimensionError("matrix_log of non-square matrix");
  const ExactMatrix x = m - ExactMatrix::identity(m.rows());
  MatrixFunctionResult out;
  // Unipotent input: the series terminates and log is defined globally.
  if (const auto index = nilpotency_index(x)) {
    out.exact = log_series(x, *index);
    out.value = to_float(*out.exact);
    return out;
  }
  if (norm1(x) >= Rational(1))
    throw OutOfChartError(chart_message(norm1(x).to_double()));
  out.value = matrix_log(to_float(m));
  out.float_fallback = true;
  return out;
}

FloatMatrix matrix_log(const FloatMatrix &m) {
  if (!m.is_square())
    throw DimensionError("matrix_log of non-square matrix");
  const std::size_t n = m.rows();
  const FloatMatrix id = FloatMatrix::identity(n);
  const FloatMatrix x = m - id;
  const double norm = norm1(x);
  if (!(norm < 1.0))
    throw OutOfChartError(chart_message(norm));
  if (const auto index = nilpotency_index(x))
    return log_series(x, *index);
  FloatMatrix a = m;
  int roots = 0;
  while (norm1(a - id) > 0.25 && roots < 60) {
    a = denman_beavers_sqrt(a);
    ++roots;
  }
  return gregory_log(a) * std::ldexp(1.0, roots);
}

} // namespace leibrack
