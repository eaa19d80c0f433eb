#pragma once

#include "leibrack/rational.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace leibrack {

class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

template <typename T> using Vector = std::vector<T>;
using ExactVector = Vector<Rational>;
using FloatVector = Vector<double>;

/// Dense row-major matrix over either exact rationals or doubles.
///
/// The scalar type is part of the type, so exact and float matrices never
/// combine without an explicit to_float().
template <typename T> class Matrix {
public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto &r : rows) {
      if (r.size() != cols_)
        throw DimensionError("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = T(1);
    return m;
  }

  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(std::size_t rows, std::span<const Vector<T>> columns) {
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows)
        throw DimensionError("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i)
        m(i, j) = columns[j][i];
    }
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }
  [[nodiscard]] std::span<const T> data() const { return data_; }

  T &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] Vector<T> row(std::size_t i) const {
    return Vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  [[nodiscard]] Vector<T> col(std::size_t j) const {
    Vector<T> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      v[i] = (*this)(i, j);
    return v;
  }

  [[nodiscard]] bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T &x) { return x == T(0); });
  }

  [[nodiscard]] Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix &operator+=(const Matrix &o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k)
      data_[k] += o.data_[k];
    return *this;
  }
  Matrix &operator-=(const Matrix &o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k)
      data_[k] -= o.data_[k];
    return *this;
  }
  Matrix &operator*=(const T &s) {
    for (auto &x : data_)
      x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T &s) { return a *= s; }
  friend Matrix operator*(const T &s, Matrix a) { return a *= s; }
  friend Matrix operator-(Matrix a) {
    for (auto &x : a.data_)
      x = -x;
    return a;
  }

  friend Matrix operator*(const Matrix &a, const Matrix &b) {
    if (a.cols_ != b.rows_)
      throw DimensionError("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T &aik = a(i, k);
        if (aik == T(0))
          continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Vector<T> operator*(const Matrix &a, std::span<const T> v) {
    if (a.cols_ != v.size())
      throw DimensionError("matrix-vector shape mismatch");
    Vector<T> out(a.rows_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        out[i] += a(i, j) * v[j];
    return out;
  }
  friend Vector<T> operator*(const Matrix &a, const Vector<T> &v) { return a * std::span<const T>(v); }

  friend bool operator==(const Matrix &a, const Matrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  void check_same_shape(const Matrix &o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ExactMatrix = Matrix<Rational>;
using FloatMatrix = Matrix<double>;

FloatMatrix to_float(const ExactMatrix &m);
FloatVector to_float(std::span<const Rational> v);

/// Induced 1-norm (maximum absolute column sum).
double norm1(const FloatMatrix &m);
Rational norm1(const ExactMatrix &m);
double max_abs(const FloatMatrix &m);
double max_abs(std::span<const double> v);
double max_abs_diff(std::span<const double> a, std::span<const double> b);

// Vector helpers shared by both scalar kinds.
template <typename T> Vector<T> add(std::span<const T> a, std::span<const T> b) {
  if (a.size() != b.size())
    throw DimensionError("vector length mismatch");
  Vector<T> r(a.begin(), a.end());
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] += b[i];
  return r;
}
template <typename T> Vector<T> sub(std::span<const T> a, std::span<const T> b) {
  if (a.size() != b.size())
    throw DimensionError("vector length mismatch");
  Vector<T> r(a.begin(), a.end());
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] -= b[i];
  return r;
}
template <typename T> Vector<T> scale(const T &s, std::span<const T> a) {
  Vector<T> r(a.begin(), a.end());
  for (auto &x : r)
    x *= s;
  return r;
}
template <typename T> bool is_zero(std::span<const T> v) {
  return std::all_of(v.begin(), v.end(), [](const T &x) { return x == T(0); });
}
template <typename T> Vector<T> unit_vector(std::size_t n, std::size_t i) {
  Vector<T> v(n, T(0));
  v.at(i) = T(1);
  return v;
}

// ---- exact linear algebra -------------------------------------------------

struct EchelonForm {
  ExactMatrix reduced;              ///< reduced row echelon form
  std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
};

EchelonForm rref(ExactMatrix m);
std::size_t rank(const ExactMatrix &m);

/// Exact basis of ker(m), one vector per free column of the echelon form.
/// Each basis vector has a 1 in its free column and 0 in every other free column.
std::vector<ExactVector> nullspace(const ExactMatrix &m);

/// Nonzero rows of the reduced echelon form: a basis of the row space.
std::vector<ExactVector> row_space_basis(const ExactMatrix &m);

/// Exact inverse; throws std::domain_error when singular.
ExactMatrix inverse(const ExactMatrix &m);

// ---- float linear algebra -------------------------------------------------

/// LU with partial pivoting. Throws std::domain_error when numerically singular.
FloatMatrix inverse(const FloatMatrix &m);
FloatMatrix solve(const FloatMatrix &a, const FloatMatrix &b);

} // namespace leibrack
