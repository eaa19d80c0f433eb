#pragma once

#include "leibrack/matrix.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace leibrack {

/// Dense multilinear map g^{(x)n} -> M with exact values.
///
/// Stored as an order-(n+1) tensor: the value on basis tuple (i1, ..., in) is
/// the coefficient vector at the flattened offset of (i1, ..., in).
class Cochain {
public:
  Cochain() = default;
  Cochain(std::size_t degree, std::size_t domain_dim, std::size_t coeff_dim);

  [[nodiscard]] std::size_t degree() const { return degree_; }
  [[nodiscard]] std::size_t domain_dim() const { return domain_dim_; }
  [[nodiscard]] std::size_t coeff_dim() const { return coeff_dim_; }
  /// Number of basis tuples, domain_dim^degree.
  [[nodiscard]] std::size_t tuple_count() const { return tuple_count_; }
  [[nodiscard]] std::span<const Rational> values() const { return values_; }

  /// Flattened index of a basis tuple (first index most significant).
  [[nodiscard]] std::size_t tuple_index(std::span<const std::size_t> indices) const;
  /// Inverse of tuple_index.
  [[nodiscard]] std::vector<std::size_t> tuple_at(std::size_t flat) const;

  [[nodiscard]] ExactVector value(std::span<const std::size_t> indices) const;
  [[nodiscard]] ExactVector value_at(std::size_t flat) const;
  Rational &at(std::span<const std::size_t> indices, std::size_t component);
  [[nodiscard]] const Rational &at(std::span<const std::size_t> indices, std::size_t component) const;
  Rational &at_flat(std::size_t flat, std::size_t component) { return values_[flat * coeff_dim_ + component]; }
  [[nodiscard]] const Rational &at_flat(std::size_t flat, std::size_t component) const {
    return values_[flat * coeff_dim_ + component];
  }

  /// Multilinear evaluation on arbitrary exact vectors.
  [[nodiscard]] ExactVector evaluate(std::span<const ExactVector> args) const;
  /// Multilinear evaluation on float vectors.
  [[nodiscard]] FloatVector evaluate(std::span<const FloatVector> args) const;

  [[nodiscard]] bool is_zero() const;

  friend bool operator==(const Cochain &a, const Cochain &b) = default;

private:
  std::size_t degree_ = 0;
  std::size_t domain_dim_ = 0;
  std::size_t coeff_dim_ = 0;
  std::size_t tuple_count_ = 1;
  std::vector<Rational> values_;
};

} // namespace leibrack
