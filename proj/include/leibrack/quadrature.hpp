#pragma once

#include "leibrack/matrix.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace leibrack {

/// Gauss-Legendre rule mapped to [0, 1]. Exact for polynomials of degree <= 2k - 1.
class QuadratureRule {
public:
  /// Builds the order-k rule. Throws std::invalid_argument for k == 0.
  explicit QuadratureRule(std::size_t order = 8);

  [[nodiscard]] std::size_t order() const { return nodes_.size(); }
  [[nodiscard]] const std::vector<double> &nodes() const { return nodes_; }
  [[nodiscard]] const std::vector<double> &weights() const { return weights_; }

private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

using VectorIntegrand = std::function<FloatVector(double)>;

/// Integral over [0, 1] of a vector-valued integrand, componentwise.
FloatVector integrate_01(const QuadratureRule &rule, const VectorIntegrand &integrand);

/// Scalar convenience overload.
double integrate_01(const QuadratureRule &rule, const std::function<double(double)> &integrand);

} // namespace leibrack
