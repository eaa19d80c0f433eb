#include "leibrack/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace leibrack {

QuadratureRule::QuadratureRule(std::size_t order) {
  if (order == 0)
    throw std::invalid_argument("quadrature order must be positive");
  const std::size_t k = order;
  nodes_.resize(k);
  weights_.resize(k);
  // Roots of P_k on [-1, 1] by Newton from the Chebyshev-like initial guess,
  // using the symmetry x_i = -x_{k-1-i}.
  const std::size_t half = (k + 1) / 2;
  for (std::size_t i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(k) + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t j = 2; j <= k; ++j) {
        const double p2 = ((2.0 * static_cast<double>(j) - 1.0) * x * p1 -
                           (static_cast<double>(j) - 1.0) * p0) /
                          static_cast<double>(j);
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(k) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16)
        break;
    }
    // Recompute derivative at the converged root for the weight.
    double p0 = 1.0;
    double p1 = x;
    for (std::size_t j = 2; j <= k; ++j) {
      const double p2 =
          ((2.0 * static_cast<double>(j) - 1.0) * x * p1 - (static_cast<double>(j) - 1.0) * p0) /
          static_cast<double>(j);
      p0 = p1;
      p1 = p2;
    }
    dp = static_cast<double>(k) * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // Map [-1, 1] -> [0, 1]; store in increasing node order.
    nodes_[i] = 0.5 * (1.0 - x);
    weights_[i] = 0.5 * w;
    nodes_[k - 1 - i] = 0.5 * (1.0 + x);
    weights_[k - 1 - i] = 0.5 * w;
  }
  if (k % 2 == 1)
    nodes_[k / 2] = 0.5;
}

FloatVector integrate_01(const QuadratureRule &rule, const VectorIntegrand &integrand) {
  FloatVector total;
  for (std::size_t i = 0; i < rule.order(); ++i) {
    const FloatVector value = integrand(rule.nodes()[i]);
    if (total.empty())
      total.assign(value.size(), 0.0);
    else if (value.size() != total.size())
      throw DimensionError("integrand changed length between nodes");
    for (std::size_t c = 0; c < value.size(); ++c)
      total[c] += rule.weights()[i] * value[c];
  }
  return total;
}

double integrate_01(const QuadratureRule &rule, const std::function<double(double)> &integrand) {
  double total = 0.0;
  for (std::size_t i = 0; i < rule.order(); ++i)
    total += rule.weights()[i] * integrand(rule.nodes()[i]);
  return total;
}

} // namespace leibrack
