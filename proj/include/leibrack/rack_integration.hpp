#pragma once

#include "leibrack/cochain.hpp"
#include "leibrack/cohomology.hpp"
#include "leibrack/leibniz_algebra.hpp"
#include "leibrack/matrix.hpp"
#include "leibrack/matrix_functions.hpp"
#include "leibrack/quadrature.hpp"

#include <functional>
#include <memory>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

namespace leibrack {

class NotLieCocycle : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct IntegratorConfig {
  QuadratureRule quad{8};
  double fd_step = 1e-3;
  double tol_identity = 1e-9;
  /// Evaluate path integrands through the generic left logarithmic derivative
  /// instead of the exp(sX) shortcut. Slow; for cross-checks.
  bool general_path = false;

  /// Throws std::invalid_argument unless quad order >= 3 and fd_step in (0, chart_radius / 4).
  void validate(double chart_radius) const;
};

/// G0 realized inside Aut(g) as exp of the ad_L image of g0, with its action on
/// the center. Group elements are n x n float matrices, n = dim(g).
class LocalGroupChart {
public:
  explicit LocalGroupChart(const CentralExtensionData &ext, double radius = 0.5);

  [[nodiscard]] const CentralExtensionData &extension() const { return *ext_; }
  [[nodiscard]] double radius() const { return radius_; }
  [[nodiscard]] std::size_t group_dim() const { return ext_->g0_dim(); }
  [[nodiscard]] std::size_t center_dim() const { return ext_->center_dim(); }
  [[nodiscard]] std::size_t matrix_dim() const { return ext_->parent.dim(); }

  [[nodiscard]] GroupElement identity() const { return GroupElement::identity(matrix_dim()); }
  /// sum_i x_i ad_L(section e_i).
  [[nodiscard]] FloatMatrix realize(std::span<const double> x) const;
  [[nodiscard]] GroupElement exp(std::span<const double> x) const;
  /// g0 coordinates of an element of the realized Lie algebra.
  [[nodiscard]] FloatVector coordinates(const FloatMatrix &m) const;
  /// Log coordinates; throws OutOfChartError outside the chart.
  [[nodiscard]] FloatVector log(const GroupElement &g) const;

  [[nodiscard]] bool contains(const GroupElement &g) const;
  void require(const GroupElement &g) const;

  /// phi_g on the center, q x q.
  [[nodiscard]] FloatMatrix action(const GroupElement &g) const;
  /// Ad_g on g0, p x p.
  [[nodiscard]] FloatMatrix adjoint(const GroupElement &g) const;
  /// alpha -> phi_g o alpha o Ad_{g^-1} on Hom(g0, center), (q p) x (q p).
  [[nodiscard]] FloatMatrix hom_action(const GroupElement &g) const;

  /// g h g^-1, gated on the chart (the U_{n-loc} membership test).
  [[nodiscard]] GroupElement conjugate(const GroupElement &g, const GroupElement &h) const;
  [[nodiscard]] GroupElement multiply(const GroupElement &g, const GroupElement &h) const;
  [[nodiscard]] GroupElement inverse(const GroupElement &g) const;

  [[nodiscard]] Conjugation conjugation() const;

private:
  std::shared_ptr<const CentralExtensionData> ext_;
  double radius_;
  std::vector<FloatMatrix> basis_;
  FloatMatrix pinv_; ///< left inverse of the vectorized basis, p x n^2
  FloatMatrix projection_;
  FloatMatrix section_;
  FloatMatrix center_projection_;
  FloatMatrix center_inclusion_;
};

struct LocalRackElement {
  GroupElement g;
  FloatVector a;
};

/// exp(s log g).
GroupElement canonical_path(const LocalGroupChart &chart, const GroupElement &g, double s);

/// Left logarithmic derivative gamma(s)^-1 gamma'(s) of a path of realized
/// matrices exp(Z(s)), in g0 coordinates; `dz` is Z'(s).
FloatVector left_log_derivative(const LocalGroupChart &chart, const FloatMatrix &z, const FloatMatrix &dz);

/// I^1(beta)(g) for a 1-cochain beta on g0 valued in a module with group action `action`.
FloatVector I1(const LocalGroupChart &chart, const GroupAction &action, const Cochain &beta,
               const GroupElement &g, const IntegratorConfig &cfg);

/// I^1(tau(omega))(g) in Hom(g0, center), stored row-major (index c * p + j).
FloatVector I1_tau(const LocalGroupChart &chart, const Cochain &omega, const GroupElement &g,
                   const IntegratorConfig &cfg);

/// I^2(omega)(g, h): integral of phi along exp(t log(g |> h)) applied to I^1(tau omega)(g).
FloatVector I2(const LocalGroupChart &chart, const Cochain &omega, const GroupElement &g, const GroupElement &h,
               const IntegratorConfig &cfg);

/// Exponential-coordinate variants: g = exp(x), h = exp(y). No chart gating;
/// meant for exponential groups (nilpotent g0), where exp is global.
FloatVector I1_tau_at(const LocalGroupChart &chart, const Cochain &omega, std::span<const double> x,
                      const IntegratorConfig &cfg);
FloatVector I2_at(const LocalGroupChart &chart, const Cochain &omega, std::span<const double> x,
                  std::span<const double> y, const IntegratorConfig &cfg);

/// Evaluator of I^2(omega) as a two-argument rack cochain.
RackCochainFn I2_cochain(const LocalGroupChart &chart, const Cochain &omega, const IntegratorConfig &cfg);

/// (g, a) |> (h, b) = (g |> h, g.b + I^2(omega)(g, h)).
LocalRackElement rack_product(const LocalGroupChart &chart, const Cochain &omega, const LocalRackElement &u,
                              const LocalRackElement &v, const IntegratorConfig &cfg);

/// g.(h, b) = (g |> h, g.b + I^2(omega)(g, h)).
LocalRackElement augmented_action(const LocalGroupChart &chart, const Cochain &omega, const GroupElement &g,
                                  const LocalRackElement &v, const IntegratorConfig &cfg);

/// g.I^2(h,k) - I^2(gh,k) + I^2(g, h |> k).
FloatVector ghost_identity_defect(const LocalGroupChart &chart, const Cochain &omega, const GroupElement &g,
                                  const GroupElement &h, const GroupElement &k, const IntegratorConfig &cfg);

using TwoPointCochain = std::function<FloatVector(const GroupElement &, const GroupElement &)>;

/// Central mixed difference of (s, t) -> f(exp(s x), exp(t y)) at 0 with step cfg.fd_step.
FloatVector delta2(const TwoPointCochain &f, const LocalGroupChart &chart, std::span<const double> x,
                   std::span<const double> y, const IntegratorConfig &cfg);

using RackProductFn = std::function<LocalRackElement(const LocalRackElement &, const LocalRackElement &)>;

/// Mixed difference of (s, t) -> (exp(s x), s a) |> (exp(t y), t b) at 0, where
/// u = (x, a) and v = (y, b) are given in parent coordinates. Result in parent coordinates.
FloatVector tangent_bracket(const LocalGroupChart &chart, const RackProductFn &product, std::span<const double> u,
                            std::span<const double> v, const IntegratorConfig &cfg);

/// Throws NotLieCocycle unless omega is antisymmetric and closed for the
/// symmetric center representation (the Chevalley-Eilenberg condition).
void require_lie_cocycle(const CentralExtensionData &ext, const Cochain &omega);

/// Integral of the invariant 2-form of omega over the 2-chain
/// exp(t log(g exp(s log h)) + s log(g exp((1 - t) log h))), t + s <= 1.
FloatVector iota2(const LocalGroupChart &chart, const Cochain &omega, const GroupElement &g, const GroupElement &h,
                  const IntegratorConfig &cfg);

/// (g, a)(h, b) = (gh, a + g.b + iota^2(g, h)).
LocalRackElement group_product(const LocalGroupChart &chart, const Cochain &omega, const LocalRackElement &u,
                               const LocalRackElement &v, const IntegratorConfig &cfg);
LocalRackElement group_inverse(const LocalGroupChart &chart, const Cochain &omega, const LocalRackElement &u,
                               const IntegratorConfig &cfg);
/// u v u^-1 in the group structure.
LocalRackElement group_conjugate(const LocalGroupChart &chart, const Cochain &omega, const LocalRackElement &u,
                                 const LocalRackElement &v, const IntegratorConfig &cfg);

// ---- sampling ---------------------------------------------------------------

/// Uniform double in [lo, hi) from a 64-bit engine, independent of the
/// standard library's distribution implementation.
double uniform(std::mt19937_64 &rng, double lo, double hi);

/// exp(x) with x uniform in a box, rescaled until ||g - I||_1 <= max_norm.
GroupElement sample_group_element(const LocalGroupChart &chart, std::mt19937_64 &rng, double max_norm);
FloatVector sample_center(const LocalGroupChart &chart, std::mt19937_64 &rng, double scale = 1.0);

} // namespace leibrack
