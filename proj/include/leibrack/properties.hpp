#pragma once

#include "leibrack/rack_integration.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace leibrack {

struct PropertyResult {
  std::string name;
  double defect = 0.0;    ///< maximum over evaluated samples
  double tolerance = 0.0;
  std::size_t evaluated = 0;
  std::size_t skipped = 0; ///< samples that left the chart
  bool applicable = true;
  std::string note;

  [[nodiscard]] bool passed() const { return !applicable || defect <= tolerance; }
};

struct SuiteConfig {
  IntegratorConfig integrator;
  double chart_radius = 0.5;
  std::size_t samples = 200;
  std::uint64_t seed = 0;
  /// Left elements used by the injectivity check (each applied to every sample).
  std::size_t injectivity_left = 10;
  /// Samples used by the slow cross-checks (general path, Lie suite).
  std::size_t slow_samples = 200;
};

/// Tolerances of the integration suite.
namespace tol {
inline constexpr double self_distributivity = 1e-9;
inline constexpr double pointedness = 1e-12;
inline constexpr double injectivity_input_gap = 1e-6;
inline constexpr double injectivity_output_gap = 1e-12;
inline constexpr double rack_cocycle = 1e-9;
inline constexpr double ghost_identity = 1e-9;
inline constexpr double derived_relation = 2e-9;
inline constexpr double augmented_action = 1e-9;
inline constexpr double delta2_roundtrip = 1e-5;
inline constexpr double tangent_bracket = 1e-4;
inline constexpr double quadrature_stability = 1e-12;
inline constexpr double module_axioms = 1e-10;
inline constexpr double general_path = 1e-10;
inline constexpr double lie_group = 1e-9;
} // namespace tol

struct SuiteReport {
  std::vector<PropertyResult> properties;
  std::size_t attempted = 0;
  std::size_t skipped = 0;
  bool lie = false;
  /// I^2(omega)(exp e1, exp e1) in exponential coordinates, when g0 is nonzero.
  FloatVector reference_i2;
  /// Largest |general-formula d_R I^1 - proof-expansion d_R I^1| seen: the
  /// psi sign discrepancy, reported and not gated.
  double psi_sign_residual = 0.0;

  [[nodiscard]] bool coverage_ok() const { return attempted == 0 || 2 * skipped <= attempted; }
  [[nodiscard]] bool passed() const;
  [[nodiscard]] const PropertyResult *find(const std::string &name) const;
};

SuiteReport run_integration_suite(const CentralExtensionData &ext, const SuiteConfig &cfg);

/// Whether every realized g0 matrix is nilpotent, so all path integrands are polynomial.
bool polynomial_integrands(const CentralExtensionData &ext);

} // namespace leibrack
