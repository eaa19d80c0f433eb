#include "leibrack/corpus.hpp"
#include "leibrack/properties.hpp"
#include "leibrack/rack_integration.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace leibrack;

namespace {

struct Chart {
  CentralExtensionData ext;
  LocalGroupChart chart;
  IntegratorConfig cfg;

  explicit Chart(const LeibnizAlgebra &alg) : ext(canonical_extension(alg)), chart(ext, 0.5) {}

  GroupElement at(std::initializer_list<double> x) const {
    const FloatVector v(x);
    return chart.exp(v);
  }
  LocalRackElement el(std::initializer_list<double> x, FloatVector a) const { return {at(x), std::move(a)}; }
};

double dist(const LocalRackElement &u, const LocalRackElement &v) {
  return std::max(max_abs(u.g - v.g), max_abs_diff(u.a, v.a));
}

} // namespace

TEST(IntegratorConfig, Validation) {
  IntegratorConfig cfg;
  EXPECT_NO_THROW(cfg.validate(0.5));
  cfg.fd_step = 0.2;
  EXPECT_THROW(cfg.validate(0.5), std::invalid_argument);
  cfg.fd_step = 1e-3;
  cfg.quad = QuadratureRule(2);
  EXPECT_THROW(cfg.validate(0.5), std::invalid_argument);
  const auto ext = canonical_extension(dim5_algebra());
  EXPECT_THROW(LocalGroupChart(ext, 1.5), std::invalid_argument);
}

TEST(LocalGroupChart, Dim5Realization) {
  const Chart c(dim5_algebra());
  EXPECT_EQ(c.chart.group_dim(), 2u);
  EXPECT_EQ(c.chart.center_dim(), 3u);
  const FloatVector x{0.2, -0.1};
  const GroupElement g = c.chart.exp(x);
  EXPECT_LT(max_abs_diff(c.chart.log(g), x), 1e-15);
  // phi_x = exp(rho_x), rho_x = [[0,0,0],[x1,0,0],[x2,x1,0]]
  const FloatMatrix phi = c.chart.action(g);
  const FloatMatrix expected{{1, 0, 0}, {0.2, 1, 0}, {-0.1 + 0.02, 0.2, 1}};
  EXPECT_LT(max_abs(phi - expected), 1e-15);
  EXPECT_LT(max_abs(c.chart.adjoint(g) - FloatMatrix::identity(2)), 1e-15);
  EXPECT_LT(max_abs(c.chart.multiply(g, c.chart.inverse(g)) - c.chart.identity()), 1e-15);
}

TEST(LocalGroupChart, ConjugationIsGated) {
  const Chart c(heisenberg_algebra());
  const GroupElement far = c.at({3.0, 0.0});
  EXPECT_FALSE(c.chart.contains(far));
  EXPECT_THROW(c.chart.log(far), OutOfChartError);
  EXPECT_THROW(c.chart.conjugate(far, c.at({0.1, 0.1})), OutOfChartError);
  const GroupElement g = c.at({0.1, 0.2});
  EXPECT_TRUE(c.chart.contains(g));
  EXPECT_NO_THROW(c.chart.conjugate(g, g));
}

TEST(CanonicalPath, Endpoints) {
  const Chart c(heisenberg_algebra());
  const GroupElement g = c.at({0.15, -0.2});
  EXPECT_LT(max_abs(canonical_path(c.chart, c.chart.identity(), 0.3) - c.chart.identity()), 1e-15);
  EXPECT_LT(max_abs(canonical_path(c.chart, g, 1.0) - g), 1e-10);
  EXPECT_LT(max_abs(canonical_path(c.chart, g, 0.0) - c.chart.identity()), 1e-15);
}

TEST(I1, VanishesAtIdentity) {
  const Chart c(dim5_algebra());
  EXPECT_EQ(I1_tau(c.chart, c.ext.omega, c.chart.identity(), c.cfg), FloatVector(6, 0.0));
  const GroupAction phi = [&](const GroupElement &g) { return c.chart.action(g); };
  Cochain beta(1, 2, 3);
  beta.at_flat(0, 0) = Rational(1);
  EXPECT_EQ(I1(c.chart, phi, beta, c.chart.identity(), c.cfg), FloatVector(3, 0.0));
}

TEST(I1, AbelianGroupTrivialActionIsLinear) {
  // Trivial action: I1(beta)(exp x) = beta(x).
  const Chart c(heisenberg_algebra());
  const GroupAction trivial = [](const GroupElement &) { return FloatMatrix::identity(2); };
  Cochain beta(1, 2, 2);
  beta.at_flat(0, 0) = Rational(2);
  beta.at_flat(1, 1) = Rational(-3);
  const auto got = I1(c.chart, trivial, beta, c.at({0.1, 0.2}), c.cfg);
  EXPECT_NEAR(got[0], 0.2, 1e-15);
  EXPECT_NEAR(got[1], -0.6, 1e-15);
}

TEST(I2, PointedAtIdentity) {
  const Chart c(dim5_algebra());
  const GroupElement g = c.at({0.1, -0.2});
  EXPECT_EQ(I2(c.chart, c.ext.omega, g, c.chart.identity(), c.cfg), FloatVector(3, 0.0));
  EXPECT_EQ(I2(c.chart, c.ext.omega, c.chart.identity(), g, c.cfg), FloatVector(3, 0.0));
}

TEST(I2, Dim5ReferencePoint) {
  const Chart c(dim5_algebra());
  const FloatVector e1{1.0, 0.0};
  const FloatVector got = I2_at(c.chart, c.ext.omega, e1, e1, c.cfg);
  EXPECT_NEAR(got[0], 1.0, 1e-10);
  EXPECT_NEAR(got[1], 1.0, 1e-10);
  EXPECT_NEAR(got[2], 7.0 / 12.0, 1e-10);
  // The point is outside the default chart.
  EXPECT_FALSE(c.chart.contains(c.chart.exp(e1)));
}

TEST(I2, Dim5ClosedFormInsideChart) {
  const Chart c(dim5_algebra());
  const FloatVector a{0.1, 0.05}, b{0.07, -0.03};
  const FloatVector got = I2(c.chart, c.ext.omega, c.chart.exp(a), c.chart.exp(b), c.cfg);
  EXPECT_LT(max_abs_diff(got, dim5_printed::f(a, b)), 1e-15);
  EXPECT_LT(max_abs_diff(I2_at(c.chart, c.ext.omega, a, b, c.cfg), got), 1e-15);
}

TEST(I2, GeneralPathAgrees) {
  Chart c(dim5_algebra());
  const GroupElement g = c.at({0.12, -0.04});
  const GroupElement h = c.at({-0.08, 0.1});
  const auto fast = I2(c.chart, c.ext.omega, g, h, c.cfg);
  c.cfg.general_path = true;
  EXPECT_LT(max_abs_diff(I2(c.chart, c.ext.omega, g, h, c.cfg), fast), 1e-12);
}

TEST(Delta2, RecoversOmegaOnDim5) {
  const Chart c(dim5_algebra());
  const TwoPointCochain f = [&](const GroupElement &g, const GroupElement &h) {
    return I2(c.chart, c.ext.omega, g, h, c.cfg);
  };
  const FloatVector e1{1.0, 0.0}, e2{0.0, 1.0};
  const auto got = delta2(f, c.chart, e1, e2, c.cfg);
  EXPECT_LT(max_abs_diff(got, FloatVector{1.0, 0.0, 0.0}), 1e-5);
}

TEST(Delta2, ZeroAndBilinear) {
  const Chart c(heisenberg_algebra());
  const TwoPointCochain zero = [](const GroupElement &, const GroupElement &) { return FloatVector(1, 0.0); };
  const FloatVector x{0.3, -1.0}, y{2.0, 0.5};
  EXPECT_EQ(delta2(zero, c.chart, x, y, c.cfg), FloatVector(1, 0.0));
  // B(u, v) = 3 u1 v2 - u2 v1 in log coordinates.
  const TwoPointCochain bilinear = [&](const GroupElement &g, const GroupElement &h) {
    const auto u = c.chart.log(g);
    const auto v = c.chart.log(h);
    return FloatVector{3.0 * u[0] * v[1] - u[1] * v[0]};
  };
  EXPECT_NEAR(delta2(bilinear, c.chart, x, y, c.cfg)[0], 3.0 * 0.3 * 0.5 - (-1.0) * 2.0, 1e-8);
}

TEST(RackProduct, PointedAndActsThroughTheGroup) {
  const Chart c(dim5_algebra());
  const LocalRackElement unit{c.chart.identity(), FloatVector(3, 0.0)};
  const auto u = c.el({0.1, 0.05}, {1.0, -2.0, 0.5});
  EXPECT_LT(dist(rack_product(c.chart, c.ext.omega, u, unit, c.cfg), unit), 1e-15);
  EXPECT_LT(dist(rack_product(c.chart, c.ext.omega, unit, u, c.cfg), u), 1e-15);
  // The center coordinate of the left factor does not matter.
  auto u2 = u;
  u2.a = {5.0, 5.0, 5.0};
  const auto v = c.el({-0.02, 0.1}, {0.3, 0.0, 0.1});
  EXPECT_EQ(rack_product(c.chart, c.ext.omega, u, v, c.cfg).a, rack_product(c.chart, c.ext.omega, u2, v, c.cfg).a);
}

TEST(RackProduct, AbelianInputIsTrivial) {
  const Chart c(abelian3_algebra());
  const LocalRackElement u{c.chart.identity(), {1.0, 2.0, 3.0}};
  const LocalRackElement v{c.chart.identity(), {-1.0, 0.5, 0.0}};
  EXPECT_EQ(rack_product(c.chart, c.ext.omega, u, v, c.cfg).a, v.a);
}

TEST(GhostIdentity, ExactWhenMiddleIsIdentity) {
  const Chart c(dim5_algebra());
  const auto d = ghost_identity_defect(c.chart, c.ext.omega, c.at({0.1, 0.0}), c.chart.identity(),
                                       c.at({0.0, 0.1}), c.cfg);
  EXPECT_EQ(d, FloatVector(3, 0.0));
}

TEST(GhostIdentity, SmallOnSampledTriple) {
  const Chart c(dim5_algebra());
  const auto d = ghost_identity_defect(c.chart, c.ext.omega, c.at({0.1, -0.05}), c.at({0.03, 0.08}),
                                       c.at({-0.06, 0.02}), c.cfg);
  EXPECT_LT(max_abs(d), 1e-9);
}

TEST(TangentBracket, RecoversBrackets) {
  const Chart c(dim5_algebra());
  const RackProductFn product = [&](const LocalRackElement &u, const LocalRackElement &v) {
    return rack_product(c.chart, c.ext.omega, u, v, c.cfg);
  };
  const FloatVector e1{1, 0, 0, 0, 0}, e2{0, 1, 0, 0, 0}, e3{0, 0, 1, 0, 0}, e4{0, 0, 0, 1, 0};
  EXPECT_LT(max_abs_diff(tangent_bracket(c.chart, product, e1, e2, c.cfg), e3), 1e-4);
  EXPECT_LT(max_abs(tangent_bracket(c.chart, product, e3, e4, c.cfg)), 1e-12);
}

TEST(TangentBracket, LieInputGivesAntisymmetricBracket) {
  const Chart c(heisenberg_algebra());
  const RackProductFn product = [&](const LocalRackElement &u, const LocalRackElement &v) {
    return rack_product(c.chart, c.ext.omega, u, v, c.cfg);
  };
  const FloatVector u{0.3, -0.7, 0.2}, v{1.1, 0.4, -0.5};
  const auto uv = tangent_bracket(c.chart, product, u, v, c.cfg);
  const auto vu = tangent_bracket(c.chart, product, v, u, c.cfg);
  EXPECT_LT(max_abs(add<double>(uv, vu)), 1e-4);
  EXPECT_LT(max_abs_diff(uv, bracket(c.ext.parent, u, v)), 1e-4);
}

TEST(Iota2, HeisenbergAnalytic) {
  const Chart c(heisenberg_algebra());
  const FloatVector x{0.1, -0.2}, y{0.05, 0.15};
  const auto got = iota2(c.chart, c.ext.omega, c.chart.exp(x), c.chart.exp(y), c.cfg);
  EXPECT_NEAR(got[0], 0.5 * (x[0] * y[1] - x[1] * y[0]), 1e-9);
}

TEST(Iota2, RequiresLieCocycle) {
  const Chart c(dim5_algebra());
  EXPECT_THROW(require_lie_cocycle(c.ext, c.ext.omega), NotLieCocycle);
  EXPECT_THROW(iota2(c.chart, c.ext.omega, c.chart.identity(), c.chart.identity(), c.cfg), NotLieCocycle);
  const Chart h(heisenberg_algebra());
  EXPECT_NO_THROW(require_lie_cocycle(h.ext, h.ext.omega));
}

TEST(GroupStructure, HeisenbergInverseAndConjugation) {
  const Chart c(heisenberg_algebra());
  const auto u = c.el({0.1, -0.05}, {0.3});
  const auto v = c.el({-0.07, 0.02}, {-0.4});
  const auto inv = group_inverse(c.chart, c.ext.omega, u, c.cfg);
  const auto one = group_product(c.chart, c.ext.omega, u, inv, c.cfg);
  EXPECT_LT(max_abs(one.g - c.chart.identity()), 1e-14);
  EXPECT_LT(max_abs(one.a), 1e-12);
  EXPECT_LT(dist(group_conjugate(c.chart, c.ext.omega, u, v, c.cfg), rack_product(c.chart, c.ext.omega, u, v, c.cfg)),
            1e-9);
}

TEST(Sampling, DeterministicAndInsideChart) {
  const Chart c(dim5_algebra());
  std::mt19937_64 a(42), b(42);
  for (int i = 0; i < 20; ++i) {
    const auto g = sample_group_element(c.chart, a, 0.125);
    EXPECT_EQ(g, sample_group_element(c.chart, b, 0.125));
    EXPECT_LE(norm1(g - c.chart.identity()), 0.125);
  }
  std::mt19937_64 r(1);
  for (int i = 0; i < 1000; ++i) {
    const double x = uniform(r, -2.0, 3.0);
    EXPECT_GE(x, -2.0);
    EXPECT_LT(x, 3.0);
  }
}

TEST(Suite, AbelianPassesVacuously) {
  const auto report = run_integration_suite(canonical_extension(abelian3_algebra()), SuiteConfig{});
  EXPECT_TRUE(report.passed());
  EXPECT_TRUE(report.coverage_ok());
  EXPECT_TRUE(report.lie);
  for (const auto &p : report.properties)
    EXPECT_EQ(p.defect, 0.0) << p.name;
}

TEST(Suite, Dim5PassesWithReducedSamples) {
  SuiteConfig cfg;
  cfg.samples = 30;
  cfg.slow_samples = 5;
  const auto report = run_integration_suite(canonical_extension(dim5_algebra()), cfg);
  for (const auto &p : report.properties)
    EXPECT_TRUE(p.passed()) << p.name << " " << p.defect;
  EXPECT_FALSE(report.lie);
  EXPECT_EQ(report.skipped, 0u);
  ASSERT_EQ(report.reference_i2.size(), 3u);
  EXPECT_NEAR(report.reference_i2[2], 7.0 / 12.0, 1e-12);
  // The two rack differential conventions disagree on the symmetric Hom module.
  EXPECT_GT(report.psi_sign_residual, 1e-6);
}

TEST(Suite, PolynomialIntegrands) {
  EXPECT_TRUE(polynomial_integrands(canonical_extension(dim5_algebra())));
  EXPECT_TRUE(polynomial_integrands(canonical_extension(heisenberg_algebra())));
  EXPECT_TRUE(polynomial_integrands(canonical_extension(abelian3_algebra())));
}

TEST(Suite, CoverageRule) {
  SuiteReport r;
  EXPECT_TRUE(r.coverage_ok());
  r.attempted = 10;
  r.skipped = 5;
  EXPECT_TRUE(r.coverage_ok());
  r.skipped = 6;
  EXPECT_FALSE(r.coverage_ok());
}

TEST(Suite, NonNilpotentQuotient) {
  // [e1, e2] = e2 = -[e2, e1]: trivial left center, ad e1 is not nilpotent.
  const std::vector<BracketTerm> terms{{0, 1, 1, Rational(1)}, {1, 0, 1, Rational(-1)}};
  const auto ext = canonical_extension(algebra_from_terms(2, terms));
  EXPECT_FALSE(polynomial_integrands(ext));
  SuiteConfig cfg;
  cfg.samples = 20;
  cfg.slow_samples = 5;
  const auto report = run_integration_suite(ext, cfg);
  const auto *quad = report.find("quadrature_stability");
  ASSERT_NE(quad, nullptr);
  EXPECT_FALSE(quad->applicable);
  const auto *tangent = report.find("tangent_bracket");
  ASSERT_NE(tangent, nullptr);
  EXPECT_TRUE(tangent->passed()) << tangent->defect;
}
