#include "leibrack/properties.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace leibrack {

namespace {

double distance(const LocalRackElement &u, const LocalRackElement &v) {
  return std::max(max_abs(u.g - v.g), max_abs_diff(u.a, v.a));
}

double vec_norm(std::span<const double> v) { return v.empty() ? 0.0 : max_abs(v); }

/// Runs `body` over `count` samples, folding each returned defect into `r`
/// and counting chart exits as skips.
void sweep(PropertyResult &r, std::size_t count, SuiteReport &report, const std::function<double(std::size_t)> &body) {
  for (std::size_t i = 0; i < count; ++i) {
    ++report.attempted;
    try {
      r.defect = std::max(r.defect, body(i));
      ++r.evaluated;
    } catch (const OutOfChartError &) {
      ++r.skipped;
      ++report.skipped;
    }
  }
}

PropertyResult make(const std::string &name, double tolerance) {
  PropertyResult r;
  r.name = name;
  r.tolerance = tolerance;
  return r;
}

struct Triple {
  LocalRackElement u;
  LocalRackElement v;
  LocalRackElement w;
};

} // namespace

bool SuiteReport::passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyResult &p) { return p.passed(); });
}

const PropertyResult *SuiteReport::find(const std::string &name) const {
  for (const auto &p : properties)
    if (p.name == name)
      return &p;
  return nullptr;
}

bool polynomial_integrands(const CentralExtensionData &ext) {
  // The associative algebra generated by the realized g0 must be nilpotent:
  // all words of length n vanish.
  const std::size_t n = ext.parent.dim();
  if (ext.g0_dim() == 0)
    return true;
  std::vector<ExactMatrix> words = ext.g0_realization;
  for (std::size_t len = 1; len <= n; ++len) {
    std::vector<ExactVector> flat;
    for (const auto &w : words)
      flat.emplace_back(w.data().begin(), w.data().end());
    const auto basis = row_space_basis(ExactMatrix::from_columns(n * n, flat).transpose());
    if (basis.empty())
      return true;
    words.clear();
    for (const auto &b : basis) {
      ExactMatrix m(n, n);
      for (std::size_t k = 0; k < n * n; ++k)
        m(k / n, k % n) = b[k];
      for (const auto &a : ext.g0_realization)
        words.push_back(a * m);
    }
  }
  return false;
}

SuiteReport run_integration_suite(const CentralExtensionData &ext, const SuiteConfig &cfg) {
  SuiteReport report;
  report.lie = is_lie(ext.parent);
  const IntegratorConfig &icfg = cfg.integrator;
  icfg.validate(cfg.chart_radius);
  const LocalGroupChart chart(ext, cfg.chart_radius);
  const Cochain &omega = ext.omega;
  const std::size_t p = chart.group_dim();
  const std::size_t q = chart.center_dim();
  const double sample_norm = cfg.chart_radius / 4.0;
  std::mt19937_64 rng(cfg.seed);

  auto draw = [&] { return LocalRackElement{sample_group_element(chart, rng, sample_norm), sample_center(chart, rng)}; };
  std::vector<LocalRackElement> pool;
  for (std::size_t i = 0; i < cfg.samples; ++i)
    pool.push_back(draw());
  std::vector<Triple> triples;
  for (std::size_t i = 0; i < cfg.samples; ++i)
    triples.push_back(Triple{draw(), draw(), draw()});

  auto prod = [&](const LocalRackElement &u, const LocalRackElement &v) {
    return rack_product(chart, omega, u, v, icfg);
  };
  const LocalRackElement unit{chart.identity(), FloatVector(q, 0.0)};

  if (p > 0) {
    FloatVector e1(p, 0.0);
    e1[0] = 1.0;
    report.reference_i2 = I2_at(chart, omega, e1, e1, icfg);
  }

  // Rack axioms.
  auto self_dist = make("self_distributivity", tol::self_distributivity);
  sweep(self_dist, triples.size(), report, [&](std::size_t i) {
    const auto &[u, v, w] = triples[i];
    return distance(prod(u, prod(v, w)), prod(prod(u, v), prod(u, w)));
  });
  report.properties.push_back(self_dist);

  auto pointed = make("pointedness", tol::pointedness);
  sweep(pointed, pool.size(), report, [&](std::size_t i) {
    const auto &u = pool[i];
    double d = distance(prod(u, unit), unit);
    d = std::max(d, distance(prod(unit, u), u));
    d = std::max(d, vec_norm(I2(chart, omega, u.g, chart.identity(), icfg)));
    return std::max(d, vec_norm(I2(chart, omega, chart.identity(), u.g, icfg)));
  });
  report.properties.push_back(pointed);

  auto inj = make("injectivity", 0.0);
  {
    // Defect counts sample pairs separated by more than the input gap whose
    // images under u |> - fall within the output gap.
    const std::size_t lefts = std::min(cfg.injectivity_left, pool.size());
    double min_gap = std::numeric_limits<double>::infinity();
    sweep(inj, lefts, report, [&](std::size_t li) {
      std::vector<LocalRackElement> images;
      std::vector<std::size_t> kept;
      for (std::size_t j = 0; j < pool.size(); ++j) {
        try {
          images.push_back(prod(pool[li], pool[j]));
          kept.push_back(j);
        } catch (const OutOfChartError &) {
        }
      }
      double collisions = 0.0;
      for (std::size_t a = 0; a < kept.size(); ++a)
        for (std::size_t b = a + 1; b < kept.size(); ++b) {
          if (distance(pool[kept[a]], pool[kept[b]]) <= tol::injectivity_input_gap)
            continue;
          const double gap = distance(images[a], images[b]);
          min_gap = std::min(min_gap, gap);
          if (gap <= tol::injectivity_output_gap)
            collisions += 1.0;
        }
      return collisions;
    });
    inj.note = "minimum image separation " + std::to_string(min_gap);
  }
  report.properties.push_back(inj);

  // Cocycle identities.
  const RackCochainFn f2 = I2_cochain(chart, omega, icfg);
  const Conjugation conj = chart.conjugation();
  const GroupAction phi = [&chart](const GroupElement &g) { return chart.action(g); };
  const RackModuleStructure anti = antisymmetric_rack_module(q, phi, conj);

  auto cocycle = make("rack_cocycle", tol::rack_cocycle);
  auto cocycle_general = make("rack_cocycle_general_formula", tol::rack_cocycle);
  auto ghost = make("ghost_identity", tol::ghost_identity);
  auto derived = make("derived_relation", tol::derived_relation);
  sweep(cocycle, triples.size(), report, [&](std::size_t i) {
    const auto &[u, v, w] = triples[i];
    return vec_norm(rack_d2_antisymmetric(phi, conj, f2, u.g, v.g, w.g));
  });
  sweep(cocycle_general, triples.size(), report, [&](std::size_t i) {
    const auto &[u, v, w] = triples[i];
    const std::vector<GroupElement> args{u.g, v.g, w.g};
    return vec_norm(rack_differential_eval(anti, f2, args, RackDifferentialConvention::general_formula));
  });
  sweep(ghost, triples.size(), report, [&](std::size_t i) {
    const auto &[u, v, w] = triples[i];
    return vec_norm(ghost_identity_defect(chart, omega, u.g, v.g, w.g, icfg));
  });
  sweep(derived, triples.size(), report, [&](std::size_t i) {
    const auto &[u, v, w] = triples[i];
    const FloatVector d = rack_d2_antisymmetric(phi, conj, f2, u.g, v.g, w.g);
    const FloatVector b1 = ghost_identity_defect(chart, omega, u.g, v.g, w.g, icfg);
    const FloatVector b2 = ghost_identity_defect(chart, omega, chart.conjugate(u.g, v.g), u.g, w.g, icfg);
    return vec_norm(sub<double>(d, sub<double>(b1, b2)));
  });
  report.properties.push_back(cocycle);
  report.properties.push_back(cocycle_general);
  report.properties.push_back(ghost);
  report.properties.push_back(derived);

  // I^1(tau omega) is a rack 1-cocycle for the symmetric Hom module.
  auto d1 = make("rack_cocycle_I1", tol::rack_cocycle);
  {
    const GroupAction hom = [&chart](const GroupElement &g) { return chart.hom_action(g); };
    const RackModuleStructure sym = symmetric_rack_module(q * p, hom, conj);
    RackCochainFn f1;
    f1.arity = 1;
    f1.evaluate = [&](std::span<const GroupElement> args) { return I1_tau(chart, omega, args[0], icfg); };
    sweep(d1, triples.size(), report, [&](std::size_t i) {
      const auto &[u, v, w] = triples[i];
      const FloatVector normative = rack_d1_symmetric(hom, conj, f1, u.g, v.g);
      const std::vector<GroupElement> args{u.g, v.g};
      const FloatVector general = rack_differential_eval(sym, f1, args, RackDifferentialConvention::general_formula);
      report.psi_sign_residual = std::max(report.psi_sign_residual, vec_norm(sub<double>(general, normative)));
      return vec_norm(normative);
    });
  }
  report.properties.push_back(d1);

  auto action = make("augmented_action", tol::augmented_action);
  sweep(action, triples.size(), report, [&](std::size_t i) {
    const auto &[u, v, w] = triples[i];
    const GroupElement gh = chart.multiply(u.g, v.g);
    chart.require(gh);
    const LocalRackElement lhs = augmented_action(chart, omega, u.g, augmented_action(chart, omega, v.g, w, icfg), icfg);
    const LocalRackElement rhs = augmented_action(chart, omega, gh, w, icfg);
    double d = distance(lhs, rhs);
    d = std::max(d, distance(augmented_action(chart, omega, chart.identity(), w, icfg), w));
    return std::max(d, distance(augmented_action(chart, omega, u.g, unit, icfg), unit));
  });
  report.properties.push_back(action);

  // Module axioms for the anti-symmetric and symmetric center modules.
  auto modules = make("module_axioms", tol::module_axioms);
  {
    const RackModuleStructure sym = symmetric_rack_module(q, phi, conj);
    std::vector<GroupTriple> gt;
    for (const auto &t : triples)
      gt.push_back(GroupTriple{t.u.g, t.v.g, t.w.g});
    sweep(modules, gt.size(), report, [&](std::size_t i) {
      const std::span<const GroupTriple> one(&gt[i], 1);
      return std::max(check_module_axioms(anti, one).max_defect(), check_module_axioms(sym, one).max_defect());
    });
  }
  report.properties.push_back(modules);

  // Differentiation back to the algebra.
  auto roundtrip = make("delta2_roundtrip", tol::delta2_roundtrip);
  {
    const TwoPointCochain f = [&](const GroupElement &g, const GroupElement &h) { return I2(chart, omega, g, h, icfg); };
    sweep(roundtrip, p * p, report, [&](std::size_t k) {
      const std::size_t i = k / p;
      const std::size_t j = k % p;
      FloatVector x(p, 0.0);
      FloatVector y(p, 0.0);
      x[i] = 1.0;
      y[j] = 1.0;
      const std::array<std::size_t, 2> ij{i, j};
      return max_abs_diff(delta2(f, chart, x, y, icfg), to_float(omega.value(ij)));
    });
  }
  report.properties.push_back(roundtrip);

  auto tangent = make("tangent_bracket", tol::tangent_bracket);
  {
    const std::size_t n = ext.parent.dim();
    const RackProductFn product = prod;
    sweep(tangent, n * n, report, [&](std::size_t k) {
      const FloatVector u = to_float(unit_vector<Rational>(n, k / n));
      const FloatVector v = to_float(unit_vector<Rational>(n, k % n));
      return max_abs_diff(tangent_bracket(chart, product, u, v, icfg), bracket(ext.parent, u, v));
    });
  }
  report.properties.push_back(tangent);

  auto quad = make("quadrature_stability", tol::quadrature_stability);
  if (!polynomial_integrands(ext)) {
    quad.applicable = false;
    quad.note = "g0 is not nilpotent; integrands are not polynomial";
  } else {
    IntegratorConfig doubled = icfg;
    doubled.quad = QuadratureRule(icfg.quad.order() * 2);
    sweep(quad, pool.size(), report, [&](std::size_t i) {
      const auto &g = pool[i].g;
      const auto &h = pool[(i + 1) % pool.size()].g;
      return max_abs_diff(I2(chart, omega, g, h, icfg), I2(chart, omega, g, h, doubled));
    });
  }
  report.properties.push_back(quad);

  auto general = make("general_path", tol::general_path);
  {
    IntegratorConfig slow = icfg;
    slow.general_path = true;
    sweep(general, std::min(cfg.slow_samples, pool.size()), report, [&](std::size_t i) {
      const auto &g = pool[i].g;
      const auto &h = pool[(i + 1) % pool.size()].g;
      return max_abs_diff(I2(chart, omega, g, h, icfg), I2(chart, omega, g, h, slow));
    });
  }
  report.properties.push_back(general);

  if (report.lie) {
    const std::size_t count = std::min(cfg.slow_samples, triples.size());
    auto gprod = [&](const LocalRackElement &u, const LocalRackElement &v) {
      return group_product(chart, omega, u, v, icfg);
    };
    auto assoc = make("lie_associativity", tol::lie_group);
    sweep(assoc, count, report, [&](std::size_t i) {
      const auto &[u, v, w] = triples[i];
      return distance(gprod(gprod(u, v), w), gprod(u, gprod(v, w)));
    });
    auto conj_match = make("lie_conjugation", tol::lie_group);
    sweep(conj_match, count, report, [&](std::size_t i) {
      const auto &[u, v, w] = triples[i];
      return distance(group_conjugate(chart, omega, u, v, icfg), prod(u, v));
    });
    auto relation = make("lie_iota_relation", tol::lie_group);
    sweep(relation, count, report, [&](std::size_t i) {
      const auto &[u, v, w] = triples[i];
      const GroupElement gh = chart.conjugate(u.g, v.g);
      const FloatVector rhs = sub<double>(iota2(chart, omega, u.g, v.g, icfg), iota2(chart, omega, gh, u.g, icfg));
      return max_abs_diff(I2(chart, omega, u.g, v.g, icfg), rhs);
    });
    report.properties.push_back(assoc);
    report.properties.push_back(conj_match);
    report.properties.push_back(relation);
  }
  return report;
}

} // namespace leibrack
