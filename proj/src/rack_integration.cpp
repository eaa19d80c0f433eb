#include "leibrack/rack_integration.hpp"

#include <cmath>
#include <sstream>

namespace leibrack {

namespace {

FloatMatrix block_upper(const FloatMatrix &diag, const FloatMatrix &corner) {
  const std::size_t n = diag.rows();
  FloatMatrix b(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      b(i, j) = diag(i, j);
      b(n + i, n + j) = diag(i, j);
      b(i, n + j) = corner(i, j);
    }
  return b;
}

FloatMatrix top_left(const FloatMatrix &b, std::size_t n) {
  FloatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = b(i, j);
  return m;
}

FloatMatrix top_right(const FloatMatrix &b, std::size_t n) {
  FloatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = b(i, n + j);
  return m;
}

// Directional derivative of log at m along e, via log [[m, eps e], [0, m]].
FloatMatrix log_derivative(const FloatMatrix &m, const FloatMatrix &e) {
  const double size = norm1(e);
  if (size == 0.0)
    return FloatMatrix(m.rows(), m.cols());
  const double eps = 0.125 / size;
  const FloatMatrix b = matrix_log(block_upper(m, e * eps));
  return top_right(b, m.rows()) * (1.0 / eps);
}

FloatVector apply_hom(std::span<const double> alpha, std::span<const double> y, std::size_t q) {
  const std::size_t p = y.size();
  FloatVector out(q, 0.0);
  for (std::size_t c = 0; c < q; ++c)
    for (std::size_t j = 0; j < p; ++j)
      out[c] += alpha[c * p + j] * y[j];
  return out;
}

FloatVector scaled(std::span<const double> v, double s) {
  FloatVector out(v.begin(), v.end());
  for (auto &x : out)
    x *= s;
  return out;
}

} // namespace

void IntegratorConfig::validate(double chart_radius) const {
  if (quad.order() < 3)
    throw std::invalid_argument("quadrature order must be at least 3");
  if (!(fd_step > 0.0 && fd_step < chart_radius / 4.0))
    throw std::invalid_argument("fd_step must lie in (0, chart_radius / 4)");
}

LocalGroupChart::LocalGroupChart(const CentralExtensionData &ext, double radius)
    : ext_(std::make_shared<const CentralExtensionData>(ext)), radius_(radius) {
  if (!(radius > 0.0 && radius < 1.0))
    throw std::invalid_argument("chart radius must lie in (0, 1)");
  const std::size_t n = ext.parent.dim();
  const std::size_t p = ext.g0_dim();
  ExactMatrix stacked(n * n, p);
  for (std::size_t i = 0; i < p; ++i) {
    basis_.push_back(to_float(ext.g0_realization[i]));
    const auto flat = ext.g0_realization[i].data();
    for (std::size_t r = 0; r < n * n; ++r)
      stacked(r, i) = flat[r];
  }
  if (p > 0) {
    const ExactMatrix gram = stacked.transpose() * stacked;
    pinv_ = to_float(leibrack::inverse(gram) * stacked.transpose());
  }
  projection_ = to_float(ext.projection);
  section_ = to_float(ext.section);
  center_projection_ = to_float(ext.center_projection);
  center_inclusion_ = to_float(ext.center_inclusion);
}

FloatMatrix LocalGroupChart::realize(std::span<const double> x) const {
  if (x.size() != group_dim())
    throw DimensionError("g0 coordinate vector has wrong length");
  FloatMatrix m(matrix_dim(), matrix_dim());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0.0)
      m += basis_[i] * x[i];
  return m;
}

GroupElement LocalGroupChart::exp(std::span<const double> x) const { return matrix_exp(realize(x)); }

FloatVector LocalGroupChart::coordinates(const FloatMatrix &m) const {
  if (group_dim() == 0)
    return {};
  return pinv_ * m.data();
}

FloatVector LocalGroupChart::log(const GroupElement &g) const {
  require(g);
  return coordinates(matrix_log(g));
}

bool LocalGroupChart::contains(const GroupElement &g) const { return norm1(g - identity()) < radius_; }

void LocalGroupChart::require(const GroupElement &g) const {
  const double d = norm1(g - identity());
  if (!(d < radius_)) {
    std::ostringstream os;
    os << "group element at distance " << d << " leaves the chart of radius " << radius_;
    throw OutOfChartError(os.str());
  }
}

FloatMatrix LocalGroupChart::action(const GroupElement &g) const { return center_projection_ * g * center_inclusion_; }

FloatMatrix LocalGroupChart::adjoint(const GroupElement &g) const { return projection_ * g * section_; }

FloatMatrix LocalGroupChart::hom_action(const GroupElement &g) const {
  const std::size_t p = group_dim();
  const std::size_t q = center_dim();
  const FloatMatrix phi = action(g);
  const FloatMatrix ad_inv = adjoint(inverse(g));
  FloatMatrix h(q * p, q * p);
  for (std::size_t c = 0; c < q; ++c)
    for (std::size_t j = 0; j < p; ++j)
      for (std::size_t c2 = 0; c2 < q; ++c2)
        for (std::size_t j2 = 0; j2 < p; ++j2)
          h(c * p + j, c2 * p + j2) = phi(c, c2) * ad_inv(j2, j);
  return h;
}

GroupElement LocalGroupChart::conjugate(const GroupElement &g, const GroupElement &h) const {
  require(g);
  require(h);
  GroupElement out = g * h * inverse(g);
  require(out);
  return out;
}

GroupElement LocalGroupChart::multiply(const GroupElement &g, const GroupElement &h) const { return g * h; }

GroupElement LocalGroupChart::inverse(const GroupElement &g) const {
  // Unipotent elements invert by a finite Neumann series, which keeps the
  // triangular zero pattern exact.
  const FloatMatrix x = g - identity();
  if (const auto index = nilpotency_index(x)) {
    FloatMatrix out = identity();
    FloatMatrix power = identity();
    const FloatMatrix minus_x = -x;
    for (std::size_t k = 1; k < *index; ++k) {
      power = power * minus_x;
      out += power;
    }
    return out;
  }
  return leibrack::inverse(g);
}

Conjugation LocalGroupChart::conjugation() const {
  return [this](const GroupElement &g, const GroupElement &h) { return conjugate(g, h); };
}

GroupElement canonical_path(const LocalGroupChart &chart, const GroupElement &g, double s) {
  const FloatVector x = chart.log(g);
  return chart.exp(scaled(x, s));
}

FloatVector left_log_derivative(const LocalGroupChart &chart, const FloatMatrix &z, const FloatMatrix &dz) {
  const std::size_t n = z.rows();
  const FloatMatrix b = matrix_exp(block_upper(z, dz));
  const FloatMatrix gamma = top_left(b, n);
  const FloatMatrix dgamma = top_right(b, n);
  return chart.coordinates(chart.inverse(gamma) * dgamma);
}

FloatVector I1(const LocalGroupChart &chart, const GroupAction &action, const Cochain &beta, const GroupElement &g,
               const IntegratorConfig &cfg) {
  if (beta.degree() != 1 || beta.domain_dim() != chart.group_dim())
    throw DimensionError("I1 needs a degree-1 cochain on g0");
  const FloatVector x = chart.log(g);
  if (!cfg.general_path) {
    const std::vector<FloatVector> args{x};
    const FloatVector bx = beta.evaluate(args);
    return integrate_01(cfg.quad, [&](double s) { return action(chart.exp(scaled(x, s))) * bx; });
  }
  const FloatMatrix big_x = chart.realize(x);
  return integrate_01(cfg.quad, [&](double s) {
    const FloatMatrix z = big_x * s;
    const std::vector<FloatVector> args{left_log_derivative(chart, z, big_x)};
    return action(matrix_exp(z)) * beta.evaluate(args);
  });
}

FloatVector I1_tau(const LocalGroupChart &chart, const Cochain &omega, const GroupElement &g,
                   const IntegratorConfig &cfg) {
  const Cochain beta = tau(omega);
  return I1(chart, [&chart](const GroupElement &k) { return chart.hom_action(k); }, beta, g, cfg);
}

namespace {

FloatVector I1_tau_from(const LocalGroupChart &chart, const Cochain &omega, std::span<const double> x,
                        const IntegratorConfig &cfg) {
  const Cochain beta = tau(omega);
  if (!cfg.general_path) {
    const std::vector<FloatVector> args{FloatVector(x.begin(), x.end())};
    const FloatVector bx = beta.evaluate(args);
    return integrate_01(cfg.quad, [&](double s) { return chart.hom_action(chart.exp(scaled(x, s))) * bx; });
  }
  const FloatMatrix big_x = chart.realize(x);
  return integrate_01(cfg.quad, [&](double s) {
    const FloatMatrix z = big_x * s;
    const std::vector<FloatVector> args{left_log_derivative(chart, z, big_x)};
    return chart.hom_action(matrix_exp(z)) * beta.evaluate(args);
  });
}

// x = log g, y = log(g |> h).
FloatVector I2_core(const LocalGroupChart &chart, const Cochain &omega, std::span<const double> x,
                    std::span<const double> y, const IntegratorConfig &cfg) {
  if (omega.degree() != 2 || omega.domain_dim() != chart.group_dim() || omega.coeff_dim() != chart.center_dim())
    throw DimensionError("I2 needs a degree-2 cochain on g0 valued in the center");
  const std::size_t q = chart.center_dim();
  const FloatVector alpha = I1_tau_from(chart, omega, x, cfg);
  if (!cfg.general_path) {
    const FloatVector alpha_y = apply_hom(alpha, y, q);
    return integrate_01(cfg.quad, [&](double t) { return chart.action(chart.exp(scaled(y, t))) * alpha_y; });
  }
  const FloatMatrix big_y = chart.realize(y);
  return integrate_01(cfg.quad, [&](double t) {
    const FloatMatrix z = big_y * t;
    const FloatVector l = left_log_derivative(chart, z, big_y);
    return chart.action(matrix_exp(z)) * apply_hom(alpha, l, q);
  });
}

} // namespace

FloatVector I1_tau_at(const LocalGroupChart &chart, const Cochain &omega, std::span<const double> x,
                      const IntegratorConfig &cfg) {
  return I1_tau_from(chart, omega, x, cfg);
}

FloatVector I2(const LocalGroupChart &chart, const Cochain &omega, const GroupElement &g, const GroupElement &h,
               const IntegratorConfig &cfg) {
  const GroupElement k = chart.conjugate(g, h);
  return I2_core(chart, omega, chart.log(g), chart.log(k), cfg);
}

FloatVector I2_at(const LocalGroupChart &chart, const Cochain &omega, std::span<const double> x,
                  std::span<const double> y, const IntegratorConfig &cfg) {
  const FloatVector y_conj = chart.adjoint(chart.exp(x)) * y;
  return I2_core(chart, omega, x, y_conj, cfg);
}

RackCochainFn I2_cochain(const LocalGroupChart &chart, const Cochain &omega, const IntegratorConfig &cfg) {
  RackCochainFn f;
  f.arity = 2;
  f.evaluate = [&chart, omega, cfg](std::span<const GroupElement> args) {
    return I2(chart, omega, args[0], args[1], cfg);
  };
  return f;
}

LocalRackElement rack_product(const LocalGroupChart &chart, const Cochain &omega, const LocalRackElement &u,
                              const LocalRackElement &v, const IntegratorConfig &cfg) {
  return augmented_action(chart, omega, u.g, v, cfg);
}

LocalRackElement augmented_action(const LocalGroupChart &chart, const Cochain &omega, const GroupElement &g,
                                  const LocalRackElement &v, const IntegratorConfig &cfg) {
  LocalRackElement out;
  out.g = chart.conjugate(g, v.g);
  out.a = add<double>(chart.action(g) * v.a, I2(chart, omega, g, v.g, cfg));
  return out;
}

FloatVector ghost_identity_defect(const LocalGroupChart &chart, const Cochain &omega, const GroupElement &g,
                                  const GroupElement &h, const GroupElement &k, const IntegratorConfig &cfg) {
  const GroupElement gh = chart.multiply(g, h);
  chart.require(gh);
  const GroupElement h_k = chart.conjugate(h, k);
  FloatVector out = chart.action(g) * I2(chart, omega, h, k, cfg);
  out = sub<double>(out, I2(chart, omega, gh, k, cfg));
  return add<double>(out, I2(chart, omega, g, h_k, cfg));
}

FloatVector delta2(const TwoPointCochain &f, const LocalGroupChart &chart, std::span<const double> x,
                   std::span<const double> y, const IntegratorConfig &cfg) {
  const double h = cfg.fd_step;
  auto value = [&](double s, double t) { return f(chart.exp(scaled(x, s)), chart.exp(scaled(y, t))); };
  FloatVector out = value(h, h);
  out = sub<double>(out, value(h, -h));
  out = sub<double>(out, value(-h, h));
  out = add<double>(out, value(-h, -h));
  return scaled(out, 1.0 / (4.0 * h * h));
}

FloatVector tangent_bracket(const LocalGroupChart &chart, const RackProductFn &product, std::span<const double> u,
                            std::span<const double> v, const IntegratorConfig &cfg) {
  const auto &ext = chart.extension();
  const FloatMatrix p = to_float(ext.projection);
  const FloatMatrix c = to_float(ext.center_projection);
  const FloatVector x = p * u;
  const FloatVector a = c * u;
  const FloatVector y = p * v;
  const FloatVector b = c * v;
  const double h = cfg.fd_step;
  auto value = [&](double s, double t) {
    const LocalRackElement w =
        product(LocalRackElement{chart.exp(scaled(x, s)), scaled(a, s)}, LocalRackElement{chart.exp(scaled(y, t)), scaled(b, t)});
    FloatVector out = chart.log(w.g);
    out.insert(out.end(), w.a.begin(), w.a.end());
    return out;
  };
  FloatVector d = value(h, h);
  d = sub<double>(d, value(h, -h));
  d = sub<double>(d, value(-h, h));
  d = add<double>(d, value(-h, -h));
  d = scaled(d, 1.0 / (4.0 * h * h));
  const std::size_t pd = chart.group_dim();
  const FloatVector dx(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(pd));
  const FloatVector da(d.begin() + static_cast<std::ptrdiff_t>(pd), d.end());
  return add<double>(to_float(ext.section) * dx, to_float(ext.center_inclusion) * da);
}

void require_lie_cocycle(const CentralExtensionData &ext, const Cochain &omega) {
  const std::size_t p = ext.g0_dim();
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      const std::array<std::size_t, 2> ij{i, j};
      const std::array<std::size_t, 2> ji{j, i};
      if (add<Rational>(omega.value(ij), omega.value(ji)) != ExactVector(ext.center_dim(), Rational(0)))
        throw NotLieCocycle("omega is not antisymmetric");
    }
  Representation rep = [&] {
    try {
      return ext.center_symmetric_representation();
    } catch (const std::invalid_argument &e) {
      throw NotLieCocycle(std::string("center is not a symmetric representation: ") + e.what());
    }
  }();
  if (!leibniz_differential(rep, omega).is_zero())
    throw NotLieCocycle("omega fails the Lie cocycle identity");
}

FloatVector iota2(const LocalGroupChart &chart, const Cochain &omega, const GroupElement &g, const GroupElement &h,
                  const IntegratorConfig &cfg) {
  require_lie_cocycle(chart.extension(), omega);
  chart.require(g);
  chart.require(h);
  chart.require(chart.multiply(g, h));
  const std::size_t q = chart.center_dim();
  if (chart.group_dim() == 0)
    return FloatVector(q, 0.0);
  const FloatMatrix log_h = chart.realize(chart.log(h));

  // gamma(t, s) = exp(t A(s) + s B(t)); A(s) = log(g exp(s log h)), B(t) = log(g exp((1 - t) log h)).
  auto integrand = [&](double t, double s) {
    const FloatMatrix ma = g * matrix_exp(log_h * s);
    const FloatMatrix mb = g * matrix_exp(log_h * (1.0 - t));
    const FloatMatrix a = matrix_log(ma);
    const FloatMatrix b = matrix_log(mb);
    const FloatMatrix da = log_derivative(ma, ma * log_h);
    const FloatMatrix db = log_derivative(mb, -(mb * log_h));
    const FloatMatrix z = a * t + b * s;
    const FloatMatrix dz_t = a + db * s;
    const FloatMatrix dz_s = da * t + b;
    const std::vector<FloatVector> args{left_log_derivative(chart, z, dz_t), left_log_derivative(chart, z, dz_s)};
    return chart.action(matrix_exp(z)) * omega.evaluate(args);
  };
  // Simplex t + s <= 1 via t = u, s = (1 - u) v.
  return integrate_01(cfg.quad, [&](double u) {
    return scaled(integrate_01(cfg.quad, [&](double v) { return integrand(u, (1.0 - u) * v); }), 1.0 - u);
  });
}

LocalRackElement group_product(const LocalGroupChart &chart, const Cochain &omega, const LocalRackElement &u,
                               const LocalRackElement &v, const IntegratorConfig &cfg) {
  LocalRackElement out;
  out.g = chart.multiply(u.g, v.g);
  out.a = add<double>(add<double>(u.a, chart.action(u.g) * v.a), iota2(chart, omega, u.g, v.g, cfg));
  return out;
}

LocalRackElement group_inverse(const LocalGroupChart &chart, const Cochain &omega, const LocalRackElement &u,
                               const IntegratorConfig &cfg) {
  LocalRackElement out;
  out.g = chart.inverse(u.g);
  const FloatVector shifted = add<double>(u.a, iota2(chart, omega, u.g, out.g, cfg));
  out.a = scaled(chart.action(out.g) * shifted, -1.0);
  return out;
}

LocalRackElement group_conjugate(const LocalGroupChart &chart, const Cochain &omega, const LocalRackElement &u,
                                 const LocalRackElement &v, const IntegratorConfig &cfg) {
  return group_product(chart, omega, group_product(chart, omega, u, v, cfg), group_inverse(chart, omega, u, cfg),
                       cfg);
}

double uniform(std::mt19937_64 &rng, double lo, double hi) {
  const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

GroupElement sample_group_element(const LocalGroupChart &chart, std::mt19937_64 &rng, double max_norm) {
  const std::size_t p = chart.group_dim();
  FloatVector x(p);
  for (auto &xi : x)
    xi = uniform(rng, -1.0, 1.0);
  const double fraction = uniform(rng, 0.1, 1.0);
  double lambda = fraction;
  GroupElement g = chart.exp(scaled(x, lambda));
  while (norm1(g - chart.identity()) > max_norm * fraction) {
    lambda *= 0.8;
    g = chart.exp(scaled(x, lambda));
  }
  return g;
}

FloatVector sample_center(const LocalGroupChart &chart, std::mt19937_64 &rng, double scale) {
  FloatVector a(chart.center_dim());
  for (auto &ai : a)
    ai = uniform(rng, -scale, scale);
  return a;
}

} // namespace leibrack
