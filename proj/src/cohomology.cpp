#include "leibrack/cohomology.hpp"

#include <limits>

namespace leibrack {

Cochain leibniz_differential(const Representation &rep, const Cochain &w) {
  const LeibnizAlgebra &alg = rep.algebra;
  const std::size_t d = alg.dim();
  const std::size_t m = rep.carrier_dim;
  if (w.domain_dim() != d || w.coeff_dim() != m)
    throw DimensionError("cochain does not match the representation");
  const std::size_t n = w.degree();
  Cochain out(n + 1, d, m);

  std::vector<std::size_t> sub(n);
  auto accumulate = [&](ExactVector &acc, const ExactVector &v, const Rational &coef) {
    if (coef.is_zero())
      return;
    for (std::size_t c = 0; c < m; ++c)
      acc[c] += coef * v[c];
  };

  for (std::size_t flat = 0; flat < out.tuple_count(); ++flat) {
    const std::vector<std::size_t> x = out.tuple_at(flat);
    ExactVector acc(m, Rational(0));

    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t a = 0, b = 0; a <= n; ++a)
        if (a != i)
          sub[b++] = x[a];
      const ExactVector lv = rep.left[x[i]] * w.value(sub);
      accumulate(acc, lv, Rational(i % 2 == 0 ? 1 : -1));
    }

    for (std::size_t a = 0; a < n; ++a)
      sub[a] = x[a];
    const ExactVector rv = rep.right[x[n]] * w.value(sub);
    // (-1)^(n-1)
    accumulate(acc, rv, Rational(n % 2 == 1 ? 1 : -1));

    for (std::size_t i = 0; i < n + 1; ++i)
      for (std::size_t j = i + 1; j <= n; ++j) {
        const Rational sign(i % 2 == 0 ? -1 : 1);
        for (std::size_t k = 0; k < d; ++k) {
          const Rational &c = alg.structure_constant(x[i], x[j], k);
          if (c.is_zero())
            continue;
          for (std::size_t a = 0, b = 0; a <= n; ++a) {
            if (a == i)
              continue;
            sub[b++] = (a == j) ? k : x[a];
          }
          accumulate(acc, w.value(sub), sign * c);
        }
      }

    for (std::size_t c = 0; c < m; ++c)
      out.at_flat(flat, c) = acc[c];
  }
  return out;
}

Cochain tau(const Cochain &w) {
  if (w.degree() == 0)
    throw std::invalid_argument("tau needs degree >= 1");
  const std::size_t d = w.domain_dim();
  const std::size_t q = w.coeff_dim();
  Cochain out(w.degree() - 1, d, d * q);
  for (std::size_t flat = 0; flat < out.tuple_count(); ++flat)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t c = 0; c < q; ++c)
        out.at_flat(flat, c * d + j) = w.at_flat(flat * d + j, c);
  return out;
}

Cochain tau_inverse(const Cochain &w, std::size_t coeff_dim) {
  const std::size_t d = w.domain_dim();
  if (w.coeff_dim() != d * coeff_dim)
    throw DimensionError("tau_inverse: coefficient dimension is not dim(g) * dim(a)");
  Cochain out(w.degree() + 1, d, coeff_dim);
  for (std::size_t flat = 0; flat < w.tuple_count(); ++flat)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t c = 0; c < coeff_dim; ++c)
        out.at_flat(flat * d + j, c) = w.at_flat(flat, c * d + j);
  return out;
}

Representation hom_representation(const Representation &rep) {
  const LeibnizAlgebra &alg = rep.algebra;
  if (!is_lie(alg))
    throw NotLieError("Hom(g, a) representation needs a Lie algebra");
  const std::size_t d = alg.dim();
  const std::size_t q = rep.carrier_dim;
  std::vector<ExactMatrix> action;
  for (std::size_t i = 0; i < d; ++i) {
    ExactMatrix mi(q * d, q * d);
    for (std::size_t c = 0; c < q; ++c)
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t c2 = 0; c2 < q; ++c2)
          mi(c * d + j, c2 * d + j) += rep.left[i](c, c2);
        for (std::size_t j2 = 0; j2 < d; ++j2)
          mi(c * d + j, c * d + j2) -= alg.structure_constant(i, j, j2);
      }
    action.push_back(std::move(mi));
  }
  try {
    return Representation::symmetric(alg, q * d, std::move(action));
  } catch (const std::invalid_argument &e) {
    throw NotLieError(std::string("left action is not a Lie representation: ") + e.what());
  }
}

RackModuleStructure symmetric_rack_module(std::size_t carrier_dim, GroupAction action, Conjugation conj) {
  RackModuleStructure mod;
  mod.carrier_dim = carrier_dim;
  mod.conj = conj;
  mod.phi = [action](const GroupElement &x, const GroupElement &) { return action(x); };
  mod.psi = [action, conj, carrier_dim](const GroupElement &x, const GroupElement &y) {
    return FloatMatrix::identity(carrier_dim) - action(conj(x, y));
  };
  return mod;
}

RackModuleStructure antisymmetric_rack_module(std::size_t carrier_dim, GroupAction action, Conjugation conj) {
  RackModuleStructure mod;
  mod.carrier_dim = carrier_dim;
  mod.conj = std::move(conj);
  mod.phi = [action](const GroupElement &x, const GroupElement &) { return action(x); };
  mod.psi = [carrier_dim](const GroupElement &, const GroupElement &) {
    return FloatMatrix(carrier_dim, carrier_dim);
  };
  return mod;
}

GroupElement nested_conjugate(std::span<const GroupElement> xs, const Conjugation &conj) {
  if (xs.empty())
    throw std::invalid_argument("nested_conjugate of an empty list");
  GroupElement acc = xs.back();
  for (std::size_t i = xs.size() - 1; i-- > 0;)
    acc = conj(xs[i], acc);
  return acc;
}

FloatVector rack_differential_eval(const RackModuleStructure &mod, const RackCochainFn &f,
                                   std::span<const GroupElement> args, RackDifferentialConvention convention) {
  const std::size_t n = f.arity;
  if (args.size() != n + 1)
    throw DimensionError("rack differential needs arity + 1 arguments");
  if (n == 0)
    throw std::invalid_argument("rack differential of a 0-cochain is not defined here");
  FloatVector out(mod.carrier_dim, 0.0);
  auto add_scaled = [&](double s, const FloatVector &v) {
    for (std::size_t c = 0; c < out.size(); ++c)
      out[c] += s * v[c];
  };

  for (std::size_t i = 0; i < n; ++i) {
    const double sign = (i % 2 == 0) ? 1.0 : -1.0;
    std::vector<GroupElement> hat;
    for (std::size_t a = 0; a <= n; ++a)
      if (a != i)
        hat.push_back(args[a]);
    const GroupElement first = nested_conjugate(args.subspan(0, i + 1), mod.conj);
    const GroupElement second = nested_conjugate(hat, mod.conj);
    add_scaled(sign, mod.phi(first, second) * f.evaluate(hat));

    std::vector<GroupElement> moved(args.begin(), args.begin() + static_cast<std::ptrdiff_t>(i));
    for (std::size_t a = i + 1; a <= n; ++a)
      moved.push_back(mod.conj(args[i], args[a]));
    add_scaled(-sign, f.evaluate(moved));
  }

  std::vector<GroupElement> head(args.begin(), args.begin() + static_cast<std::ptrdiff_t>(n));
  std::vector<GroupElement> tail(args.begin(), args.begin() + static_cast<std::ptrdiff_t>(n - 1));
  tail.push_back(args[n]);
  const GroupElement first = nested_conjugate(head, mod.conj);
  const GroupElement second = nested_conjugate(tail, mod.conj);
  double sign = (n % 2 == 0) ? 1.0 : -1.0;
  if (convention == RackDifferentialConvention::proof_expansion)
    sign = -sign;
  add_scaled(sign, mod.psi(first, second) * f.evaluate(head));
  return out;
}

FloatVector rack_d1_symmetric(const GroupAction &action, const Conjugation &conj, const RackCochainFn &f,
                              const GroupElement &g, const GroupElement &h) {
  const GroupElement gh = conj(g, h);
  const std::vector<GroupElement> a_h{h};
  const std::vector<GroupElement> a_gh{gh};
  const std::vector<GroupElement> a_g{g};
  const FloatVector fg = f.evaluate(a_g);
  FloatVector out = action(g) * f.evaluate(a_h);
  out = sub<double>(out, f.evaluate(a_gh));
  out = sub<double>(out, action(gh) * fg);
  return add<double>(out, fg);
}

FloatVector rack_d2_antisymmetric(const GroupAction &action, const Conjugation &conj, const RackCochainFn &f,
                                  const GroupElement &g, const GroupElement &h, const GroupElement &k) {
  const GroupElement g_h = conj(g, h);
  const GroupElement g_k = conj(g, k);
  const GroupElement h_k = conj(h, k);
  const std::vector<GroupElement> t1{h, k};
  const std::vector<GroupElement> t2{g_h, g_k};
  const std::vector<GroupElement> t3{g, k};
  const std::vector<GroupElement> t4{g, h_k};
  FloatVector out = action(g) * f.evaluate(t1);
  out = sub<double>(out, f.evaluate(t2));
  out = sub<double>(out, action(g_h) * f.evaluate(t3));
  return add<double>(out, f.evaluate(t4));
}

double ModuleAxiomReport::max_defect() const { return std::max({m0, m1, m2, m3, m4}); }

ModuleAxiomReport check_module_axioms(const RackModuleStructure &mod, std::span<const GroupTriple> samples) {
  ModuleAxiomReport r;
  const std::size_t q = mod.carrier_dim;
  const FloatMatrix id = FloatMatrix::identity(q);
  auto defect = [](const FloatMatrix &a, const FloatMatrix &b) { return max_abs(a - b); };
  for (const auto &s : samples) {
    const auto &x = s.x;
    const auto &y = s.y;
    const auto &z = s.z;
    const GroupElement one = GroupElement::identity(x.rows());
    const GroupElement y_z = mod.conj(y, z);
    const GroupElement x_y = mod.conj(x, y);
    const GroupElement x_z = mod.conj(x, z);

    const FloatMatrix phi_xy = mod.phi(x, y);
    try {
      r.m0 = std::max(r.m0, defect(phi_xy * inverse(phi_xy), id));
    } catch (const std::domain_error &) {
      r.m0 = std::numeric_limits<double>::infinity();
    }
    const FloatMatrix phi_x_yz = mod.phi(x, y_z);
    const FloatMatrix phi_xy_xz = mod.phi(x_y, x_z);
    const FloatMatrix psi_xy_xz = mod.psi(x_y, x_z);
    r.m1 = std::max(r.m1, defect(phi_x_yz * mod.phi(y, z), phi_xy_xz * mod.phi(x, z)));
    r.m2 = std::max(r.m2, defect(phi_x_yz * mod.psi(y, z), psi_xy_xz * phi_xy));
    r.m3 = std::max(r.m3, defect(mod.psi(x, y_z), phi_xy_xz * mod.psi(x, z) + psi_xy_xz * mod.psi(x, y)));
    r.m4 = std::max(r.m4, defect(mod.phi(one, y), id));
    r.m4 = std::max(r.m4, max_abs(mod.psi(x, one)));
    ++r.samples;
  }
  return r;
}

} // namespace leibrack
