#include "leibrack/corpus.hpp"

#include "leibrack/cohomology.hpp"

#include <random>

namespace leibrack {

LeibnizAlgebra algebra_from_terms(std::size_t dim, std::span<const BracketTerm> terms,
                                  std::vector<std::string> basis_names) {
  std::vector<Rational> c(dim * dim * dim, Rational(0));
  for (const auto &t : terms) {
    if (t.left >= dim || t.right >= dim || t.target >= dim)
      throw DimensionError("bracket term index out of range");
    c[(t.left * dim + t.right) * dim + t.target] += t.coefficient;
  }
  return LeibnizAlgebra(dim, std::move(c), std::move(basis_names));
}

LeibnizAlgebra dim5_algebra() {
  const std::vector<BracketTerm> terms{
      {0, 0, 2, Rational(1)}, {0, 1, 2, Rational(1)}, {1, 0, 3, Rational(1)}, {1, 1, 3, Rational(1)},
      {0, 2, 3, Rational(1)}, {0, 3, 4, Rational(1)}, {1, 2, 4, Rational(1)},
  };
  return algebra_from_terms(5, terms);
}

LeibnizAlgebra heisenberg_algebra() {
  const std::vector<BracketTerm> terms{{0, 1, 2, Rational(1)}, {1, 0, 2, Rational(-1)}};
  return algebra_from_terms(3, terms);
}

LeibnizAlgebra abelian3_algebra() { return LeibnizAlgebra::abelian(3); }

namespace {

long small_int(std::mt19937_64 &rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

} // namespace

LeibnizAlgebra random_nilpotent_leibniz(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const bool heisenberg = small_int(rng, 0, 2) == 0;
  const std::size_t p = heisenberg ? 3 : static_cast<std::size_t>(small_int(rng, 1, 2));
  const std::size_t q = static_cast<std::size_t>(small_int(rng, 1, static_cast<long>(5 - p)));

  std::vector<Rational> g0c(p * p * p, Rational(0));
  if (heisenberg) {
    g0c[(0 * p + 1) * p + 2] = Rational(1);
    g0c[(1 * p + 0) * p + 2] = Rational(-1);
  }
  const LeibnizAlgebra g0(p, g0c);

  ExactMatrix shift(q, q);
  for (std::size_t i = 0; i + 1 < q; ++i)
    shift(i + 1, i) = Rational(1);
  std::vector<ExactMatrix> rho;
  for (std::size_t i = 0; i < p; ++i) {
    ExactMatrix m(q, q);
    if (heisenberg) {
      if (i == 0 && small_int(rng, 0, 1) == 1)
        m = shift;
    } else {
      ExactMatrix power = shift;
      for (std::size_t k = 1; k < q; ++k) {
        m += power * Rational(small_int(rng, -2, 2));
        power = power * shift;
      }
    }
    rho.push_back(std::move(m));
  }
  const Representation rep = Representation::antisymmetric(g0, q, rho);

  // Cocycle space: kernel of dL^2 on Hom(g0 (x) g0, a).
  const std::size_t unknowns = p * p * q;
  ExactMatrix d2(p * p * p * q, unknowns);
  for (std::size_t u = 0; u < unknowns; ++u) {
    Cochain w(2, p, q);
    w.at_flat(u / q, u % q) = Rational(1);
    const Cochain dw = leibniz_differential(rep, w);
    for (std::size_t r = 0; r < dw.values().size(); ++r)
      d2(r, u) = dw.values()[r];
  }
  const std::vector<ExactVector> cocycles = nullspace(d2);
  ExactVector omega(unknowns, Rational(0));
  for (const auto &z : cocycles)
    omega = add<Rational>(omega, scale<Rational>(Rational(small_int(rng, -2, 2)), z));

  const std::size_t n = p + q;
  std::vector<BracketTerm> terms;
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      for (std::size_t k = 0; k < p; ++k)
        if (!g0c[(i * p + j) * p + k].is_zero())
          terms.push_back({i, j, k, g0c[(i * p + j) * p + k]});
      for (std::size_t c = 0; c < q; ++c)
        if (!omega[(i * p + j) * q + c].is_zero())
          terms.push_back({i, j, p + c, omega[(i * p + j) * q + c]});
    }
    for (std::size_t b = 0; b < q; ++b)
      for (std::size_t c = 0; c < q; ++c)
        if (!rho[i](c, b).is_zero())
          terms.push_back({i, p + b, p + c, rho[i](c, b)});
  }
  return algebra_from_terms(n, terms);
}

namespace dim5_printed {

FloatVector i1(std::span<const double> a) {
  const double r1 = a[0];
  const double r2 = 0.5 * a[0] * a[0] + a[1];
  const double r3 = a[0] * a[1] + a[0] * a[0] * a[0] / 6.0;
  return {r1, r1, r2, r2, r3, r3};
}

FloatVector f(std::span<const double> a, std::span<const double> b) {
  const double a1 = a[0], a2 = a[1], b1 = b[0], b2 = b[1];
  const double s = b1 + b2;
  return {a1 * s, (0.5 * b1 * a1 + a2 + 0.5 * a1 * a1) * s,
          (a1 * a2 + a1 * a1 * a1 / 6.0 + 0.25 * b1 * a1 * a1 + 0.5 * b2 * a1 + 0.5 * b1 * a2 +
           b1 * b1 * a1 / 6.0) *
              s};
}

FloatVector conjugation(std::span<const double> a, std::span<const double> b, double corner) {
  const FloatVector fab = f(a, b);
  const double a1 = a[0], a2 = a[1];
  return {b[0],
          b[1],
          b[2] + fab[0],
          a1 * b[2] + b[3] + fab[1],
          (a2 + 0.5 * a1 * a1) * b[2] + a1 * b[3] + corner * b[4] + fab[2]};
}

} // namespace dim5_printed

std::vector<std::string> builtin_names() { return {"dim5", "heisenberg", "abelian3"}; }

std::optional<LeibnizAlgebra> builtin_algebra(std::string_view name) {
  if (name == "dim5")
    return dim5_algebra();
  if (name == "heisenberg")
    return heisenberg_algebra();
  if (name == "abelian3")
    return abelian3_algebra();
  return std::nullopt;
}

} // namespace leibrack
