#pragma once

#include "leibrack/cochain.hpp"
#include "leibrack/leibniz_algebra.hpp"
#include "leibrack/matrix.hpp"

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace leibrack {

class NotLieError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// ---- Leibniz side (exact) -------------------------------------------------

/// dL^n w(x_0..x_n) = sum_{i<n} (-1)^i [x_i, w(..^x_i..)]_L
///                    + (-1)^(n-1) [w(x_0..x_{n-1}), x_n]_R
///                    + sum_{i<j} (-1)^(i+1) w(..^x_i.., [x_i,x_j], ..).
///
/// At n = 0 the same expression gives dL^0 b(x) = -[b, x]_R, which is [x, b]_L
/// for symmetric representations and 0 for anti-symmetric ones.
Cochain leibniz_differential(const Representation &rep, const Cochain &w);

/// Curries the last slot: tau(w)(x_1..x_{n-1})(x_n) = w(x_1..x_n).
/// A Hom(g, a) value alpha is stored row-major as alpha(e_j)_c at index c * dim(g) + j.
Cochain tau(const Cochain &w);
/// Inverse of tau; `coeff_dim` is dim(a).
Cochain tau_inverse(const Cochain &w, std::size_t coeff_dim);

/// Hom(g, a) with (x.alpha)(y) = x.(alpha(y)) - alpha([x, y]), as a symmetric
/// representation. Throws NotLieError when g is not Lie.
Representation hom_representation(const Representation &rep);

// ---- rack side (float) ----------------------------------------------------

using GroupElement = FloatMatrix;
using Conjugation = std::function<GroupElement(const GroupElement &, const GroupElement &)>;
using GroupAction = std::function<FloatMatrix(const GroupElement &)>;
using ModuleMap = std::function<FloatMatrix(const GroupElement &, const GroupElement &)>;

/// phi_{x,y} and psi_{x,y} as carrier matrices, together with the rack operation
/// they refer to.
struct RackModuleStructure {
  std::size_t carrier_dim = 0;
  ModuleMap phi;
  ModuleMap psi;
  Conjugation conj;
};

/// phi_{x,y} = action(x), psi_{x,y} = I - action(x |> y).
RackModuleStructure symmetric_rack_module(std::size_t carrier_dim, GroupAction action, Conjugation conj);
/// phi_{x,y} = action(x), psi_{x,y} = 0.
RackModuleStructure antisymmetric_rack_module(std::size_t carrier_dim, GroupAction action, Conjugation conj);

struct RackCochainFn {
  std::size_t arity = 0;
  std::function<FloatVector(std::span<const GroupElement>)> evaluate;
};

enum class RackDifferentialConvention {
  /// Sign (-1)^n on the psi term, as in the general definition.
  general_formula,
  /// Sign (-1)^(n-1) on the psi term, matching the n = 1 and n = 2 expansions
  /// used by the integration theorems.
  proof_expansion,
};

/// Right-nested x_1 |> (x_2 |> (... |> x_k)).
GroupElement nested_conjugate(std::span<const GroupElement> xs, const Conjugation &conj);

FloatVector rack_differential_eval(const RackModuleStructure &mod, const RackCochainFn &f,
                                   std::span<const GroupElement> args,
                                   RackDifferentialConvention convention = RackDifferentialConvention::proof_expansion);

/// g.f(h) - f(g |> h) - (g |> h).f(g) + f(g).
FloatVector rack_d1_symmetric(const GroupAction &action, const Conjugation &conj, const RackCochainFn &f,
                              const GroupElement &g, const GroupElement &h);

/// g.f(h,k) - f(g |> h, g |> k) - (g |> h).f(g,k) + f(g, h |> k).
FloatVector rack_d2_antisymmetric(const GroupAction &action, const Conjugation &conj, const RackCochainFn &f,
                                  const GroupElement &g, const GroupElement &h, const GroupElement &k);

struct ModuleAxiomReport {
  static constexpr double tolerance = 1e-10;
  double m0 = 0.0; ///< max |phi * phi^-1 - I|, infinite when phi is singular
  double m1 = 0.0;
  double m2 = 0.0;
  double m3 = 0.0;
  double m4 = 0.0;
  std::size_t samples = 0;

  [[nodiscard]] double max_defect() const;
  [[nodiscard]] bool passed() const { return max_defect() <= tolerance; }
};

struct GroupTriple {
  GroupElement x;
  GroupElement y;
  GroupElement z;
};

ModuleAxiomReport check_module_axioms(const RackModuleStructure &mod, std::span<const GroupTriple> samples);

} // namespace leibrack
