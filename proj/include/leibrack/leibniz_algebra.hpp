#pragma once

#include "leibrack/cochain.hpp"
#include "leibrack/matrix.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace leibrack {

/// The structure tensor fails the left Leibniz identity.
class ValidationError : public std::runtime_error {
public:
  ValidationError(std::array<std::size_t, 3> triple, ExactVector defect, const std::string &what);

  [[nodiscard]] const std::array<std::size_t, 3> &triple() const { return triple_; }
  [[nodiscard]] const ExactVector &defect() const { return defect_; }

private:
  std::array<std::size_t, 3> triple_;
  ExactVector defect_;
};

/// Finite-dimensional left Leibniz algebra over Q given by structure constants:
/// [e_i, e_j] = sum_k c(i, j, k) e_k.
class LeibnizAlgebra {
public:
  LeibnizAlgebra() = default;

  /// Validates the left Leibniz identity on every basis triple; throws ValidationError.
  LeibnizAlgebra(std::size_t dim, std::vector<Rational> structure,
                 std::vector<std::string> basis_names = {});

  /// Skips validation. For negative tests and diagnostics only.
  static LeibnizAlgebra unchecked(std::size_t dim, std::vector<Rational> structure,
                                  std::vector<std::string> basis_names = {});

  static LeibnizAlgebra abelian(std::size_t dim);

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const std::vector<std::string> &basis_names() const { return names_; }
  [[nodiscard]] const Rational &structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  [[nodiscard]] std::span<const Rational> structure() const { return c_; }

  /// Matrix of [x, -] acting on coordinate vectors.
  [[nodiscard]] ExactMatrix left_multiplication(std::span<const Rational> x) const;
  [[nodiscard]] ExactMatrix left_multiplication(std::size_t i) const;
  /// Matrix of [-, y].
  [[nodiscard]] ExactMatrix right_multiplication(std::size_t j) const;

  friend bool operator==(const LeibnizAlgebra &a, const LeibnizAlgebra &b) {
    return a.dim_ == b.dim_ && a.c_ == b.c_;
  }

private:
  LeibnizAlgebra(std::size_t dim, std::vector<Rational> structure,
                 std::vector<std::string> basis_names, bool validate);

  std::size_t dim_ = 0;
  std::vector<std::string> names_;
  std::vector<Rational> c_;
};

ExactVector bracket(const LeibnizAlgebra &alg, std::span<const Rational> x, std::span<const Rational> y);
FloatVector bracket(const LeibnizAlgebra &alg, std::span<const double> x, std::span<const double> y);

/// [x,[y,z]] - [[x,y],z] - [y,[x,z]].
ExactVector leibniz_defect(const LeibnizAlgebra &alg, std::span<const Rational> x,
                           std::span<const Rational> y, std::span<const Rational> z);

/// First basis triple (lexicographic) with nonzero defect, if any.
std::optional<std::array<std::size_t, 3>> first_leibniz_violation(const LeibnizAlgebra &alg);

bool is_lie(const LeibnizAlgebra &alg);

/// Exact basis of Z_L(g) = { x : [x, y] = 0 for all y }.
std::vector<ExactVector> left_center(const LeibnizAlgebra &alg);

/// Exact basis (reduced echelon rows) of the two-sided ideal generated by all squares [x, x].
std::vector<ExactVector> squares_ideal(const LeibnizAlgebra &alg);

enum class RepresentationFlavor { symmetric, antisymmetric, general };

std::string to_string(RepresentationFlavor f);

/// Leibniz representation of `algebra` on a carrier space:
/// [e_i, m]_L = left[i] m and [m, e_i]_R = right[i] m.
struct Representation {
  LeibnizAlgebra algebra;
  std::size_t carrier_dim = 0;
  std::vector<ExactMatrix> left;
  std::vector<ExactMatrix> right;
  RepresentationFlavor flavor = RepresentationFlavor::general;

  /// Checks shapes, the flavor constraint and the (LLM), (LML), (MLL) axioms
  /// exactly; throws std::invalid_argument naming the failing axiom.
  Representation(LeibnizAlgebra algebra, std::size_t carrier_dim, std::vector<ExactMatrix> left,
                 std::vector<ExactMatrix> right, RepresentationFlavor flavor);

  /// right = -left. `action` must be a Lie morphism g -> End(M).
  static Representation symmetric(LeibnizAlgebra algebra, std::size_t carrier_dim,
                                   std::vector<ExactMatrix> action);
  /// right = 0.
  static Representation antisymmetric(LeibnizAlgebra algebra, std::size_t carrier_dim,
                                      std::vector<ExactMatrix> action);
  /// The algebra acting on itself by left and right brackets.
  static Representation adjoint(const LeibnizAlgebra &algebra);
};

/// Per-axiom exactness check; empty when all three axioms hold.
std::vector<std::string> representation_axiom_failures(const LeibnizAlgebra &alg,
                                                       std::span<const ExactMatrix> left,
                                                       std::span<const ExactMatrix> right);

/// The canonical abelian extension Z_L(g) -> g -> g0 = g / Z_L(g), in the
/// coordinates fixed by the echelon-pivot complement.
struct CentralExtensionData {
  LeibnizAlgebra parent;
  std::vector<ExactVector> center_basis;     ///< parent coordinates
  std::vector<ExactVector> complement_basis; ///< parent coordinates, lifts of the g0 basis
  LeibnizAlgebra g0;
  std::vector<ExactMatrix> rho;              ///< rho(e_i) on Z_L(g), one per g0 basis element
  Cochain omega;                             ///< degree 2 on g0, valued in Z_L(g)
  ExactMatrix section;                       ///< g0 -> g, n x p
  ExactMatrix projection;                    ///< g -> g0, p x n
  ExactMatrix center_inclusion;              ///< Z_L(g) -> g, n x q
  ExactMatrix center_projection;             ///< g -> Z_L(g), q x n
  std::vector<ExactMatrix> g0_realization;   ///< ad_L(section e_i) in End(g), n x n each

  [[nodiscard]] std::size_t g0_dim() const { return complement_basis.size(); }
  [[nodiscard]] std::size_t center_dim() const { return center_basis.size(); }

  /// Z_L(g) as an anti-symmetric g0-representation via rho.
  [[nodiscard]] Representation center_representation() const;
  /// Z_L(g) as a symmetric g0-representation via rho.
  [[nodiscard]] Representation center_symmetric_representation() const;

  /// [(x,a),(y,b)] = ([x,y]_0, rho_x(b) + omega(x,y)) pushed back into g.
  [[nodiscard]] ExactVector reassembled_bracket(std::span<const Rational> u, std::span<const Rational> v) const;
};

CentralExtensionData canonical_extension(const LeibnizAlgebra &alg);

/// Exact check of every CentralExtensionData invariant except the cocycle
/// condition (which needs the cohomology module). Returns failure descriptions.
std::vector<std::string> extension_invariant_failures(const CentralExtensionData &ext);

} // namespace leibrack
