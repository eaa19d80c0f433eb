#pragma once

#include "leibrack/leibniz_algebra.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace leibrack {

/// One nonzero structure constant: [e_left, e_right] has `coefficient` on e_target.
struct BracketTerm {
  std::size_t left;
  std::size_t right;
  std::size_t target;
  Rational coefficient;
};

LeibnizAlgebra algebra_from_terms(std::size_t dim, std::span<const BracketTerm> terms,
                                  std::vector<std::string> basis_names = {});

/// The non-split five-dimensional example:
/// [e1,e1] = [e1,e2] = e3, [e2,e1] = [e2,e2] = [e1,e3] = e4, [e1,e4] = [e2,e3] = e5.
LeibnizAlgebra dim5_algebra();
/// [e1,e2] = e3 = -[e2,e1].
LeibnizAlgebra heisenberg_algebra();
LeibnizAlgebra abelian3_algebra();

/// Seeded random nilpotent Leibniz algebra of dimension <= 5, built as
/// g0 (+)_omega a with g0 abelian or Heisenberg, rho a polynomial in the
/// shift matrix, and omega drawn from the exact cocycle space. Every left
/// multiplication is strictly lower triangular in the standard basis.
LeibnizAlgebra random_nilpotent_leibniz(std::uint64_t seed);

/// Closed forms printed for the five-dimensional example, in the coordinates
/// a = (a1, a2) of g0 and (e3, e4, e5) of the center.
namespace dim5_printed {
/// Integral of tau(omega) along s -> s a, as the 3 x 2 matrix stored row-major.
FloatVector i1(std::span<const double> a);
/// f(a, b).
FloatVector f(std::span<const double> a, std::span<const double> b);
/// a |> b on R^5. `corner` is the bottom-right entry of phi_a: 1 for the
/// exponential, 0 as printed.
FloatVector conjugation(std::span<const double> a, std::span<const double> b, double corner = 1.0);
} // namespace dim5_printed

std::vector<std::string> builtin_names();
std::optional<LeibnizAlgebra> builtin_algebra(std::string_view name);

} // namespace leibrack
