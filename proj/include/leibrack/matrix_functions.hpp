#pragma once

#include "leibrack/matrix.hpp"

#include <optional>
#include <stdexcept>

namespace leibrack {

/// A group element or argument left the local chart neighbourhood.
class OutOfChartError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Result of exp/log applied to an exact matrix.
///
/// `exact` is set when the argument was nilpotent (so the series terminates);
/// otherwise the float path ran and `float_fallback` is raised.
struct MatrixFunctionResult {
  std::optional<ExactMatrix> exact;
  FloatMatrix value;
  bool float_fallback = false;
};

/// Smallest d <= n with m^d = 0, or nullopt when m is not nilpotent.
std::optional<std::size_t> nilpotency_index(const ExactMatrix &m);
/// Same check for float matrices; succeeds only when a power is exactly zero
/// (strictly triangular structure survives floating-point products).
std::optional<std::size_t> nilpotency_index(const FloatMatrix &m);

MatrixFunctionResult matrix_exp(const ExactMatrix &m);
FloatMatrix matrix_exp(const FloatMatrix &m);

/// Principal logarithm on the ball ||m - I||_1 < 1. Throws OutOfChartError outside it.
/// The exact overload accepts any unipotent m, where the series terminates.
MatrixFunctionResult matrix_log(const ExactMatrix &m);
FloatMatrix matrix_log(const FloatMatrix &m);

} // namespace leibrack
