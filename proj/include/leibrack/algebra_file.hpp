#pragma once

#include "leibrack/leibniz_algebra.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>

namespace leibrack {

class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// JSON document:
///   {"dim": n, "basis": ["e1", ...], "brackets": [{"left": i, "right": j, "value": {"k": "p/q", ...}}]}
/// Indices are 0-based; coefficients are integers or "p/q" strings; omitted
/// pairs are zero brackets. Throws ParseError when malformed and
/// ValidationError when the Leibniz identity fails.
LeibnizAlgebra parse_algebra_text(const std::string &text);
LeibnizAlgebra parse_algebra_file(const std::filesystem::path &path);

/// Canonical serialization (brackets sorted by (left, right), coefficients as strings).
std::string serialize_algebra(const LeibnizAlgebra &alg);

} // namespace leibrack
