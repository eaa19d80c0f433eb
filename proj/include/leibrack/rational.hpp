#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace leibrack {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. Every operation re-canonicalizes,
/// so two equal values always have identical numerator and denominator.
class Rational {
public:
  Rational() = default;
  Rational(long value) : q_(value) {}                     // NOLINT(implicit)
  Rational(int value) : q_(static_cast<long>(value)) {}   // NOLINT(implicit)
  Rational(long numerator, long denominator);

  /// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on junk or q = 0.
  static Rational parse(std::string_view text);

  [[nodiscard]] std::string numerator_str() const { return q_.get_num().get_str(); }
  [[nodiscard]] std::string denominator_str() const { return q_.get_den().get_str(); }
  [[nodiscard]] std::string str() const;
  [[nodiscard]] double to_double() const { return q_.get_d(); }
  [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
  [[nodiscard]] int sign() const { return sgn(q_); }

  Rational &operator+=(const Rational &o);
  Rational &operator-=(const Rational &o);
  Rational &operator*=(const Rational &o);
  Rational &operator/=(const Rational &o);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
  friend Rational operator-(const Rational &a);

  friend bool operator==(const Rational &a, const Rational &b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream &operator<<(std::ostream &os, const Rational &r);

private:
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  mpq_class q_;
};

Rational abs(const Rational &r);

} // namespace leibrack
