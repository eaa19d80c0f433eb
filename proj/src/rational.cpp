#include "leibrack/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace leibrack {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty())
    return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size())
    return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!is_integer_literal(s))
    throw std::invalid_argument("not an integer literal: '" + std::string(s) + "'");
  if (s[0] == '+')
    s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

} // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0)
    throw std::invalid_argument("rational with zero denominator");
  q_ = mpq_class(numerator, denominator);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(mpq_class(parse_integer(text)));
  const mpz_class num = parse_integer(text.substr(0, slash));
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw std::invalid_argument("sign not allowed in denominator: '" + std::string(text) + "'");
  const mpz_class den = parse_integer(den_text);
  if (den == 0)
    throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rational(mpq_class(num, den));
}

std::string Rational::str() const {
  if (q_.get_den() == 1)
    return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational &Rational::operator+=(const Rational &o) {
  q_ += o.q_;
  return *this;
}

Rational &Rational::operator-=(const Rational &o) {
  q_ -= o.q_;
  return *this;
}

Rational &Rational::operator*=(const Rational &o) {
  q_ *= o.q_;
  return *this;
}

Rational &Rational::operator/=(const Rational &o) {
  if (o.is_zero())
    throw std::domain_error("rational division by zero");
  q_ /= o.q_;
  return *this;
}

Rational operator-(const Rational &a) { return Rational(mpq_class(-a.q_)); }

std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

Rational abs(const Rational &r) { return r.sign() < 0 ? -r : r; }

} // namespace leibrack
