#pragma once

// Sparse multivariate polynomials over Q, just enough to integrate the
// five-dimensional example symbolically.

#include "leibrack/rational.hpp"

#include <cmath>
#include <map>
#include <vector>

namespace oracle {

using leibrack::Rational;

class Poly {
public:
  using Exponents = std::vector<int>;

  explicit Poly(std::size_t vars = 0) : vars_(vars) {}

  static Poly constant(std::size_t vars, const Rational &c) {
    Poly p(vars);
    if (!c.is_zero())
      p.terms_[Exponents(vars, 0)] = c;
    return p;
  }
  static Poly variable(std::size_t vars, std::size_t i) {
    Poly p(vars);
    Exponents e(vars, 0);
    e[i] = 1;
    p.terms_[e] = Rational(1);
    return p;
  }

  [[nodiscard]] std::size_t vars() const { return vars_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  Poly &operator+=(const Poly &o) {
    for (const auto &[e, c] : o.terms_)
      add_term(e, c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly &b) { return a += b; }
  friend Poly operator-(Poly a, const Poly &b) { return a += b * Rational(-1); }
  friend Poly operator*(const Poly &a, const Rational &s) {
    Poly out(a.vars_);
    for (const auto &[e, c] : a.terms_)
      out.add_term(e, c * s);
    return out;
  }
  friend Poly operator*(const Poly &a, const Poly &b) {
    Poly out(a.vars_);
    for (const auto &[ea, ca] : a.terms_)
      for (const auto &[eb, cb] : b.terms_) {
        Exponents e(a.vars_);
        for (std::size_t i = 0; i < a.vars_; ++i)
          e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  friend bool operator==(const Poly &a, const Poly &b) { return a.terms_ == b.terms_; }

  /// Integral over variable i from 0 to 1; variable i no longer appears.
  [[nodiscard]] Poly integrate01(std::size_t i) const {
    Poly out(vars_);
    for (const auto &[e, c] : terms_) {
      Exponents f = e;
      f[i] = 0;
      out.add_term(f, c / Rational(e[i] + 1));
    }
    return out;
  }

  [[nodiscard]] double operator()(const std::vector<double> &x) const {
    double sum = 0.0;
    for (const auto &[e, c] : terms_) {
      double m = c.to_double();
      for (std::size_t i = 0; i < vars_; ++i)
        m *= std::pow(x[i], e[i]);
      sum += m;
    }
    return sum;
  }

private:
  void add_term(const Exponents &e, const Rational &c) {
    if (c.is_zero())
      return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }

  std::size_t vars_;
  std::map<Exponents, Rational> terms_;
};

using PolyMatrix = std::vector<std::vector<Poly>>;

inline PolyMatrix zeros(std::size_t rows, std::size_t cols, std::size_t vars) {
  return PolyMatrix(rows, std::vector<Poly>(cols, Poly(vars)));
}

inline PolyMatrix operator*(const PolyMatrix &a, const PolyMatrix &b) {
  const std::size_t vars = a[0][0].vars();
  PolyMatrix c = zeros(a.size(), b[0].size(), vars);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j)
        c[i][j] += a[i][k] * b[k][j];
  return c;
}

} // namespace oracle
