#include "leibrack/cochain.hpp"

namespace leibrack {

Cochain::Cochain(std::size_t degree, std::size_t domain_dim, std::size_t coeff_dim)
    : degree_(degree), domain_dim_(domain_dim), coeff_dim_(coeff_dim) {
  tuple_count_ = 1;
  for (std::size_t i = 0; i < degree; ++i)
    tuple_count_ *= domain_dim;
  values_.assign(tuple_count_ * coeff_dim_, Rational(0));
}

std::size_t Cochain::tuple_index(std::span<const std::size_t> indices) const {
  if (indices.size() != degree_)
    throw DimensionError("cochain arity mismatch");
  std::size_t flat = 0;
  for (auto i : indices) {
    if (i >= domain_dim_)
      throw DimensionError("cochain index out of range");
    flat = flat * domain_dim_ + i;
  }
  return flat;
}

std::vector<std::size_t> Cochain::tuple_at(std::size_t flat) const {
  std::vector<std::size_t> idx(degree_);
  for (std::size_t k = degree_; k-- > 0;) {
    idx[k] = flat % domain_dim_;
    flat /= domain_dim_;
  }
  return idx;
}

ExactVector Cochain::value(std::span<const std::size_t> indices) const {
  return value_at(tuple_index(indices));
}

ExactVector Cochain::value_at(std::size_t flat) const {
  return ExactVector(values_.begin() + static_cast<std::ptrdiff_t>(flat * coeff_dim_),
                     values_.begin() + static_cast<std::ptrdiff_t>((flat + 1) * coeff_dim_));
}

Rational &Cochain::at(std::span<const std::size_t> indices, std::size_t component) {
  return values_.at(tuple_index(indices) * coeff_dim_ + component);
}

const Rational &Cochain::at(std::span<const std::size_t> indices, std::size_t component) const {
  return values_.at(tuple_index(indices) * coeff_dim_ + component);
}

namespace {

template <typename T>
Vector<T> evaluate_impl(const Cochain &w, std::span<const Vector<T>> args, auto to_scalar) {
  if (args.size() != w.degree())
    throw DimensionError("cochain evaluated with wrong number of arguments");
  for (const auto &a : args)
    if (a.size() != w.domain_dim())
      throw DimensionError("cochain argument has wrong length");
  Vector<T> out(w.coeff_dim(), T(0));
  for (std::size_t flat = 0; flat < w.tuple_count(); ++flat) {
    T weight(1);
    std::size_t rest = flat;
    for (std::size_t k = w.degree(); k-- > 0;) {
      weight *= args[k][rest % w.domain_dim()];
      rest /= w.domain_dim();
      if (weight == T(0))
        break;
    }
    if (weight == T(0))
      continue;
    for (std::size_t c = 0; c < w.coeff_dim(); ++c)
      out[c] += weight * to_scalar(w.at_flat(flat, c));
  }
  return out;
}

} // namespace

ExactVector Cochain::evaluate(std::span<const ExactVector> args) const {
  return evaluate_impl<Rational>(*this, args, [](const Rational &r) { return r; });
}

FloatVector Cochain::evaluate(std::span<const FloatVector> args) const {
  return evaluate_impl<double>(*this, args, [](const Rational &r) { return r.to_double(); });
}

bool Cochain::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rational &r) { return r.is_zero(); });
}

} // namespace leibrack
