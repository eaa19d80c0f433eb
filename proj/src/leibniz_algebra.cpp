#include "leibrack/leibniz_algebra.hpp"

#include <deque>
#include <sstream>

namespace leibrack {

namespace {

std::vector<std::string> default_names(std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i)
    names.push_back("e" + std::to_string(i + 1));
  return names;
}

std::string vector_str(std::span<const Rational> v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? ", " : "") << v[i];
  os << ")";
  return os.str();
}

ExactVector basis_vector(std::size_t n, std::size_t i) { return unit_vector<Rational>(n, i); }

bool in_span(const std::vector<ExactVector> &basis, const ExactVector &v) {
  if (is_zero<Rational>(v))
    return true;
  if (basis.empty())
    return false;
  ExactMatrix m(basis.size() + 1, v.size());
  for (std::size_t r = 0; r < basis.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c)
      m(r, c) = basis[r][c];
  for (std::size_t c = 0; c < v.size(); ++c)
    m(basis.size(), c) = v[c];
  return rank(m) == basis.size();
}

} // namespace

ValidationError::ValidationError(std::array<std::size_t, 3> triple, ExactVector defect,
                                 const std::string &what)
    : std::runtime_error(what), triple_(triple), defect_(std::move(defect)) {}

LeibnizAlgebra::LeibnizAlgebra(std::size_t dim, std::vector<Rational> structure,
                               std::vector<std::string> basis_names)
    : LeibnizAlgebra(dim, std::move(structure), std::move(basis_names), true) {}

LeibnizAlgebra LeibnizAlgebra::unchecked(std::size_t dim, std::vector<Rational> structure,
                                         std::vector<std::string> basis_names) {
  return LeibnizAlgebra(dim, std::move(structure), std::move(basis_names), false);
}

LeibnizAlgebra LeibnizAlgebra::abelian(std::size_t dim) {
  return LeibnizAlgebra(dim, std::vector<Rational>(dim * dim * dim, Rational(0)));
}

LeibnizAlgebra::LeibnizAlgebra(std::size_t dim, std::vector<Rational> structure,
                               std::vector<std::string> basis_names, bool validate)
    : dim_(dim), names_(std::move(basis_names)), c_(std::move(structure)) {
  if (c_.size() != dim_ * dim_ * dim_)
    throw DimensionError("structure tensor must have dim^3 entries");
  if (names_.empty())
    names_ = default_names(dim_);
  if (names_.size() != dim_)
    throw DimensionError("basis name count differs from dimension");
  if (!validate)
    return;
  if (const auto bad = first_leibniz_violation(*this)) {
    const auto [i, j, k] = *bad;
    ExactVector defect = leibniz_defect(*this, basis_vector(dim_, i), basis_vector(dim_, j),
                                        basis_vector(dim_, k));
    std::ostringstream os;
    os << "left Leibniz identity fails on (" << names_[i] << ", " << names_[j] << ", " << names_[k]
       << "): defect " << vector_str(defect);
    throw ValidationError(*bad, std::move(defect), os.str());
  }
}

ExactMatrix LeibnizAlgebra::left_multiplication(std::span<const Rational> x) const {
  if (x.size() != dim_)
    throw DimensionError("left_multiplication: vector length mismatch");
  ExactMatrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero())
      continue;
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (!structure_constant(i, j, k).is_zero())
          m(k, j) += x[i] * structure_constant(i, j, k);
  }
  return m;
}

ExactMatrix LeibnizAlgebra::left_multiplication(std::size_t i) const {
  return left_multiplication(basis_vector(dim_, i));
}

ExactMatrix LeibnizAlgebra::right_multiplication(std::size_t j) const {
  ExactMatrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t k = 0; k < dim_; ++k)
      m(k, i) = structure_constant(i, j, k);
  return m;
}

namespace {

template <typename T>
Vector<T> bracket_impl(const LeibnizAlgebra &alg, std::span<const T> x, std::span<const T> y, auto conv) {
  const std::size_t n = alg.dim();
  if (x.size() != n || y.size() != n)
    throw DimensionError("bracket: vector length mismatch");
  Vector<T> out(n, T(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == T(0))
      continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == T(0))
        continue;
      const T w = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        const Rational &c = alg.structure_constant(i, j, k);
        if (!c.is_zero())
          out[k] += w * conv(c);
      }
    }
  }
  return out;
}

} // namespace

ExactVector bracket(const LeibnizAlgebra &alg, std::span<const Rational> x, std::span<const Rational> y) {
  return bracket_impl<Rational>(alg, x, y, [](const Rational &c) { return c; });
}

FloatVector bracket(const LeibnizAlgebra &alg, std::span<const double> x, std::span<const double> y) {
  return bracket_impl<double>(alg, x, y, [](const Rational &c) { return c.to_double(); });
}

ExactVector leibniz_defect(const LeibnizAlgebra &alg, std::span<const Rational> x,
                           std::span<const Rational> y, std::span<const Rational> z) {
  const ExactVector yz = bracket(alg, y, z);
  const ExactVector xy = bracket(alg, x, y);
  const ExactVector xz = bracket(alg, x, z);
  ExactVector out = bracket(alg, x, yz);
  out = sub<Rational>(out, bracket(alg, xy, z));
  out = sub<Rational>(out, bracket(alg, y, xz));
  return out;
}

std::optional<std::array<std::size_t, 3>> first_leibniz_violation(const LeibnizAlgebra &alg) {
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const auto d = leibniz_defect(alg, basis_vector(n, i), basis_vector(n, j), basis_vector(n, k));
        if (!is_zero<Rational>(d))
          return std::array<std::size_t, 3>{i, j, k};
      }
  return std::nullopt;
}

bool is_lie(const LeibnizAlgebra &alg) {
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (alg.structure_constant(i, j, k) != -alg.structure_constant(j, i, k))
          return false;
  return true;
}

std::vector<ExactVector> left_center(const LeibnizAlgebra &alg) {
  // Column i of the flattened adjoint map is vec([e_i, -]).
  const std::size_t n = alg.dim();
  ExactMatrix flat(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        flat(j * n + k, i) = alg.structure_constant(i, j, k);
  return nullspace(flat);
}

std::vector<ExactVector> squares_ideal(const LeibnizAlgebra &alg) {
  const std::size_t n = alg.dim();
  std::vector<ExactVector> span;
  std::deque<ExactVector> queue;
  auto offer = [&](ExactVector v) {
    if (in_span(span, v))
      return;
    span.push_back(v);
    queue.push_back(std::move(v));
  };
  // [v, v] over v in {e_i} and {e_i + e_j} spans all squares by polarization.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      ExactVector v = basis_vector(n, i);
      if (j != i)
        v[j] += Rational(1);
      offer(bracket(alg, v, v));
    }
  while (!queue.empty()) {
    const ExactVector v = std::move(queue.front());
    queue.pop_front();
    for (std::size_t k = 0; k < n; ++k) {
      const ExactVector ek = basis_vector(n, k);
      offer(bracket(alg, ek, v));
      offer(bracket(alg, v, ek));
    }
  }
  if (span.empty())
    return {};
  return row_space_basis(ExactMatrix::from_columns(n, span).transpose());
}

std::string to_string(RepresentationFlavor f) {
  switch (f) {
  case RepresentationFlavor::symmetric:
    return "symmetric";
  case RepresentationFlavor::antisymmetric:
    return "anti-symmetric";
  case RepresentationFlavor::general:
    return "general";
  }
  return "general";
}

std::vector<std::string> representation_axiom_failures(const LeibnizAlgebra &alg,
                                                       std::span<const ExactMatrix> left,
                                                       std::span<const ExactMatrix> right) {
  const std::size_t n = alg.dim();
  std::vector<std::string> failures;
  auto combo = [&](std::span<const ExactMatrix> mats, std::size_t i, std::size_t j) {
    // Matrix of the action by [e_i, e_j].
    ExactMatrix out(mats.empty() ? 0 : mats[0].rows(), mats.empty() ? 0 : mats[0].cols());
    for (std::size_t k = 0; k < n; ++k)
      if (!alg.structure_constant(i, j, k).is_zero())
        out += mats[k] * alg.structure_constant(i, j, k);
    return out;
  };
  bool llm = true;
  bool lml = true;
  bool mll = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const ExactMatrix l_xy = combo(left, i, j);
      const ExactMatrix r_xy = combo(right, i, j);
      // [x,[y,m]_L]_L = [[x,y],m]_L + [y,[x,m]_L]_L
      if (llm && left[i] * left[j] != l_xy + left[j] * left[i])
        llm = false;
      // [x,[m,y]_R]_L = [[x,m]_L,y]_R + [m,[x,y]]_R
      if (lml && left[i] * right[j] != right[j] * left[i] + r_xy)
        lml = false;
      // [m,[x,y]]_R = [[m,x]_R,y]_R + [x,[m,y]_R]_L
      if (mll && r_xy != right[j] * right[i] + left[i] * right[j])
        mll = false;
    }
  if (!llm)
    failures.emplace_back("LLM");
  if (!lml)
    failures.emplace_back("LML");
  if (!mll)
    failures.emplace_back("MLL");
  return failures;
}

Representation::Representation(LeibnizAlgebra alg, std::size_t dim, std::vector<ExactMatrix> l,
                               std::vector<ExactMatrix> r, RepresentationFlavor f)
    : algebra(std::move(alg)), carrier_dim(dim), left(std::move(l)), right(std::move(r)), flavor(f) {
  if (left.size() != algebra.dim() || right.size() != algebra.dim())
    throw DimensionError("representation needs one matrix per basis element");
  for (std::size_t i = 0; i < algebra.dim(); ++i) {
    if (left[i].rows() != carrier_dim || left[i].cols() != carrier_dim || right[i].rows() != carrier_dim ||
        right[i].cols() != carrier_dim)
      throw DimensionError("representation matrix has wrong shape");
    if (flavor == RepresentationFlavor::symmetric && right[i] != -left[i])
      throw std::invalid_argument("symmetric representation requires right = -left");
    if (flavor == RepresentationFlavor::antisymmetric && !right[i].is_zero())
      throw std::invalid_argument("anti-symmetric representation requires right = 0");
  }
  const auto failures = representation_axiom_failures(algebra, left, right);
  if (!failures.empty()) {
    std::string msg = "representation axioms fail:";
    for (const auto &f_name : failures)
      msg += " " + f_name;
    throw std::invalid_argument(msg);
  }
}

Representation Representation::symmetric(LeibnizAlgebra alg, std::size_t dim, std::vector<ExactMatrix> action) {
  std::vector<ExactMatrix> right;
  for (const auto &m : action)
    right.push_back(-m);
  return Representation(std::move(alg), dim, std::move(action), std::move(right), RepresentationFlavor::symmetric);
}

Representation Representation::antisymmetric(LeibnizAlgebra alg, std::size_t dim,
                                             std::vector<ExactMatrix> action) {
  std::vector<ExactMatrix> right(action.size(), ExactMatrix(dim, dim));
  return Representation(std::move(alg), dim, std::move(action), std::move(right),
                        RepresentationFlavor::antisymmetric);
}

Representation Representation::adjoint(const LeibnizAlgebra &alg) {
  std::vector<ExactMatrix> left;
  std::vector<ExactMatrix> right;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    left.push_back(alg.left_multiplication(i));
    right.push_back(alg.right_multiplication(i));
  }
  return Representation(alg, alg.dim(), std::move(left), std::move(right), RepresentationFlavor::general);
}

Representation CentralExtensionData::center_representation() const {
  return Representation::antisymmetric(g0, center_dim(), rho);
}

Representation CentralExtensionData::center_symmetric_representation() const {
  return Representation::symmetric(g0, center_dim(), rho);
}

ExactVector CentralExtensionData::reassembled_bracket(std::span<const Rational> u,
                                                      std::span<const Rational> v) const {
  const ExactVector x = projection * u;
  const ExactVector y = projection * v;
  const ExactVector b = center_projection * v;
  const ExactVector xy = bracket(g0, x, y);
  const std::vector<ExactVector> args{x, y};
  ExactVector a_part = omega.evaluate(args);
  ExactMatrix rho_x(center_dim(), center_dim());
  for (std::size_t i = 0; i < g0_dim(); ++i)
    if (!x[i].is_zero())
      rho_x += rho[i] * x[i];
  a_part = add<Rational>(a_part, rho_x * b);
  return add<Rational>(section * xy, center_inclusion * a_part);
}

CentralExtensionData canonical_extension(const LeibnizAlgebra &alg) {
  const std::size_t n = alg.dim();
  CentralExtensionData ext;
  ext.parent = alg;
  ext.center_basis = left_center(alg);
  const std::size_t q = ext.center_basis.size();
  const std::size_t p = n - q;

  // Complement: standard basis vectors at the non-pivot coordinates of the
  // center's echelon form.
  std::vector<bool> pivot(n, false);
  if (q > 0) {
    const ExactMatrix rows = ExactMatrix::from_columns(n, ext.center_basis).transpose();
    for (auto c : rref(rows).pivots)
      pivot[c] = true;
  }
  std::vector<std::string> g0_names;
  for (std::size_t j = 0; j < n; ++j)
    if (!pivot[j]) {
      ext.complement_basis.push_back(basis_vector(n, j));
      g0_names.push_back(alg.basis_names()[j]);
    }

  std::vector<ExactVector> columns = ext.complement_basis;
  columns.insert(columns.end(), ext.center_basis.begin(), ext.center_basis.end());
  const ExactMatrix change = ExactMatrix::from_columns(n, columns);
  const ExactMatrix change_inv = n ? inverse(change) : ExactMatrix();

  ext.section = ExactMatrix(n, p);
  ext.center_inclusion = ExactMatrix(n, q);
  ext.projection = ExactMatrix(p, n);
  ext.center_projection = ExactMatrix(q, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < p; ++j)
      ext.section(i, j) = change(i, j);
    for (std::size_t j = 0; j < q; ++j)
      ext.center_inclusion(i, j) = change(i, p + j);
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < p; ++i)
      ext.projection(i, j) = change_inv(i, j);
    for (std::size_t i = 0; i < q; ++i)
      ext.center_projection(i, j) = change_inv(p + i, j);
  }

  std::vector<Rational> g0_structure(p * p * p, Rational(0));
  ext.omega = Cochain(2, p, q);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      const ExactVector b = bracket(alg, ext.complement_basis[i], ext.complement_basis[j]);
      const ExactVector b0 = ext.projection * b;
      const ExactVector bz = ext.center_projection * b;
      for (std::size_t k = 0; k < p; ++k)
        g0_structure[(i * p + j) * p + k] = b0[k];
      const std::array<std::size_t, 2> idx{i, j};
      for (std::size_t c = 0; c < q; ++c)
        ext.omega.at(idx, c) = bz[c];
    }
  ext.g0 = LeibnizAlgebra(p, std::move(g0_structure), std::move(g0_names));

  for (std::size_t i = 0; i < p; ++i) {
    ExactMatrix ad = alg.left_multiplication(ext.complement_basis[i]);
    ext.rho.push_back(ext.center_projection * ad * ext.center_inclusion);
    ext.g0_realization.push_back(std::move(ad));
  }
  return ext;
}

std::vector<std::string> extension_invariant_failures(const CentralExtensionData &ext) {
  std::vector<std::string> failures;
  const std::size_t n = ext.parent.dim();
  const std::size_t p = ext.g0_dim();
  const std::size_t q = ext.center_dim();
  if (ext.section * ext.projection + ext.center_inclusion * ext.center_projection != ExactMatrix::identity(n))
    failures.emplace_back("section/projection do not split the identity");
  if (!is_lie(ext.g0))
    failures.emplace_back("g0 is not a Lie algebra");
  for (std::size_t j = 0; j < n; ++j)
    for (const auto &z : ext.center_basis)
      if (!is_zero<Rational>(bracket(ext.parent, z, basis_vector(n, j)))) {
        failures.emplace_back("center vector has nonzero left bracket");
        break;
      }
  for (std::size_t i = 0; i < p; ++i) {
    const ExactVector sx = ext.section.col(i);
    for (std::size_t j = 0; j < p; ++j) {
      const ExactVector b = bracket(ext.parent, sx, ext.section.col(j));
      const std::array<std::size_t, 2> idx{i, j};
      if (ext.omega.value(idx) != ext.center_projection * b)
        failures.emplace_back("omega differs from the bracket of lifts");
    }
    for (std::size_t c = 0; c < q; ++c) {
      const ExactVector b = bracket(ext.parent, sx, ext.center_inclusion.col(c));
      if (!is_zero<Rational>(ext.projection * b))
        failures.emplace_back("rho does not preserve the center");
      if (ext.rho[i].col(c) != ext.center_projection * b)
        failures.emplace_back("rho differs from the bracket with the center");
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const ExactVector ei = basis_vector(n, i);
      const ExactVector ej = basis_vector(n, j);
      if (ext.reassembled_bracket(ei, ej) != bracket(ext.parent, ei, ej)) {
        failures.emplace_back("reassembled bracket differs from the parent bracket");
        return failures;
      }
    }
  return failures;
}

} // namespace leibrack
