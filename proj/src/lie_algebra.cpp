#include "csp/lie_algebra.hpp"

#include <sstream>

#include "csp/error.hpp"

namespace csp {

LieAlgebra::LieAlgebra(int dim) : dim_(dim), c_(static_cast<size_t>(dim) * dim * dim) {
  if (dim < 1) throw Error(ErrorKind::Dimension, "Lie algebra dimension must be positive");
}

Rational& LieAlgebra::c_ref(int k, int i, int j) {
  return c_[((static_cast<size_t>(k) - 1) * dim_ + (i - 1)) * dim_ + (j - 1)];
}

const Rational& LieAlgebra::structure_constant(int k, int i, int j) const {
  return c_[((static_cast<size_t>(k) - 1) * dim_ + (i - 1)) * dim_ + (j - 1)];
}

LieAlgebra LieAlgebra::abelian(int dim) { return LieAlgebra(dim); }

LieAlgebra LieAlgebra::from_structure_equations(int dim, const std::map<int, KForm>& equations) {
  LieAlgebra L(dim);
  for (const auto& [k, rhs] : equations) {
    if (k < 1 || k > dim)
      throw Error(ErrorKind::Dimension, "structure equation for basis index out of range");
    if (rhs.dim() != dim)
      throw Error(ErrorKind::Dimension, "structure equation right-hand side dimension mismatch");
    if (rhs.degree() != 2)
      throw Error(ErrorKind::InvalidArgument, "structure equation right-hand side must have degree 2");
    for (const auto& [idx, coeff] : rhs.terms()) {
      const int i = idx[0], j = idx[1];
      L.c_ref(k, i, j) = -coeff;
      L.c_ref(k, j, i) = coeff;
    }
  }
  L.validate();
  return L;
}

LieAlgebra LieAlgebra::from_structure_constants(int dim, const std::vector<std::array<int, 3>>& where,
                                                const std::vector<Rational>& values) {
  LieAlgebra L = unchecked(dim, where, values);
  L.validate();
  return L;
}

LieAlgebra LieAlgebra::unchecked(int dim, const std::vector<std::array<int, 3>>& where,
                                 const std::vector<Rational>& values) {
  if (where.size() != values.size())
    throw Error(ErrorKind::InvalidArgument, "structure constant entry count mismatch");
  LieAlgebra L(dim);
  for (size_t t = 0; t < where.size(); ++t) {
    const auto [k, i, j] = where[t];
    if (k < 1 || k > dim || i < 1 || i > dim || j < 1 || j > dim || i == j)
      throw Error(ErrorKind::Dimension, "structure constant index out of range");
    L.c_ref(k, i, j) = values[t];
    L.c_ref(k, j, i) = -values[t];
  }
  return L;
}

void LieAlgebra::validate() const {
  const auto triple = jacobi_witness();
  const auto dd = d_squared_witness();
  if (triple.has_value() != dd.has_value())
    throw Error(ErrorKind::Internal, "Jacobi check and d^2 check disagree");
  if (triple) {
    std::ostringstream os;
    os << "Jacobi identity fails on the triple (" << (*triple)[0] << ", " << (*triple)[1] << ", "
       << (*triple)[2] << ")";
    Error e(ErrorKind::Jacobi, os.str());
    e.jacobi_triple = *triple;
    throw e;
  }
}

Vector LieAlgebra::bracket(const Vector& u, const Vector& v) const {
  if (u.dim() != dim_ || v.dim() != dim_)
    throw Error(ErrorKind::Dimension, "bracket dimension mismatch");
  Vector out(dim_);
  for (int i = 1; i <= dim_; ++i) {
    if (u[i].is_zero()) continue;
    for (int j = 1; j <= dim_; ++j) {
      if (i == j || v[j].is_zero()) continue;
      const Rational uv = u[i] * v[j];
      for (int k = 1; k <= dim_; ++k) {
        const Rational& c = structure_constant(k, i, j);
        if (!c.is_zero()) out[k] += c * uv;
      }
    }
  }
  return out;
}

KForm LieAlgebra::d_basis_covector(int k) const {
  KForm d(dim_, 2);
  for (int i = 1; i <= dim_; ++i)
    for (int j = i + 1; j <= dim_; ++j) {
      const Rational& c = structure_constant(k, i, j);
      if (!c.is_zero()) d.add_term({i, j}, -c);
    }
  return d;
}

KForm LieAlgebra::cee_d(const KForm& a) const {
  if (a.dim() != dim_) throw Error(ErrorKind::Dimension, "differential dimension mismatch");
  KForm out(dim_, a.degree() + 1);
  if (a.degree() == 0) return out; // left-invariant functions are constant
  for (const auto& [idx, coeff] : a.terms()) {
    // d(alpha^{i_1} ^ ... ^ alpha^{i_k}) expanded as an antiderivation.
    for (size_t slot = 0; slot < idx.size(); ++slot) {
      const KForm dslot = d_basis_covector(idx[slot]);
      if (dslot.is_zero()) continue;
      MultiIndex rest;
      for (size_t t = 0; t < idx.size(); ++t)
        if (t != slot) rest.push_back(idx[t]);
      Rational sign_coeff = slot % 2 == 0 ? coeff : -coeff;
      for (const auto& [didx, dcoeff] : dslot.terms()) {
        MultiIndex merged = didx;
        merged.insert(merged.end(), rest.begin(), rest.end());
        out.add_term(std::move(merged), sign_coeff * dcoeff);
      }
    }
  }
  return out;
}

KForm LieAlgebra::lie_derivative(const Vector& v, const KForm& a) const {
  KForm first = contract(v, cee_d(a));
  if (a.degree() == 0) return first; // i_v a vanishes, nothing to differentiate
  return first + cee_d(contract(v, a));
}

std::optional<std::array<int, 3>> LieAlgebra::jacobi_witness() const {
  for (int i = 1; i <= dim_; ++i)
    for (int j = i + 1; j <= dim_; ++j)
      for (int k = j + 1; k <= dim_; ++k) {
        const Vector xi = Vector::basis(dim_, i);
        const Vector xj = Vector::basis(dim_, j);
        const Vector xk = Vector::basis(dim_, k);
        const Vector sum = bracket(xi, bracket(xj, xk)) + bracket(xj, bracket(xk, xi)) +
                           bracket(xk, bracket(xi, xj));
        if (!sum.is_zero()) return std::array<int, 3>{i, j, k};
      }
  return std::nullopt;
}

std::optional<int> LieAlgebra::d_squared_witness() const {
  for (int k = 1; k <= dim_; ++k)
    if (!cee_d(d_basis_covector(k)).is_zero()) return k;
  return std::nullopt;
}

std::map<int, KForm> LieAlgebra::structure_equations() const {
  std::map<int, KForm> eqns;
  for (int k = 1; k <= dim_; ++k) {
    KForm d = d_basis_covector(k);
    if (!d.is_zero()) eqns.emplace(k, std::move(d));
  }
  return eqns;
}

} // namespace csp
