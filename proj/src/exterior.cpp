#include "csp/exterior.hpp"

#include <algorithm>
#include <sstream>

#include "csp/error.hpp"
#include "csp/linalg.hpp"

namespace csp {

namespace {

// Sorts idx ascending, returning the permutation sign, or 0 on a repeat.
int sort_with_sign(MultiIndex& idx) {
  int sign = 1;
  for (size_t i = 1; i < idx.size(); ++i) {
    size_t j = i;
    while (j > 0 && idx[j - 1] > idx[j]) {
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
      --j;
    }
  }
  for (size_t i = 1; i < idx.size(); ++i)
    if (idx[i - 1] == idx[i]) return 0;
  return sign;
}

// Merge sign of two disjoint increasing index tuples: the parity of the
// permutation sorting their concatenation.
int merge_sign(const MultiIndex& a, const MultiIndex& b) {
  int inversions = 0;
  for (int x : a)
    for (int y : b)
      if (x > y) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

bool disjoint(const MultiIndex& a, const MultiIndex& b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j]) ++i;
    else ++j;
  }
  return true;
}

} // namespace

Vector::Vector(int dim, std::vector<Rational> coords) : coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != dim)
    throw Error(ErrorKind::Dimension, "vector coordinate count does not match dimension");
}

Vector Vector::basis(int dim, int i) {
  Vector v(dim);
  v[i] = Rational(1);
  return v;
}

bool Vector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c.is_zero(); });
}

Vector Vector::operator+(const Vector& o) const {
  if (dim() != o.dim()) throw Error(ErrorKind::Dimension, "vector sum dimension mismatch");
  Vector r = *this;
  for (int i = 0; i < dim(); ++i) r.coords_[i] += o.coords_[i];
  return r;
}

Vector Vector::operator-(const Vector& o) const {
  if (dim() != o.dim()) throw Error(ErrorKind::Dimension, "vector difference dimension mismatch");
  Vector r = *this;
  for (int i = 0; i < dim(); ++i) r.coords_[i] -= o.coords_[i];
  return r;
}

Vector Vector::scaled(const Rational& c) const {
  Vector r = *this;
  for (auto& x : r.coords_) x *= c;
  return r;
}

std::string Vector::str() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < dim(); ++i) os << (i ? ", " : "") << coords_[i];
  os << ")";
  return os.str();
}

KForm::KForm(int dim, int degree) : dim_(dim), degree_(degree) {
  if (dim < 0 || degree < 0)
    throw Error(ErrorKind::InvalidArgument, "negative form dimension or degree");
}

KForm KForm::constant(int dim, const Rational& c) {
  KForm f(dim, 0);
  f.add_term({}, c);
  return f;
}

KForm KForm::basis_covector(int dim, int i) {
  KForm f(dim, 1);
  f.add_term({i}, Rational(1));
  return f;
}

Rational KForm::coefficient(const MultiIndex& idx) const {
  const auto it = coeffs_.find(idx);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void KForm::add_term(MultiIndex idx, Rational c) {
  if (static_cast<int>(idx.size()) != degree_)
    throw Error(ErrorKind::InvalidArgument, "multi-index length does not match form degree");
  for (int i : idx)
    if (i < 1 || i > dim_) throw Error(ErrorKind::Dimension, "frame index out of range");
  const int sign = sort_with_sign(idx);
  if (sign == 0 || c.is_zero()) return;
  if (sign < 0) c = -c;
  auto [it, inserted] = coeffs_.try_emplace(std::move(idx), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

KForm KForm::operator-() const {
  KForm r = *this;
  for (auto& [idx, c] : r.coeffs_) c = -c;
  return r;
}

KForm KForm::operator+(const KForm& o) const {
  if (dim_ != o.dim_) throw Error(ErrorKind::Dimension, "form sum dimension mismatch");
  if (degree_ != o.degree_) throw Error(ErrorKind::InvalidArgument, "form sum degree mismatch");
  KForm r = *this;
  for (const auto& [idx, c] : o.coeffs_) r.add_term(idx, c);
  return r;
}

KForm KForm::operator-(const KForm& o) const { return *this + (-o); }

KForm KForm::scaled(const Rational& c) const {
  KForm r(dim_, degree_);
  if (c.is_zero()) return r;
  r.coeffs_ = coeffs_;
  for (auto& [idx, v] : r.coeffs_) v *= c;
  return r;
}

std::string KForm::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : coeffs_) {
    const Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    const bool unit = a == Rational(1) && !idx.empty();
    if (!unit) os << a.str();
    if (!idx.empty()) {
      if (!unit) os << "*";
      for (size_t i = 0; i < idx.size(); ++i) os << (i ? "^" : "") << "a" << idx[i];
    }
  }
  return os.str();
}

KForm wedge(const KForm& a, const KForm& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::Dimension, "wedge dimension mismatch");
  KForm r(a.dim(), a.degree() + b.degree());
  if (r.degree() > a.dim()) return r;
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      if (!disjoint(ia, ib)) continue;
      MultiIndex merged;
      merged.reserve(ia.size() + ib.size());
      std::merge(ia.begin(), ia.end(), ib.begin(), ib.end(), std::back_inserter(merged));
      const int s = merge_sign(ia, ib);
      r.add_term(std::move(merged), s < 0 ? -(ca * cb) : ca * cb);
    }
  }
  return r;
}

KForm power(const KForm& a, unsigned p) {
  KForm r = KForm::constant(a.dim(), Rational(1));
  for (unsigned i = 0; i < p; ++i) r = wedge(r, a);
  return r;
}

KForm linear_combine(std::span<const std::pair<Rational, KForm>> terms) {
  if (terms.empty()) throw Error(ErrorKind::InvalidArgument, "linear_combine of no terms");
  KForm r(terms[0].second.dim(), terms[0].second.degree());
  for (const auto& [c, f] : terms) {
    if (f.dim() != r.dim()) throw Error(ErrorKind::Dimension, "linear_combine dimension mismatch");
    if (f.degree() != r.degree())
      throw Error(ErrorKind::InvalidArgument, "linear_combine degree mismatch");
    for (const auto& [idx, v] : f.terms()) r.add_term(idx, c * v);
  }
  return r;
}

KForm contract(const Vector& v, const KForm& a) {
  if (v.dim() != a.dim()) throw Error(ErrorKind::Dimension, "contraction dimension mismatch");
  if (a.degree() == 0) return KForm::zero(a.dim(), 0);
  KForm r(a.dim(), a.degree() - 1);
  for (const auto& [idx, c] : a.terms()) {
    for (size_t slot = 0; slot < idx.size(); ++slot) {
      const Rational vi = v[idx[slot]];
      if (vi.is_zero()) continue;
      MultiIndex rest;
      rest.reserve(idx.size() - 1);
      for (size_t t = 0; t < idx.size(); ++t)
        if (t != slot) rest.push_back(idx[t]);
      Rational term = c * vi;
      if (slot % 2 == 1) term = -term;
      r.add_term(std::move(rest), std::move(term));
    }
  }
  return r;
}

Rational factorial(unsigned n) {
  Rational r(1);
  for (unsigned i = 2; i <= n; ++i) r *= Rational(static_cast<long>(i));
  return r;
}

Rational eval(const KForm& a, std::span<const Vector> vectors, EvalConvention convention) {
  const int k = a.degree();
  if (static_cast<int>(vectors.size()) != k)
    throw Error(ErrorKind::InvalidArgument, "eval arity does not match form degree");
  for (const Vector& v : vectors)
    if (v.dim() != a.dim()) throw Error(ErrorKind::Dimension, "eval dimension mismatch");
  Rational total(0);
  for (const auto& [idx, c] : a.terms()) {
    Mat m(k, k);
    for (int r = 0; r < k; ++r)
      for (int s = 0; s < k; ++s) m.at(r, s) = vectors[s][idx[r]];
    total += c * m.det();
  }
  if (convention == EvalConvention::Alt && k > 1) total /= factorial(static_cast<unsigned>(k));
  return total;
}

} // namespace csp
