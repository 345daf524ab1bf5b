#include "csp/linalg.hpp"

#include "csp/error.hpp"

namespace csp {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Mat Mat::diagonal(const std::vector<Rational>& d) {
  Mat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (int i = 0; i < m.rows(); ++i) m.at(i, i) = d[i];
  return m;
}

Mat Mat::transposed() const {
  Mat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw Error(ErrorKind::InvalidArgument, "matrix product shape mismatch");
  Mat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error(ErrorKind::InvalidArgument, "matrix sum shape mismatch");
  Mat r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error(ErrorKind::InvalidArgument, "matrix difference shape mismatch");
  Mat r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

Mat Mat::scaled(const Rational& c) const {
  Mat r = *this;
  for (auto& x : r.a_) x *= c;
  return r;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Mat::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

std::vector<int> Mat::rref() {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int p = -1;
    for (int r = row; r < rows_; ++r) {
      if (!at(r, col).is_zero()) {
        p = r;
        break;
      }
    }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < cols_; ++j) std::swap(at(p, j), at(row, j));
    const Rational inv = Rational(1) / at(row, col);
    for (int j = col; j < cols_; ++j) at(row, j) *= inv;
    for (int r = 0; r < rows_; ++r) {
      if (r == row || at(r, col).is_zero()) continue;
      const Rational f = at(r, col);
      for (int j = col; j < cols_; ++j) at(r, j) -= f * at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int Mat::rank() const {
  Mat m = *this;
  return static_cast<int>(m.rref().size());
}

Rational Mat::det() const {
  if (rows_ != cols_) throw Error(ErrorKind::InvalidArgument, "determinant of non-square matrix");
  Mat m = *this;
  Rational d(1);
  for (int col = 0; col < cols_; ++col) {
    int p = -1;
    for (int r = col; r < rows_; ++r) {
      if (!m.at(r, col).is_zero()) {
        p = r;
        break;
      }
    }
    if (p < 0) return Rational(0);
    if (p != col) {
      for (int j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(col, j));
      d = -d;
    }
    d *= m.at(col, col);
    const Rational inv = Rational(1) / m.at(col, col);
    for (int r = col + 1; r < rows_; ++r) {
      if (m.at(r, col).is_zero()) continue;
      const Rational f = m.at(r, col) * inv;
      for (int j = col; j < cols_; ++j) m.at(r, j) -= f * m.at(col, j);
    }
  }
  return d;
}

Mat Mat::kernel() const {
  Mat m = *this;
  const std::vector<int> pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  const int nullity = cols_ - static_cast<int>(pivots.size());
  Mat k(cols_, nullity);
  int out = 0;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    k.at(free, out) = Rational(1);
    for (size_t r = 0; r < pivots.size(); ++r) k.at(pivots[r], out) = -m.at(static_cast<int>(r), free);
    ++out;
  }
  return k;
}

std::optional<Mat> Mat::inverse() const {
  if (rows_ != cols_) throw Error(ErrorKind::InvalidArgument, "inverse of non-square matrix");
  Mat aug(rows_, 2 * cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = Rational(1);
  }
  const auto pivots = aug.rref();
  if (static_cast<int>(pivots.size()) != rows_ || pivots.back() >= cols_) return std::nullopt;
  Mat inv(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
  return inv;
}

std::vector<Rational> Mat::leading_principal_minors() const {
  if (rows_ != cols_) throw Error(ErrorKind::InvalidArgument, "principal minors of non-square matrix");
  std::vector<Rational> minors;
  minors.reserve(rows_);
  for (int k = 1; k <= rows_; ++k) {
    Mat sub(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub.at(i, j) = at(i, j);
    minors.push_back(sub.det());
  }
  return minors;
}

std::optional<Mat::Solution> Mat::solve(const std::vector<Rational>& b) const {
  if (static_cast<int>(b.size()) != rows_)
    throw Error(ErrorKind::InvalidArgument, "solve: rhs length mismatch");
  Mat aug(rows_, cols_ + 1);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  const auto pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt; // row (0 ... 0 | 1)
  Solution s;
  s.x.assign(cols_, Rational(0));
  for (size_t r = 0; r < pivots.size(); ++r) s.x[pivots[r]] = aug.at(static_cast<int>(r), cols_);
  s.unique = static_cast<int>(pivots.size()) == cols_;
  return s;
}

Subspace Subspace::span(int ambient_dim, const std::vector<std::vector<Rational>>& vectors) {
  Mat m(static_cast<int>(vectors.size()), ambient_dim);
  for (size_t i = 0; i < vectors.size(); ++i) {
    if (static_cast<int>(vectors[i].size()) != ambient_dim)
      throw Error(ErrorKind::InvalidArgument, "span: vector length mismatch");
    for (int j = 0; j < ambient_dim; ++j) m.at(static_cast<int>(i), j) = vectors[i][j];
  }
  const auto pivots = m.rref();
  Subspace s;
  s.ambient_ = ambient_dim;
  for (size_t r = 0; r < pivots.size(); ++r) {
    std::vector<Rational> row(ambient_dim);
    for (int j = 0; j < ambient_dim; ++j) row[j] = m.at(static_cast<int>(r), j);
    s.basis_.push_back(std::move(row));
  }
  return s;
}

Subspace Subspace::kernel_of(const Mat& constraints) {
  const Mat k = constraints.kernel();
  std::vector<std::vector<Rational>> vecs;
  for (int c = 0; c < k.cols(); ++c) {
    std::vector<Rational> v(k.rows());
    for (int r = 0; r < k.rows(); ++r) v[r] = k.at(r, c);
    vecs.push_back(std::move(v));
  }
  return span(constraints.cols(), vecs);
}

Subspace Subspace::full(int ambient_dim) {
  std::vector<std::vector<Rational>> vecs(ambient_dim, std::vector<Rational>(ambient_dim));
  for (int i = 0; i < ambient_dim; ++i) vecs[i][i] = Rational(1);
  return span(ambient_dim, vecs);
}

bool Subspace::contains(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != ambient_) return false;
  std::vector<Rational> r = v;
  for (const auto& row : basis_) {
    int pivot = -1;
    for (int j = 0; j < ambient_; ++j) {
      if (!row[j].is_zero()) {
        pivot = j;
        break;
      }
    }
    if (pivot < 0 || r[pivot].is_zero()) continue;
    const Rational f = r[pivot]; // pivot entry of the RREF row is 1
    for (int j = 0; j < ambient_; ++j) r[j] -= f * row[j];
  }
  for (const auto& x : r)
    if (!x.is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw Error(ErrorKind::InvalidArgument, "subspace sum: ambient mismatch");
  std::vector<std::vector<Rational>> vecs = basis_;
  vecs.insert(vecs.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_, vecs);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_ != other.ambient_)
    throw Error(ErrorKind::InvalidArgument, "subspace intersection: ambient mismatch");
  // x in U cap W  <=>  x = U^T a = W^T b; kernel of [U^T | -W^T] gives (a, b).
  const int du = dim();
  const int dw = other.dim();
  Mat m(ambient_, du + dw);
  for (int j = 0; j < du; ++j)
    for (int i = 0; i < ambient_; ++i) m.at(i, j) = basis_[j][i];
  for (int j = 0; j < dw; ++j)
    for (int i = 0; i < ambient_; ++i) m.at(i, du + j) = -other.basis_[j][i];
  const Mat k = m.kernel();
  std::vector<std::vector<Rational>> vecs;
  for (int c = 0; c < k.cols(); ++c) {
    std::vector<Rational> x(ambient_, Rational(0));
    for (int j = 0; j < du; ++j)
      for (int i = 0; i < ambient_; ++i) x[i] += k.at(j, c) * basis_[j][i];
    vecs.push_back(std::move(x));
  }
  return span(ambient_, vecs);
}

} // namespace csp
