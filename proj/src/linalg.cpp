#include "lagext/linalg.hpp"

#include <algorithm>
#include <utility>

#include "lagext/error.hpp"

namespace lagext {

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

Vector operator+(const Vector& a, const Vector& b) {
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector operator*(const Rational& s, const Vector& v) {
  Vector r = v;
  for (auto& x : r) x *= s;
  return r;
}

void axpy(Vector& v, const Rational& s, std::span<const Rational> w) {
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!w[i].is_zero()) v[i] += s * w[i];
}

// ---------------------------------------------------------------------------
// RatMatrix

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error("row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
  }
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  RatMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw Error("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector RatMatrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RatMatrix::is_zero() const { return lagext::is_zero(data_); }

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw Error("matrix product shape mismatch");
  RatMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) p(i, j) += aik * b(k, j);
    }
  return p;
}

Vector operator*(const RatMatrix& a, std::span<const Rational> v) {
  if (a.cols_ != v.size()) throw Error("matrix-vector shape mismatch");
  Vector r(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (!v[k].is_zero() && !a(i, k).is_zero()) r[i] += a(i, k) * v[k];
  return r;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix sum shape mismatch");
  RatMatrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] += b.data_[i];
  return s;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix difference shape mismatch");
  RatMatrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] -= b.data_[i];
  return s;
}

RatMatrix operator*(const Rational& s, const RatMatrix& a) {
  RatMatrix r = a;
  for (auto& x : r.data_) x *= s;
  return r;
}

// ---------------------------------------------------------------------------
// Row reduction

Echelon row_reduce(RatMatrix m) {
  Echelon e;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < rows; ++c) {
    std::size_t p = next;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != next)
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(p, k), m(next, k));
    const Rational inv = Rational(1) / m(next, c);
    for (std::size_t k = c; k < cols; ++k)
      if (!m(next, k).is_zero()) m(next, k) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == next || m(r, c).is_zero()) continue;
      const Rational f = m(r, c);
      for (std::size_t k = c; k < cols; ++k)
        if (!m(next, k).is_zero()) m(r, k) -= f * m(next, k);
    }
    e.pivots.push_back(c);
    ++next;
  }
  e.reduced = std::move(m);
  return e;
}

std::size_t rank(const RatMatrix& m) { return row_reduce(m).rank(); }

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(std::size_t ambient_dim, const std::vector<Vector>& spanning)
    : ambient_(ambient_dim) {
  if (spanning.empty()) return;
  const Echelon e = row_reduce(RatMatrix::from_rows(spanning, ambient_dim));
  pivots_ = e.pivots;
  basis_.reserve(e.rank());
  for (std::size_t r = 0; r < e.rank(); ++r) {
    const auto row = e.reduced.row(r);
    basis_.emplace_back(row.begin(), row.end());
  }
}

Subspace Subspace::whole(std::size_t n) {
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  return coordinate(n, all);
}

Subspace Subspace::coordinate(std::size_t n, std::initializer_list<std::size_t> indices) {
  return coordinate(n, std::vector<std::size_t>(indices));
}

Subspace Subspace::coordinate(std::size_t n, const std::vector<std::size_t>& indices) {
  std::vector<Vector> vs;
  for (std::size_t i : indices) {
    if (i >= n) throw Error("coordinate index out of range");
    vs.push_back(unit_vector(n, i));
  }
  return Subspace(n, vs);
}

Vector Subspace::reduce(Vector v) const {
  if (v.size() != ambient_) throw Error("vector length does not match ambient dimension");
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const Rational f = v[pivots_[r]];
    if (!f.is_zero()) axpy(v, -f, basis_[r]);
  }
  return v;
}

bool Subspace::contains(const Vector& v) const { return lagext::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const Vector& v) { return contains(v); });
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw PreconditionError("vector does not lie in the subspace");
  Vector c(basis_.size());
  for (std::size_t r = 0; r < basis_.size(); ++r) c[r] = v[pivots_[r]];
  return c;
}

std::vector<std::size_t> Subspace::non_pivots() const {
  std::vector<std::size_t> out;
  std::size_t p = 0;
  for (std::size_t i = 0; i < ambient_; ++i) {
    if (p < pivots_.size() && pivots_[p] == i) {
      ++p;
      continue;
    }
    out.push_back(i);
  }
  return out;
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error("subspace ambient mismatch");
  std::vector<Vector> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace(a.ambient_dim(), all);
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error("subspace ambient mismatch");
  const std::size_t n = a.ambient_dim();
  // x in a ∩ b  <=>  x = A s = B t; solve [A | -B] (s,t) = 0.
  std::vector<Vector> cols = a.basis();
  for (const auto& v : b.basis()) cols.push_back(Rational(-1) * v);
  const Subspace k = kernel_basis(RatMatrix::from_columns(cols, n));
  std::vector<Vector> vs;
  for (const auto& st : k.basis()) {
    Vector x = zero_vector(n);
    for (std::size_t i = 0; i < a.dim(); ++i) axpy(x, st[i], a.basis()[i]);
    vs.push_back(std::move(x));
  }
  return Subspace(n, vs);
}

// ---------------------------------------------------------------------------
// Kernels, images, solving

Subspace kernel_basis(const RatMatrix& m) {
  const std::size_t cols = m.cols();
  const Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<Vector> vs;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v = unit_vector(cols, f);
    for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    vs.push_back(std::move(v));
  }
  return Subspace(cols, vs);
}

Subspace image(const RatMatrix& m) {
  std::vector<Vector> cols;
  cols.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return Subspace(m.rows(), cols);
}

std::optional<Vector> solve_linear(const RatMatrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) throw Error("right-hand side length mismatch");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const Echelon e = row_reduce(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t r = 0; r < e.rank(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

std::vector<Vector> quotient_basis(const Subspace& w, const Subspace& v) {
  if (!w.contains(v)) throw PreconditionError("quotient_basis: V is not contained in W");
  std::vector<Vector> reduced;
  reduced.reserve(w.dim());
  for (const auto& b : w.basis()) {
    Vector r = v.reduce(b);
    if (!is_zero(r)) reduced.push_back(std::move(r));
  }
  return Subspace(w.ambient_dim(), reduced).basis();
}

RatMatrix inverse(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw PreconditionError("inverse of a non-square matrix");
  if (n == 0) return {};
  RatMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const Echelon e = row_reduce(std::move(aug));
  if (e.rank() < n || e.pivots[n - 1] != n - 1) throw PreconditionError("matrix is singular");
  RatMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

bool is_nilpotent(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw Error("nilpotency test on a non-square matrix");
  if (m.rows() == 0) return true;
  RatMatrix p = m;
  for (std::size_t k = 1; k < m.rows(); ++k) {
    if (p.is_zero()) return true;
    p = p * m;
  }
  return p.is_zero();
}

Rational trace(const RatMatrix& m) {
  Rational t;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

} // namespace lagext
