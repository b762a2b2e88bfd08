#include "lagext/cohomology.hpp"

#include "lagext/error.hpp"

namespace lagext {

OneCochain::OneCochain(RatMatrix s) : s_(std::move(s)) {
  if (s_.rows() != s_.cols()) throw Error("1-cochain matrix must be square");
}

Vector OneCochain::apply(const Vector& x) const { return s_.transpose() * x; }

void TwoCochain::set(std::size_t i, std::size_t j, std::size_t k, const Rational& v) {
  if (i == j) {
    if (!v.is_zero()) throw Error("2-cochain must vanish on (e_i, e_i)");
    return;
  }
  a_[(i * n_ + j) * n_ + k] = v;
  a_[(j * n_ + i) * n_ + k] = -v;
}

Vector TwoCochain::value(std::size_t i, std::size_t j) const {
  const auto first = a_.begin() + static_cast<std::ptrdiff_t>((i * n_ + j) * n_);
  return Vector(first, first + static_cast<std::ptrdiff_t>(n_));
}

Vector TwoCochain::apply(const Vector& x, const Vector& y) const {
  Vector r(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j)
      if (!y[j].is_zero()) axpy(r, x[i] * y[j], value(i, j));
  }
  return r;
}

Vector TwoCochain::flatten() const {
  Vector v;
  v.reserve(n_ * pair_count(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k) v.push_back((*this)(i, j, k));
  return v;
}

TwoCochain TwoCochain::unflatten(std::size_t n, const Vector& v) {
  if (v.size() != n * pair_count(n)) throw Error("flattened 2-cochain has the wrong length");
  TwoCochain a(n);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) a.set(i, j, k, v[idx++]);
  return a;
}

TwoCochain operator+(const TwoCochain& a, const TwoCochain& b) {
  TwoCochain r = a;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
  return r;
}

TwoCochain operator-(const TwoCochain& a, const TwoCochain& b) {
  TwoCochain r = a;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
  return r;
}

TwoCochain operator*(const Rational& s, const TwoCochain& a) {
  TwoCochain r = a;
  for (auto& x : r.a_) x *= s;
  return r;
}

bool ThreeCochain::is_zero() const {
  for (const auto& v : values)
    if (!lagext::is_zero(v)) return false;
  return true;
}

std::size_t pair_count(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

std::size_t triple_count(std::size_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
  // pairs (0,1..n-1), (1,2..n-1), ...
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

// ---------------------------------------------------------------------------

TwoCochain coboundary_1(const DualRep& r, const OneCochain& sigma) {
  const std::size_t n = r.dim();
  if (sigma.dim() != n) throw Error("1-cochain dimension mismatch");
  TwoCochain out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector si = sigma.apply(unit_vector(n, i));
      const Vector sj = sigma.apply(unit_vector(n, j));
      const Vector v = r.rho[i] * sj - r.rho[j] * si - sigma.apply(r.base.bracket_basis(i, j));
      for (std::size_t k = 0; k < n; ++k) out.set(i, j, k, v[k]);
    }
  return out;
}

ThreeCochain coboundary_2(const DualRep& r, const TwoCochain& alpha) {
  const std::size_t n = r.dim();
  if (alpha.dim() != n) throw Error("2-cochain dimension mismatch");
  const LieAlgebra& g = r.base;
  const auto e = [n](std::size_t i) { return unit_vector(n, i); };
  ThreeCochain out{n, {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector v = r.rho[i] * alpha.value(j, k);
        v = v + r.rho[j] * alpha.value(k, i);
        v = v + r.rho[k] * alpha.value(i, j);
        v = v + alpha.apply(e(i), g.bracket_basis(j, k));
        v = v + alpha.apply(e(k), g.bracket_basis(i, j));
        v = v + alpha.apply(e(j), g.bracket_basis(k, i));
        out.values.push_back(std::move(v));
      }
  return out;
}

std::vector<Rational> cyclic_sums(const TwoCochain& a) {
  const std::size_t n = a.dim();
  std::vector<Rational> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) out.push_back(a(i, j, k) + a(j, k, i) + a(k, i, j));
  return out;
}

RatMatrix coboundary_1_matrix(const DualRep& r) {
  const std::size_t n = r.dim();
  RatMatrix m(n * pair_count(n), n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      OneCochain s(n);
      s(i, k) = 1;
      const Vector col = coboundary_1(r, s).flatten();
      for (std::size_t row = 0; row < col.size(); ++row) m(row, i * n + k) = col[row];
    }
  return m;
}

RatMatrix coboundary_2_matrix(const DualRep& r) {
  const std::size_t n = r.dim();
  const std::size_t cols = n * pair_count(n);
  RatMatrix m(n * triple_count(n), cols);
  for (std::size_t c = 0; c < cols; ++c) {
    const ThreeCochain d = coboundary_2(r, TwoCochain::unflatten(n, unit_vector(cols, c)));
    for (std::size_t t = 0; t < d.values.size(); ++t)
      for (std::size_t k = 0; k < n; ++k) m(t * n + k, c) = d.values[t][k];
  }
  return m;
}

RatMatrix cyclic_sum_matrix(std::size_t n) {
  const std::size_t cols = n * pair_count(n);
  RatMatrix m(triple_count(n), cols);
  for (std::size_t c = 0; c < cols; ++c) {
    const auto sums = cyclic_sums(TwoCochain::unflatten(n, unit_vector(cols, c)));
    for (std::size_t t = 0; t < sums.size(); ++t) m(t, c) = sums[t];
  }
  return m;
}

std::vector<OneCochain> lagrangian_one_cochain_basis(std::size_t n) {
  std::vector<OneCochain> basis;
  for (std::size_t i = 0; i < n; ++i) {
    OneCochain s(n);
    s(i, i) = 1;
    basis.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k) {
      OneCochain s(n);
      s(i, k) = 1;
      s(k, i) = 1;
      basis.push_back(std::move(s));
    }
  return basis;
}

namespace {

RatMatrix lagrangian_coboundary_matrix(const DualRep& r) {
  const std::size_t n = r.dim();
  std::vector<Vector> cols;
  for (const auto& s : lagrangian_one_cochain_basis(n)) cols.push_back(coboundary_1(r, s).flatten());
  return RatMatrix::from_columns(cols, n * pair_count(n));
}

RatMatrix stack(const RatMatrix& top, const RatMatrix& bottom) {
  RatMatrix m(top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r)
    for (std::size_t c = 0; c < top.cols(); ++c) m(r, c) = top(r, c);
  for (std::size_t r = 0; r < bottom.rows(); ++r)
    for (std::size_t c = 0; c < top.cols(); ++c) m(top.rows() + r, c) = bottom(r, c);
  return m;
}

std::vector<TwoCochain> as_cochains(std::size_t n, const std::vector<Vector>& vs) {
  std::vector<TwoCochain> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(TwoCochain::unflatten(n, v));
  return out;
}

} // namespace

CocycleBases cocycle_bases(const DualRep& r) {
  const RatMatrix d2 = coboundary_2_matrix(r);
  return {kernel_basis(d2), kernel_basis(stack(d2, cyclic_sum_matrix(r.dim())))};
}

CohomologySummary cohomology(const DualRep& r) {
  const std::size_t n = r.dim();
  const CocycleBases z = cocycle_bases(r);
  const Subspace b2 = image(coboundary_1_matrix(r));
  const Subspace b2l = image(lagrangian_coboundary_matrix(r));
  if (!z.z2.contains(b2) || !z.z2l.contains(b2l))
    throw IntegrityError("coboundaries are not cocycles; ∂∘∂ != 0");

  CohomologySummary s;
  s.c1_dim = n * n;
  s.c1l_dim = n * (n + 1) / 2;
  s.z2_dim = z.z2.dim();
  s.z2l_dim = z.z2l.dim();
  s.b2_dim = b2.dim();
  s.b2l_dim = b2l.dim();
  s.h2_dim = s.z2_dim - s.b2_dim;
  s.h2l_dim = s.z2l_dim - s.b2l_dim;
  s.lagrangian_to_ordinary_rank = (z.z2l + b2).dim() - b2.dim();
  s.h2_representatives = as_cochains(n, quotient_basis(z.z2, b2));
  s.h2l_representatives = as_cochains(n, quotient_basis(z.z2l, b2l));
  return s;
}

std::optional<OneCochain> solve_coboundary(const DualRep& r, const TwoCochain& alpha,
                                           const TwoCochain& beta, bool lagrangian_only) {
  const std::size_t n = r.dim();
  const Vector rhs = (alpha - beta).flatten();
  if (!lagrangian_only) {
    const auto x = solve_linear(coboundary_1_matrix(r), rhs);
    if (!x) return std::nullopt;
    OneCochain s(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) s(i, k) = (*x)[i * n + k];
    return s;
  }
  const auto basis = lagrangian_one_cochain_basis(n);
  const auto y = solve_linear(lagrangian_coboundary_matrix(r), rhs);
  if (!y) return std::nullopt;
  RatMatrix s(n, n);
  for (std::size_t b = 0; b < basis.size(); ++b)
    if (!(*y)[b].is_zero()) s = s + (*y)[b] * basis[b].matrix();
  return OneCochain(std::move(s));
}

} // namespace lagext
