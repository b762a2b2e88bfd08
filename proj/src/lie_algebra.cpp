#include "lagext/lie_algebra.hpp"

#include <sstream>
#include <utility>

#include "lagext/error.hpp"

namespace lagext {

LieAlgebra::LieAlgebra(std::string name, std::size_t dim)
    : name_(std::move(name)), dim_(dim), c_(dim * dim * dim) {}

LieAlgebra::LieAlgebra(std::string name, std::size_t dim, std::vector<Rational> constants)
    : name_(std::move(name)), dim_(dim), c_(std::move(constants)) {
  if (c_.size() != dim * dim * dim) throw Error("structure tensor has the wrong size");
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k)
        if (c(i, j, k) != -c(j, i, k))
          throw Error("bracket of '" + name_ + "' is not antisymmetric at (e" +
                      std::to_string(i + 1) + ", e" + std::to_string(j + 1) + ")");
}

LieAlgebra LieAlgebra::from_brackets(std::string name, std::size_t dim,
                                     const std::vector<BracketTerm>& terms) {
  std::vector<Rational> c(dim * dim * dim);
  for (const auto& t : terms) {
    if (t.i >= dim || t.j >= dim || t.k >= dim) throw Error("bracket index out of range");
    c[(t.i * dim + t.j) * dim + t.k] += t.coeff;
    c[(t.j * dim + t.i) * dim + t.k] -= t.coeff;
  }
  return LieAlgebra(std::move(name), dim, std::move(c));
}

Vector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  const auto first = c_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j) * dim_);
  return Vector(first, first + static_cast<std::ptrdiff_t>(dim_));
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  Vector r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      const Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (!c(i, j, k).is_zero()) r[k] += xy * c(i, j, k);
    }
  }
  return r;
}

RatMatrix LieAlgebra::ad(const Vector& x) const {
  RatMatrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    const Vector col = bracket(x, unit_vector(dim_, j));
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = col[k];
  }
  return m;
}

bool LieAlgebra::is_abelian() const { return lagext::is_zero(c_); }

LieAlgebra LieAlgebra::renamed(std::string name) const {
  LieAlgebra copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

// ---------------------------------------------------------------------------

LieAlgebra abelian_algebra(std::size_t dim, std::string name) {
  if (name.empty()) name = "R" + std::to_string(dim);
  return LieAlgebra(std::move(name), dim);
}

LieAlgebra base_algebra_a() { return abelian_algebra(4, "a"); }

LieAlgebra base_algebra_l() { return LieAlgebra::from_brackets("l", 4, {{0, 1, 1, 2}}); }

LieAlgebra base_algebra_t() {
  return LieAlgebra::from_brackets("t", 4, {{0, 3, -1, 1}, {1, 3, -1, 2}});
}

LieAlgebra base_algebra(char tag) {
  switch (tag) {
  case 'a': return base_algebra_a();
  case 'l': return base_algebra_l();
  case 't': return base_algebra_t();
  default: throw Error(std::string("unknown base algebra '") + tag + "'");
  }
}

// ---------------------------------------------------------------------------

std::vector<JacobiViolation> check_jacobi(const LieAlgebra& l) {
  std::vector<JacobiViolation> out;
  const std::size_t n = l.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vector ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
        Vector r = l.bracket(ei, l.bracket_basis(j, k));
        r = r + l.bracket(ej, l.bracket_basis(k, i));
        r = r + l.bracket(ek, l.bracket_basis(i, j));
        if (!is_zero(r)) out.push_back({i, j, k, std::move(r)});
      }
  return out;
}

Subspace bracket_span(const LieAlgebra& l, const Subspace& a, const Subspace& b) {
  std::vector<Vector> vs;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) {
      Vector z = l.bracket(x, y);
      if (!is_zero(z)) vs.push_back(std::move(z));
    }
  return Subspace(l.dim(), vs);
}

bool is_ideal(const LieAlgebra& l, const Subspace& s) {
  return s.contains(bracket_span(l, Subspace::whole(l.dim()), s));
}

bool is_subalgebra(const LieAlgebra& l, const Subspace& s) {
  return s.contains(bracket_span(l, s, s));
}

std::vector<Subspace> lower_central_series(const LieAlgebra& l) {
  const Subspace g = Subspace::whole(l.dim());
  std::vector<Subspace> series{g};
  while (true) {
    Subspace next = bracket_span(l, g, series.back());
    if (next.dim() == series.back().dim()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<Subspace> derived_series(const LieAlgebra& l) {
  std::vector<Subspace> series{Subspace::whole(l.dim())};
  while (true) {
    Subspace next = bracket_span(l, series.back(), series.back());
    if (next.dim() == series.back().dim()) break;
    series.push_back(std::move(next));
  }
  return series;
}

Subspace center(const LieAlgebra& l) {
  // x central  <=>  sum_i x_i c^k_{ij} = 0 for all j, k.
  const std::size_t n = l.dim();
  RatMatrix m(n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) m(j * n + k, i) = l.c(i, j, k);
  return kernel_basis(m);
}

Subspace derivations(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  const auto var = [n](std::size_t r, std::size_t c) { return r * n + c; };
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m) {
        Vector row(n * n);
        for (std::size_t k = 0; k < n; ++k) {
          row[var(m, k)] += l.c(i, j, k);  // D[e_i,e_j]
          row[var(k, i)] -= l.c(k, j, m);  // [D e_i, e_j]
          row[var(k, j)] -= l.c(i, k, m);  // [e_i, D e_j]
        }
        rows.push_back(std::move(row));
      }
  return kernel_basis(RatMatrix::from_rows(rows, n * n));
}

bool is_nilpotent(const LieAlgebra& l) { return lower_central_series(l).back().dim() == 0; }

std::optional<std::size_t> nilpotency_class(const LieAlgebra& l) {
  const auto lcs = lower_central_series(l);
  if (lcs.back().dim() != 0) return std::nullopt;
  return lcs.size() - 1;
}

Fingerprint fingerprint(const LieAlgebra& l) {
  Fingerprint f;
  f.dim = l.dim();
  const auto lcs = lower_central_series(l);
  for (const auto& s : lcs) f.lcs_dims.push_back(s.dim());
  for (const auto& s : derived_series(l)) f.ds_dims.push_back(s.dim());
  f.center_dim = center(l).dim();
  f.derivation_dim = derivations(l).dim();
  if (lcs.back().dim() == 0) f.nilpotency_class = lcs.size() - 1;
  f.is_filiform = f.dim >= 3 && f.nilpotency_class && *f.nilpotency_class == f.dim - 1;
  return f;
}

std::string to_string(const Fingerprint& f) {
  std::ostringstream os;
  const auto seq = [&os](const std::vector<std::size_t>& v) {
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
  };
  os << "dim " << f.dim << " lcs ";
  seq(f.lcs_dims);
  os << " ds ";
  seq(f.ds_dims);
  os << " center " << f.center_dim << " der " << f.derivation_dim << " class ";
  if (f.nilpotency_class)
    os << *f.nilpotency_class;
  else
    os << "none";
  os << (f.is_filiform ? " filiform" : "");
  return os.str();
}

LieAlgebra quotient_algebra(const LieAlgebra& l, const Subspace& ideal) {
  if (ideal.ambient_dim() != l.dim()) throw PreconditionError("ideal lives in the wrong space");
  if (!is_ideal(l, ideal)) throw PreconditionError("quotient_algebra: subspace is not an ideal");
  const std::vector<std::size_t> keep = ideal.non_pivots();
  const std::size_t m = keep.size();
  std::vector<Rational> c(m * m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const Vector r = ideal.reduce(l.bracket_basis(keep[a], keep[b]));
      for (std::size_t k = 0; k < m; ++k) c[(a * m + b) * m + k] = r[keep[k]];
    }
  return LieAlgebra(l.name() + "/I", m, std::move(c));
}

LieAlgebra change_basis(const LieAlgebra& l, const RatMatrix& p) {
  const std::size_t n = l.dim();
  if (p.rows() != n || p.cols() != n) throw PreconditionError("basis change has the wrong shape");
  const RatMatrix pinv = inverse(p);
  std::vector<Rational> c(n * n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Vector f = pinv * l.bracket(p.column(a), p.column(b));
      for (std::size_t k = 0; k < n; ++k) c[(a * n + b) * n + k] = f[k];
    }
  return LieAlgebra(l.name(), n, std::move(c));
}

} // namespace lagext
