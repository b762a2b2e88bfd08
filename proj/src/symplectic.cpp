#include "lagext/symplectic.hpp"

#include "lagext/error.hpp"
#include "lagext/sampler.hpp"

namespace lagext {

Rational SymplecticLieAlgebra::form(const Vector& x, const Vector& y) const {
  const Vector oy = omega * y;
  Rational r;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) r += x[i] * oy[i];
  return r;
}

RatMatrix standard_omega(std::size_t n) {
  RatMatrix m(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, n + i) = -1;
    m(n + i, i) = 1;
  }
  return m;
}

SymplecticLieAlgebra build_extension_unchecked(const FlatConnection& c, const TwoCochain& alpha) {
  const std::size_t n = c.dim();
  if (alpha.dim() != n) throw Error("cocycle dimension does not match the connection");
  const std::size_t m = 2 * n;
  const LieAlgebra& h = c.base();
  const DualRep r = dual_matrices(c);
  std::vector<Rational> t(m * m * m);
  const auto at = [&](std::size_t a, std::size_t b, std::size_t k) -> Rational& {
    return t[(a * m + b) * m + k];
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        at(i, j, k) = h.c(i, j, k);
        at(i, j, n + k) = alpha(i, j, k);
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t mm = 0; mm < n; ++mm)
      for (std::size_t k = 0; k < n; ++k) {
        at(i, n + mm, n + k) = r.rho[i](k, mm);
        at(n + mm, i, n + k) = -r.rho[i](k, mm);
      }

  std::vector<std::size_t> dual(n);
  for (std::size_t i = 0; i < n; ++i) dual[i] = n + i;
  return {LieAlgebra("ext(" + h.name() + ")", m, std::move(t)), standard_omega(n),
          Subspace::coordinate(m, dual)};
}

SymplecticLieAlgebra build_extension(const ExtensionTriple& t) {
  SymplecticLieAlgebra s = build_extension_unchecked(t.connection, t.cocycle);
  if (!check_jacobi(s.algebra).empty())
    throw PreconditionError("extension violates the Jacobi identity; the cocycle or the "
                            "connection is inconsistent");
  return s;
}

std::vector<ClosednessViolation> d_omega(const SymplecticLieAlgebra& s) {
  const std::size_t m = s.dim();
  const LieAlgebra& g = s.algebra;
  const auto e = [m](std::size_t i) { return unit_vector(m, i); };
  std::vector<ClosednessViolation> out;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k) {
        Rational v = s.form(e(i), g.bracket_basis(j, k)) + s.form(e(j), g.bracket_basis(k, i)) +
                     s.form(e(k), g.bracket_basis(i, j));
        if (!v.is_zero()) out.push_back({i, j, k, std::move(v)});
      }
  return out;
}

bool is_symplectic(const SymplecticLieAlgebra& s) {
  const RatMatrix& w = s.omega;
  if (w.rows() != s.dim() || w.cols() != s.dim()) return false;
  if (w.transpose() != Rational(-1) * w) return false;
  if (rank(w) != s.dim()) return false;
  return d_omega(s).empty();
}

bool check_bianchi(const TwoCochain& alpha) {
  for (const auto& v : cyclic_sums(alpha))
    if (!v.is_zero()) return false;
  return true;
}

const char* to_string(IdealKind k) {
  switch (k) {
  case IdealKind::not_ideal: return "not_ideal";
  case IdealKind::not_isotropic: return "not_isotropic";
  case IdealKind::isotropic: return "isotropic";
  case IdealKind::lagrangian: return "lagrangian";
  }
  return "?";
}

Subspace symplectic_orthogonal(const SymplecticLieAlgebra& s, const Subspace& j) {
  std::vector<Vector> rows;
  for (const auto& b : j.basis()) rows.push_back(s.omega * b);
  return kernel_basis(RatMatrix::from_rows(rows, s.dim()));
}

IdealVerdict is_lagrangian_ideal(const SymplecticLieAlgebra& s, const Subspace& j) {
  IdealVerdict v;
  v.normal = is_ideal(s.algebra, symplectic_orthogonal(s, j));
  const auto& b = j.basis();
  for (std::size_t a = 0; a < b.size(); ++a)
    for (std::size_t c = a + 1; c < b.size(); ++c)
      if (!s.form(b[a], b[c]).is_zero()) {
        v.kind = IdealKind::not_isotropic;
        return v;
      }
  if (!is_ideal(s.algebra, j)) {
    v.kind = IdealKind::not_ideal;
    return v;
  }
  v.kind = 2 * j.dim() == s.dim() ? IdealKind::lagrangian : IdealKind::isotropic;
  return v;
}

SymplecticLieAlgebra symplectic_reduction(const SymplecticLieAlgebra& s, const Subspace& j) {
  const IdealVerdict v = is_lagrangian_ideal(s, j);
  if (v.kind != IdealKind::isotropic && v.kind != IdealKind::lagrangian)
    throw PreconditionError(std::string("reduction needs an isotropic ideal, got ") +
                            to_string(v.kind));
  if (!v.normal) throw PreconditionError("reduction needs a normal ideal");

  const Subspace orth = symplectic_orthogonal(s, j);
  const std::vector<Vector> w = quotient_basis(orth, j);
  const std::size_t m = w.size();
  std::vector<std::size_t> lead(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t i = 0; i < w[a].size(); ++i)
      if (!w[a][i].is_zero()) {
        lead[a] = i;
        break;
      }

  std::vector<Rational> t(m * m * m);
  RatMatrix omega(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      omega(a, b) = s.form(w[a], w[b]);
      const Vector br = j.reduce(s.algebra.bracket(w[a], w[b]));
      for (std::size_t c = 0; c < m; ++c) t[(a * m + b) * m + c] = br[lead[c]];
    }
  return {LieAlgebra(s.algebra.name() + "//J", m, std::move(t)), std::move(omega), std::nullopt};
}

FlatConnection induced_flat_connection(const SymplecticLieAlgebra& s, const Subspace& j) {
  if (is_lagrangian_ideal(s, j).kind != IdealKind::lagrangian)
    throw PreconditionError("induced connection needs a Lagrangian ideal");
  const std::size_t n = j.dim();
  const LieAlgebra h = quotient_algebra(s.algebra, j);
  const std::vector<std::size_t> comp = j.non_pivots();
  const std::vector<Vector>& u = j.basis();
  const std::size_t m = s.dim();

  RatMatrix pairing(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t c = 0; c < n; ++c) pairing(k, c) = s.form(unit_vector(m, comp[k]), u[c]);
  if (rank(pairing) != n) throw IntegrityError("degenerate pairing between g/J and J");
  const RatMatrix pinv = inverse(pairing);

  std::vector<Rational> gamma(n * n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const Vector xa = unit_vector(m, comp[a]);
    for (std::size_t b = 0; b < n; ++b) {
      const Vector yb = unit_vector(m, comp[b]);
      Vector rhs(n);
      for (std::size_t c = 0; c < n; ++c) rhs[c] = -s.form(yb, s.algebra.bracket(xa, u[c]));
      // Γ_ab P = rhs
      const Vector g = pinv.transpose() * rhs;
      for (std::size_t k = 0; k < n; ++k) gamma[(a * n + b) * n + k] = g[k];
    }
  }
  FlatConnection c(h.renamed(s.algebra.name() + "/J"), std::move(gamma));
  if (!check_flat_torsion_free(c).ok())
    throw IntegrityError("induced connection is not flat and torsion-free");
  if (is_nilpotent(s.algebra) && !is_geodesically_complete(c).complete)
    throw IntegrityError("induced connection of a nilpotent algebra is not complete");
  return c;
}

FlatConnection canonical_connection(const SymplecticLieAlgebra& s) {
  if (!is_symplectic(s)) throw PreconditionError("canonical connection needs a symplectic form");
  const std::size_t m = s.dim();
  const LieAlgebra& g = s.algebra;
  const RatMatrix solve = inverse(s.omega.transpose());
  std::vector<Rational> gamma(m * m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Vector r(m);
      for (std::size_t c = 0; c < m; ++c)
        for (std::size_t k = 0; k < m; ++k)
          if (!g.c(a, c, k).is_zero()) r[c] -= g.c(a, c, k) * s.omega(b, k);
      const Vector x = solve * r;
      for (std::size_t k = 0; k < m; ++k) gamma[(a * m + b) * m + k] = x[k];
    }
  FlatConnection c(g, std::move(gamma));
  if (!check_flat_torsion_free(c).ok())
    throw IntegrityError("canonical connection is not flat and torsion-free");
  return c;
}

namespace {

RatMatrix power(const RatMatrix& a, std::size_t k) {
  RatMatrix r = RatMatrix::identity(a.rows());
  for (std::size_t i = 0; i < k; ++i) r = r * a;
  return r;
}

// Steps until span{ρ_i v} iterated from h* reaches 0, or n if it never does.
std::size_t representation_nilindex(const DualRep& r) {
  const std::size_t n = r.dim();
  Subspace v = Subspace::whole(n);
  for (std::size_t step = 0; step <= n; ++step) {
    if (v.dim() == 0) return step;
    std::vector<Vector> next;
    for (const auto& m : r.rho)
      for (const auto& b : v.basis()) next.push_back(m * b);
    v = Subspace(n, next);
  }
  return n;
}

} // namespace

NilpotencyVerdict extension_nilpotency(const ExtensionTriple& t, std::uint64_t seed) {
  const SymplecticLieAlgebra s = build_extension(t);
  NilpotencyVerdict v;
  for (const auto& c : lower_central_series(s.algebra)) v.lcs_dims.push_back(c.dim());
  v.nilpotency_class = nilpotency_class(s.algebra);
  v.nilpotent = v.nilpotency_class.has_value();

  const FlatConnection& c = t.connection;
  const LieAlgebra& h = c.base();
  const std::size_t n = h.dim();
  const DualRep r = dual_representation(c);
  const auto hclass = nilpotency_class(h);
  v.base_nilpotent = hclass.has_value();
  v.complete = is_geodesically_complete(c, seed).complete;
  v.p = (hclass ? *hclass : n) + representation_nilindex(r);

  std::vector<Vector> xs;
  for (std::size_t i = 0; i < n; ++i) xs.push_back(unit_vector(n, i));
  RationalSampler sampler(seed);
  for (std::size_t i = 0; i < kNilpotencyProbes; ++i) xs.push_back(sampler.nonzero_vector(n));

  v.condition_holds = true;
  for (const auto& x : xs) {
    const RatMatrix rx = r.at(x);
    const RatMatrix adx = h.ad(x);
    for (std::size_t yi = 0; yi < n && v.condition_holds; ++yi) {
      Vector sum(n);
      for (std::size_t j = 0; j < v.p; ++j)
        sum = sum + power(rx, j) * t.cocycle.apply(x, power(adx, v.p - 1 - j) * unit_vector(n, yi));
      if (!is_zero(sum)) v.condition_holds = false;
    }
    if (!v.condition_holds) break;
  }

  const bool criterion = v.base_nilpotent && v.complete && v.condition_holds;
  if (criterion != v.nilpotent)
    throw IntegrityError("nilpotency of the extension disagrees with the criterion on (h, ∇, α)");
  return v;
}

bool preserves_bracket(const RatMatrix& psi, const LieAlgebra& from, const LieAlgebra& to) {
  const std::size_t m = from.dim();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (psi * from.bracket_basis(a, b) != to.bracket(psi.column(a), psi.column(b))) return false;
  return true;
}

RatMatrix pullback(const RatMatrix& psi, const RatMatrix& omega) {
  return psi.transpose() * omega * psi;
}

RatMatrix equivalence_map_psi(const ExtensionTriple& t1, const ExtensionTriple& t2,
                              const OneCochain& sigma) {
  if (!(t1.connection == t2.connection))
    throw PreconditionError("equivalence map needs a shared connection");
  const DualRep r = dual_representation(t1.connection);
  if (t2.cocycle != t1.cocycle - coboundary_1(r, sigma))
    throw PreconditionError("cocycles are not related by the given 1-cochain");
  const std::size_t n = t1.connection.dim();
  RatMatrix psi = RatMatrix::identity(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) psi(n + k, i) = sigma(i, k);
  if (!preserves_bracket(psi, build_extension(t1).algebra, build_extension(t2).algebra))
    throw IntegrityError("equivalence map does not preserve brackets");
  return psi;
}

RatMatrix adjusted_symplectic_form(const ExtensionTriple& t, const OneCochain& sigma,
                                   const OneCochain& sigma_l) {
  if (!sigma_l.is_lagrangian()) throw PreconditionError("σ_L must be symmetric");
  const std::size_t n = t.connection.dim();
  const DualRep r = dual_representation(t.connection);
  RatMatrix psi = RatMatrix::identity(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) psi(n + k, i) = sigma_l(i, k) - sigma(i, k);
  const RatMatrix w = pullback(psi, standard_omega(n));

  SymplecticLieAlgebra bar = build_extension({t.connection, t.cocycle - coboundary_1(r, sigma)});
  bar.omega = w;
  bar.lagrangian_ideal.reset();
  if (rank(w) != 2 * n) throw IntegrityError("adjusted form is degenerate");
  if (!d_omega(bar).empty()) throw IntegrityError("adjusted form is not closed");
  return w;
}

} // namespace lagext
