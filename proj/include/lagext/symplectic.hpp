#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lagext/cohomology.hpp"

namespace lagext {

/// Lie algebra with a 2-form ω(x, y) = xᵀ Ω y. Closedness and
/// non-degeneracy are properties to check, not construction invariants.
struct SymplecticLieAlgebra {
  LieAlgebra algebra;
  RatMatrix omega;
  std::optional<Subspace> lagrangian_ideal;

  [[nodiscard]] std::size_t dim() const { return algebra.dim(); }
  [[nodiscard]] Rational form(const Vector& x, const Vector& y) const;
};

/// Basis order of the extension is (e_1..e_n, e^1..e^n).
struct ExtensionTriple {
  FlatConnection connection;
  TwoCochain cocycle;
};

/// [[0, -I], [I, 0]], so ω(e_i, e^j) = -δ_ij and ω(e^i, e_j) = δ_ij.
RatMatrix standard_omega(std::size_t n);

/// h ⊕ h* with [x,y] = [x,y]_h + α(x,y), [x,ξ] = ρ(x)ξ, [ξ,η] = 0, where ρ
/// is read off the connection without any flatness check. h* is recorded
/// as the candidate Lagrangian ideal.
SymplecticLieAlgebra build_extension_unchecked(const FlatConnection& c, const TwoCochain& alpha);

/// As above, then throws PreconditionError when the result violates Jacobi.
SymplecticLieAlgebra build_extension(const ExtensionTriple& t);

struct ClosednessViolation {
  std::size_t i, j, k; // i < j < k
  Rational residual;   // ω(e_i,[e_j,e_k]) + ω(e_j,[e_k,e_i]) + ω(e_k,[e_i,e_j])
};

std::vector<ClosednessViolation> d_omega(const SymplecticLieAlgebra& s);
/// Ω antisymmetric, invertible and closed.
bool is_symplectic(const SymplecticLieAlgebra& s);

/// Σ_cycl α(x,y)(z) = 0 on every basis triple.
bool check_bianchi(const TwoCochain& alpha);

enum class IdealKind { not_ideal, not_isotropic, isotropic, lagrangian };
const char* to_string(IdealKind k);

struct IdealVerdict {
  IdealKind kind = IdealKind::not_ideal;
  bool normal = false; // J^⊥ω is an ideal
};

/// Isotropy is tested before the ideal property.
IdealVerdict is_lagrangian_ideal(const SymplecticLieAlgebra& s, const Subspace& j);

/// {v : ω(v, j) = 0 for all j in J}
Subspace symplectic_orthogonal(const SymplecticLieAlgebra& s, const Subspace& j);

/// J^⊥ω / J with the induced bracket and form, on the basis of
/// quotient_basis(J^⊥ω, J). Throws PreconditionError unless J is a normal
/// isotropic ideal.
SymplecticLieAlgebra symplectic_reduction(const SymplecticLieAlgebra& s, const Subspace& j);

/// Connection on g/J defined by ω(∇_x y, u) = -ω(y, [x,u]) for u in J, on the
/// complement spanned by the non-pivot coordinates of J. Throws
/// PreconditionError unless J is Lagrangian and IntegrityError when the
/// result is not flat, torsion-free, or (for nilpotent g) complete.
FlatConnection induced_flat_connection(const SymplecticLieAlgebra& s, const Subspace& j);

/// ω(∇_x y, z) = -ω(y, [x, z]). Throws PreconditionError unless s is
/// symplectic, IntegrityError if the result fails the axiom sweep.
FlatConnection canonical_connection(const SymplecticLieAlgebra& s);

struct NilpotencyVerdict {
  bool nilpotent = false;
  std::optional<std::size_t> nilpotency_class;
  std::vector<std::size_t> lcs_dims;
  // Criterion path.
  bool base_nilpotent = false;
  bool complete = false;
  bool condition_holds = false;
  std::size_t p = 0;
};

/// Decides nilpotency of the extension from its lower central series and,
/// independently, from base nilpotency + completeness + the vanishing of
/// Σ_{j<p} ρ(x)^j α(x, ad_x^{p-1-j} y). Throws IntegrityError if they differ.
NilpotencyVerdict extension_nilpotency(const ExtensionTriple& t, std::uint64_t seed = 0);

/// Ψ(x, ξ) = (x, ξ + σ(x)) from g_{∇,α1} to g_{∇,α2}. Throws
/// PreconditionError unless both triples share the connection and
/// α2 = α1 - ∂σ, IntegrityError if Ψ does not preserve brackets.
RatMatrix equivalence_map_psi(const ExtensionTriple& t1, const ExtensionTriple& t2,
                              const OneCochain& sigma);

/// Ψ[a, b] == [Ψa, Ψb] on all basis pairs.
bool preserves_bracket(const RatMatrix& psi, const LieAlgebra& from, const LieAlgebra& to);
/// Ψᵀ Ω Ψ
RatMatrix pullback(const RatMatrix& psi, const RatMatrix& omega);

/// Form on g_{∇,α-∂σ} pulled back along (x, ξ) -> (x, ξ - (σ - σ_L)(x)).
/// Equals Ω plus an antisymmetric block on h × h. Throws PreconditionError
/// if σ_L is not symmetric, IntegrityError if the result is degenerate or
/// not closed.
RatMatrix adjusted_symplectic_form(const ExtensionTriple& t, const OneCochain& sigma,
                                   const OneCochain& sigma_l);

} // namespace lagext
