#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lagext/lie_algebra.hpp"

namespace lagext {

/// Connection on a Lie algebra, i.e. a bilinear product x.y = ∇_x y given by
/// Christoffel-type symbols ∇_{e_i} e_j = sum_k Γ^k_{ij} e_k.
///
/// Nothing is asserted on construction; check_flat_torsion_free() decides
/// whether this is a flat torsion-free (left-symmetric) structure.
class FlatConnection {
public:
  using Params = std::vector<std::pair<std::string, Rational>>;

  FlatConnection() = default;
  /// Zero connection on `base`.
  explicit FlatConnection(LieAlgebra base);
  /// `gamma` is the full n^3 tensor, index (i*n + j)*n + k.
  FlatConnection(LieAlgebra base, std::vector<Rational> gamma, Params params = {});

  [[nodiscard]] const LieAlgebra& base() const { return base_; }
  [[nodiscard]] std::size_t dim() const { return base_.dim(); }
  [[nodiscard]] const Rational& gamma(std::size_t i, std::size_t j, std::size_t k) const {
    return gamma_[(i * dim() + j) * dim() + k];
  }
  [[nodiscard]] const std::vector<Rational>& gamma() const { return gamma_; }
  [[nodiscard]] const Params& params() const { return params_; }

  /// ∇_x y
  [[nodiscard]] Vector product(const Vector& x, const Vector& y) const;
  /// Matrix of ∇_x (left multiplication), column j = ∇_x e_j.
  [[nodiscard]] RatMatrix left(const Vector& x) const;
  /// Matrix of ϱ_x: y -> ∇_y x (right multiplication), column j = ∇_{e_j} x.
  [[nodiscard]] RatMatrix right(const Vector& x) const;

  /// Same Γ tensor over the same bracket (names and params ignored).
  friend bool operator==(const FlatConnection& a, const FlatConnection& b) {
    return a.base_ == b.base_ && a.gamma_ == b.gamma_;
  }

private:
  LieAlgebra base_;
  std::vector<Rational> gamma_;
  Params params_;
};

struct TorsionViolation {
  std::size_t i, j;  // 0-based, i < j
  Vector residual;   // T(e_i, e_j) = ∇_i e_j - ∇_j e_i - [e_i, e_j]
};

struct CurvatureViolation {
  std::size_t i, j, k; // i < j
  Vector residual;     // R(e_i, e_j) e_k
};

struct AssociatorViolation {
  std::size_t i, j, k; // i < j
  Vector residual;     // (e_i,e_j,e_k) - (e_j,e_i,e_k)
};

/// Result of the axiom sweep. Torsion and curvature decide the verdict;
/// the KV1/KV2 formulation is recomputed from the product alone and kept
/// as a cross-check of the same fact.
struct ConnectionReport {
  std::vector<TorsionViolation> torsion;
  std::vector<CurvatureViolation> curvature;
  bool kv1_holds = true; // x.y - y.x == [x,y] via induced_bracket
  std::vector<AssociatorViolation> kv2;

  [[nodiscard]] bool torsion_free() const { return torsion.empty(); }
  [[nodiscard]] bool flat() const { return curvature.empty(); }
  [[nodiscard]] bool ok() const { return torsion_free() && flat(); }
  /// The two formulations agree: (T = 0 and R = 0) iff (KV1 and KV2).
  [[nodiscard]] bool formulations_agree() const { return ok() == (kv1_holds && kv2.empty()); }
};

ConnectionReport check_flat_torsion_free(const FlatConnection& c);

/// Algebra with bracket x.y - y.x.
LieAlgebra induced_bracket(const FlatConnection& c);

struct CompletenessEvidence {
  bool complete = false;                 // tr ϱ_{e_i} = 0 for every i
  std::vector<Rational> right_traces;    // tr ϱ_{e_i}
  std::vector<bool> left_nilpotent;      // ∇_{e_i} nilpotent
  std::vector<bool> right_nilpotent;     // ϱ_{e_i} nilpotent
  std::vector<Vector> samples;           // random rational combinations x
  std::vector<bool> sample_left_nilpotent; // ∇_x nilpotent for each sample

  [[nodiscard]] bool all_nilpotent() const;
};

/// Number of pseudo-random combinations used to probe "∇_x nilpotent for all x".
inline constexpr std::size_t kNilpotencyProbes = 8;

/// Throws PreconditionError unless c is flat and torsion-free.
CompletenessEvidence is_geodesically_complete(const FlatConnection& c, std::uint64_t seed = 0);

/// ρ(x)ξ = -ξ∘∇_x on the dual space, one n×n matrix per basis vector,
/// acting on coordinate vectors in the dual basis e^1..e^n.
struct DualRep {
  LieAlgebra base;
  std::vector<RatMatrix> rho;
  bool representation_law = false; // ρ([e_i,e_j]) = [ρ(e_i), ρ(e_j)] verified

  [[nodiscard]] std::size_t dim() const { return base.dim(); }
  [[nodiscard]] RatMatrix at(const Vector& x) const;
};

/// ρ matrices without any flatness requirement. Used to assemble candidate
/// extensions whose failure is then reported rather than thrown.
DualRep dual_matrices(const FlatConnection& c);

/// Throws PreconditionError when c is not flat.
DualRep dual_representation(const FlatConnection& c);

} // namespace lagext
