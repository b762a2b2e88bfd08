#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lagext/linalg.hpp"

namespace lagext {

/// One nonzero structure constant [e_i, e_j] += coeff * e_k (0-based).
struct BracketTerm {
  std::size_t i, j;
  Rational coeff;
  std::size_t k;
};

/// Lie algebra given by structure constants in a fixed basis e_1..e_n:
/// [e_i, e_j] = sum_k c^k_{ij} e_k.
///
/// Antisymmetry is enforced on construction. The Jacobi identity is not;
/// call check_jacobi() (a corrupted bracket must be representable so it
/// can be diagnosed).
class LieAlgebra {
public:
  LieAlgebra() = default;
  /// Zero bracket.
  LieAlgebra(std::string name, std::size_t dim);
  /// `constants` is the full n^3 tensor, index (i*n + j)*n + k.
  /// Throws Error unless c_{ij} = -c_{ji}.
  LieAlgebra(std::string name, std::size_t dim, std::vector<Rational> constants);

  /// Each term sets [e_i,e_j] += c e_k and [e_j,e_i] -= c e_k.
  static LieAlgebra from_brackets(std::string name, std::size_t dim,
                                  const std::vector<BracketTerm>& terms);

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  [[nodiscard]] const std::vector<Rational>& constants() const { return c_; }

  /// [e_i, e_j] as a coordinate vector.
  [[nodiscard]] Vector bracket_basis(std::size_t i, std::size_t j) const;
  [[nodiscard]] Vector bracket(const Vector& x, const Vector& y) const;
  /// Matrix of ad_x, column j = [x, e_j].
  [[nodiscard]] RatMatrix ad(const Vector& x) const;
  [[nodiscard]] bool is_abelian() const;

  LieAlgebra renamed(std::string name) const;

  /// Same bracket tensor (names are ignored).
  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.c_ == b.c_;
  }

private:
  std::string name_;
  std::size_t dim_ = 0;
  std::vector<Rational> c_;
};

/// Standard 4-dimensional nilpotent algebras: abelian, Heisenberg + R,
/// and the filiform algebra [e1,e4] = -e2, [e2,e4] = -e3.
LieAlgebra abelian_algebra(std::size_t dim, std::string name = "");
LieAlgebra base_algebra_a();
LieAlgebra base_algebra_l();
LieAlgebra base_algebra_t();
/// 'a', 'l' or 't'; throws Error otherwise.
LieAlgebra base_algebra(char tag);

struct JacobiViolation {
  std::size_t i, j, k; // 0-based, i < j < k
  Vector residual;     // [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]
};

std::vector<JacobiViolation> check_jacobi(const LieAlgebra& l);

/// Span of [a, b] over a in A, b in B.
Subspace bracket_span(const LieAlgebra& l, const Subspace& a, const Subspace& b);
bool is_ideal(const LieAlgebra& l, const Subspace& s);
bool is_subalgebra(const LieAlgebra& l, const Subspace& s);

/// C^0 = g, C^{p+1} = [g, C^p], stopping at the first repeated term.
std::vector<Subspace> lower_central_series(const LieAlgebra& l);
/// D^0 = g, D^{p+1} = [D^p, D^p], stopping at the first repeated term.
std::vector<Subspace> derived_series(const LieAlgebra& l);
Subspace center(const LieAlgebra& l);
/// Solution space of D[x,y] = [Dx,y] + [x,Dy], as vectors of length n^2
/// with D(r, c) at index r*n + c.
Subspace derivations(const LieAlgebra& l);

bool is_nilpotent(const LieAlgebra& l);
/// Number of steps for the lower central series to reach 0: 1 for abelian,
/// 0 for the zero algebra, nullopt when not nilpotent.
std::optional<std::size_t> nilpotency_class(const LieAlgebra& l);

/// Isomorphism invariants. Equal fingerprints do not prove isomorphism;
/// different fingerprints do prove non-isomorphism.
struct Fingerprint {
  std::size_t dim = 0;
  std::vector<std::size_t> lcs_dims;
  std::vector<std::size_t> ds_dims;
  std::size_t center_dim = 0;
  std::size_t derivation_dim = 0;
  std::optional<std::size_t> nilpotency_class;
  bool is_filiform = false;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const LieAlgebra& l);
std::string to_string(const Fingerprint& f);

/// L / I on the basis of coordinates that are not pivots of I's echelon
/// basis. Throws PreconditionError unless I is an ideal.
LieAlgebra quotient_algebra(const LieAlgebra& l, const Subspace& ideal);

/// Structure constants in the basis f_j = sum_i P(i, j) e_i.
/// Throws PreconditionError when P is singular.
LieAlgebra change_basis(const LieAlgebra& l, const RatMatrix& p);

} // namespace lagext
