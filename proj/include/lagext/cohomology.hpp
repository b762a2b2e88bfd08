#pragma once

#include <optional>
#include <vector>

#include "lagext/connection.hpp"

namespace lagext {

/// σ: h -> h*, stored as s(i, k) = σ(e_i)(e_k).
class OneCochain {
public:
  OneCochain() = default;
  explicit OneCochain(std::size_t n) : s_(n, n) {}
  explicit OneCochain(RatMatrix s);

  [[nodiscard]] std::size_t dim() const { return s_.rows(); }
  Rational& operator()(std::size_t i, std::size_t k) { return s_(i, k); }
  const Rational& operator()(std::size_t i, std::size_t k) const { return s_(i, k); }
  [[nodiscard]] const RatMatrix& matrix() const { return s_; }
  /// σ(x) in dual coordinates.
  [[nodiscard]] Vector apply(const Vector& x) const;
  /// Lagrangian 1-cochains are the symmetric ones: σ(x)(y) = σ(y)(x).
  [[nodiscard]] bool is_lagrangian() const { return s_ == s_.transpose(); }

  friend bool operator==(const OneCochain&, const OneCochain&) = default;

private:
  RatMatrix s_;
};

/// α: Λ²h -> h*, stored as a(i, j, k) = α(e_i, e_j)(e_k), antisymmetric in (i, j).
class TwoCochain {
public:
  TwoCochain() = default;
  explicit TwoCochain(std::size_t n) : n_(n), a_(n * n * n) {}

  [[nodiscard]] std::size_t dim() const { return n_; }
  [[nodiscard]] const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return a_[(i * n_ + j) * n_ + k];
  }
  /// Sets α(e_i,e_j)(e_k) = v and α(e_j,e_i)(e_k) = -v. Throws when i == j and v != 0.
  void set(std::size_t i, std::size_t j, std::size_t k, const Rational& v);
  /// α(e_i, e_j) in dual coordinates.
  [[nodiscard]] Vector value(std::size_t i, std::size_t j) const;
  /// α(x, y) for arbitrary vectors.
  [[nodiscard]] Vector apply(const Vector& x, const Vector& y) const;
  [[nodiscard]] bool is_zero() const { return lagext::is_zero(a_); }

  /// Coordinates in the canonical linearization: pairs i<j lexicographic,
  /// then k. Length n * n(n-1)/2.
  [[nodiscard]] Vector flatten() const;
  static TwoCochain unflatten(std::size_t n, const Vector& v);

  friend TwoCochain operator+(const TwoCochain& a, const TwoCochain& b);
  friend TwoCochain operator-(const TwoCochain& a, const TwoCochain& b);
  friend TwoCochain operator*(const Rational& s, const TwoCochain& a);
  friend bool operator==(const TwoCochain&, const TwoCochain&) = default;

private:
  std::size_t n_ = 0;
  std::vector<Rational> a_;
};

/// ∂²α evaluated on basis triples i<j<k (lexicographic), each entry in h*.
struct ThreeCochain {
  std::size_t n = 0;
  std::vector<Vector> values; // one per triple
  [[nodiscard]] bool is_zero() const;
};

std::size_t pair_count(std::size_t n);
std::size_t triple_count(std::size_t n);
/// Position of (i<j) in the lexicographic pair order.
std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j);

/// (∂σ)(x,y) = ρ(x)σ(y) - ρ(y)σ(x) - σ([x,y])
TwoCochain coboundary_1(const DualRep& r, const OneCochain& sigma);

/// (∂α)(x,y,z) = Σ_cycl ρ(x)α(y,z) + α(x,[y,z])
ThreeCochain coboundary_2(const DualRep& r, const TwoCochain& alpha);

/// Σ_cycl α(e_i,e_j)(e_k) on triples i<j<k; zero iff α is a Lagrangian 2-cochain.
std::vector<Rational> cyclic_sums(const TwoCochain& alpha);

/// Linearized maps in the canonical coordinates.
RatMatrix coboundary_1_matrix(const DualRep& r);          // C^1 (n^2) -> C^2
RatMatrix coboundary_2_matrix(const DualRep& r);          // C^2 -> C^3
RatMatrix cyclic_sum_matrix(std::size_t n);               // C^2 -> Λ³h*
/// Basis of the symmetric 1-cochains: E_ii, then E_ik + E_ki for i<k.
std::vector<OneCochain> lagrangian_one_cochain_basis(std::size_t n);

struct CocycleBases {
  Subspace z2;   // Z²ρ
  Subspace z2l;  // Z²_{L,ρ} = Z²ρ ∩ C²_L
};

CocycleBases cocycle_bases(const DualRep& r);

struct CohomologySummary {
  std::size_t c1_dim = 0;
  std::size_t c1l_dim = 0;
  std::size_t z2_dim = 0;
  std::size_t b2_dim = 0;   // dim ∂C¹
  std::size_t b2l_dim = 0;  // dim ∂C¹_L
  std::size_t z2l_dim = 0;
  std::size_t h2_dim = 0;
  std::size_t h2l_dim = 0;
  std::size_t lagrangian_to_ordinary_rank = 0; // rank of H²_L -> H²
  std::vector<TwoCochain> h2_representatives;
  std::vector<TwoCochain> h2l_representatives;
};

CohomologySummary cohomology(const DualRep& r);

/// σ with β = α - ∂σ (σ symmetric when lagrangian_only), or nullopt.
/// Free coordinates are zero, so β == α yields σ = 0.
std::optional<OneCochain> solve_coboundary(const DualRep& r, const TwoCochain& alpha,
                                           const TwoCochain& beta, bool lagrangian_only);

} // namespace lagext
