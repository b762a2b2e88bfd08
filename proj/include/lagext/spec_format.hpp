#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lagext/expression.hpp"
#include "lagext/symplectic.hpp"

namespace lagext {

/// Basis token as written: e<number> or e^<number>. In a dual block e^k
/// sits at position n/2 + k - 1; in cocycle values e^k is the k-th dual
/// basis vector of h*.
struct BasisRef {
  std::size_t number = 1;
  bool dual = false;
  friend bool operator==(const BasisRef&, const BasisRef&) = default;
};

struct Term {
  Expr coeff;
  BasisRef basis;
  friend bool operator==(const Term&, const Term&) = default;
};

/// One "KEYWORD X Y -> ..." line. omega lines carry a single term whose
/// basis is unused.
struct SpecLine {
  BasisRef x, y;
  std::vector<Term> terms;
  std::size_t line = 0; // source line, 0 when built in memory

  friend bool operator==(const SpecLine& a, const SpecLine& b) {
    return a.x == b.x && a.y == b.y && a.terms == b.terms;
  }
};

struct ParamConstraint {
  enum class Kind { free, positive, nonzero, positive_nonzero, gt, lt, ne };
  Kind kind = Kind::free;
  Expr bound; // gt, lt, ne
  friend bool operator==(const ParamConstraint&, const ParamConstraint&) = default;
};

struct ParamDecl {
  std::string name;
  std::vector<ParamConstraint> constraints;
  std::optional<Rational> value;
  friend bool operator==(const ParamDecl&, const ParamDecl&) = default;
};

struct AlgebraBlock {
  std::string name;
  std::size_t dim = 0;
  bool dual = false;        // basis e1..e_{dim/2}, e^1..e^{dim/2}
  std::optional<char> base; // a, l or t
  std::vector<ParamDecl> params;
  std::vector<SpecLine> brackets;
  std::vector<SpecLine> connection;
  std::vector<SpecLine> omega;
  std::vector<SpecLine> cocycle;

  friend bool operator==(const AlgebraBlock&, const AlgebraBlock&) = default;

  [[nodiscard]] std::size_t h_dim() const { return dual ? dim / 2 : dim; }
  /// Values declared with "= VALUE".
  [[nodiscard]] ParamValues declared_values() const;
};

struct SpecFile {
  std::vector<AlgebraBlock> blocks;
  friend bool operator==(const SpecFile&, const SpecFile&) = default;
};

/// Throws SpecError with line and column.
SpecFile parse_spec(std::string_view text);
std::string serialize(const SpecFile& f);
std::string serialize(const AlgebraBlock& b);
std::string basis_name(const BasisRef& r);
std::string format_terms(const std::vector<Term>& terms);
/// 0-based position of a bracket/connection/omega token in block b.
std::size_t position(const AlgebraBlock& b, const BasisRef& r);

/// Two connection lines on the same (X, Y) cell.
struct DuplicateCell {
  std::size_t i, j;                       // 0-based
  std::vector<std::vector<Term>> claims;  // each right-hand side, in order
};
std::vector<DuplicateCell> connection_duplicates(const AlgebraBlock& b);

/// Does `values` satisfy every declared constraint? Bounds that fail to
/// evaluate count as violated.
bool satisfies(const AlgebraBlock& b, const ParamValues& values);

/// Materialization. Bracket lines win over "base"; when both are present
/// they must agree. Missing parameter values throw Error.
LieAlgebra to_algebra(const AlgebraBlock& b, const ParamValues& values);
/// Throws Error on duplicate cells.
FlatConnection to_connection(const AlgebraBlock& b, const ParamValues& values);
TwoCochain to_cocycle(const AlgebraBlock& b, const ParamValues& values);
RatMatrix to_omega(const AlgebraBlock& b, const ParamValues& values);

AlgebraBlock from_algebra(const LieAlgebra& l);
AlgebraBlock from_connection(const FlatConnection& c);
/// Extension layout (dual block) when dim is even and `dual` is set.
AlgebraBlock from_symplectic(const SymplecticLieAlgebra& s, bool dual);
void add_cocycle(AlgebraBlock& b, const TwoCochain& alpha);

} // namespace lagext
