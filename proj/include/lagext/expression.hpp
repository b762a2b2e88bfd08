#pragma once

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lagext/error.hpp"
#include "lagext/rational.hpp"

namespace lagext {

using ParamValues = std::vector<std::pair<std::string, Rational>>;

/// Rational expression over named parameters: + - * / ^integer and parens.
/// Constant subterms are folded while parsing, so "1/2" is a single
/// constant and "(t+1)/4" is a quotient node.
struct Expr {
  enum class Op { constant, param, neg, add, sub, mul, div, pow };

  Op op = Op::constant;
  Rational value;          // constant
  std::string name;        // param
  long exponent = 0;       // pow
  std::vector<Expr> args;  // operands

  static Expr constant(Rational v);
  static Expr param(std::string name);

  [[nodiscard]] bool is_constant() const { return op == Op::constant; }
  /// Throws Error on a missing parameter or division by zero.
  [[nodiscard]] Rational eval(const ParamValues& params) const;
  void collect_params(std::set<std::string>& out) const;
  /// Text that parses back to an equal tree.
  [[nodiscard]] std::string str() const;

  friend bool operator==(const Expr&, const Expr&) = default;
};

Expr negate(Expr e);
Expr make_binary(Expr::Op op, Expr a, Expr b);

/// Character cursor over one line, tracking the column for diagnostics.
class Cursor {
public:
  Cursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_space();
  [[nodiscard]] bool at_end();
  [[nodiscard]] char peek();
  bool accept(char c);
  bool accept(std::string_view word); // whole word or exact symbol
  [[nodiscard]] std::string_view rest() const { return text_.substr(pos_); }
  [[nodiscard]] std::size_t column() const { return pos_ + 1; }
  [[nodiscard]] std::size_t line() const { return line_; }
  std::size_t pos_ = 0;

  /// e<k> or e^<k> at the cursor (without consuming).
  [[nodiscard]] bool at_basis();
  /// [A-Za-z_][A-Za-z0-9_]* at the cursor, or empty.
  [[nodiscard]] std::string_view peek_identifier();
  std::string identifier();

  [[noreturn]] void fail(const std::string& what) const;

private:
  std::string_view text_;
  std::size_t line_;
};

class SpecError : public Error {
public:
  SpecError(std::size_t line, std::size_t column, const std::string& what);
  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] std::size_t column() const { return column_; }

private:
  std::size_t line_, column_;
};

/// Full expression: sums of products. Stops before anything that cannot
/// continue it (a basis token, a keyword, end of line).
Expr parse_expression(Cursor& c);
/// Product-level expression: no top-level + or -, so it can serve as the
/// coefficient of a basis token in a sum of terms.
Expr parse_product(Cursor& c);

/// Convenience for whole strings; trailing input is an error.
Expr parse_expression(std::string_view text);

/// basis names reserved for tokens, never valid as parameter names
bool is_basis_name(std::string_view id);

} // namespace lagext
