#include "lagext/expression.hpp"

#include <cctype>

#include <fmt/format.h>

namespace lagext {

Expr Expr::constant(Rational v) {
  Expr e;
  e.value = std::move(v);
  return e;
}

Expr Expr::param(std::string name) {
  Expr e;
  e.op = Op::param;
  e.name = std::move(name);
  return e;
}

Expr negate(Expr e) {
  if (e.is_constant()) return Expr::constant(-e.value);
  Expr n;
  n.op = Expr::Op::neg;
  n.args.push_back(std::move(e));
  return n;
}

namespace {

Rational apply(Expr::Op op, const Rational& a, const Rational& b) {
  switch (op) {
  case Expr::Op::add: return a + b;
  case Expr::Op::sub: return a - b;
  case Expr::Op::mul: return a * b;
  case Expr::Op::div:
    if (b.is_zero()) throw Error("division by zero in coefficient expression");
    return a / b;
  default: throw Error("not a binary operator");
  }
}

Expr make_pow(Expr base, long exponent) {
  if (base.is_constant()) {
    if (base.value.is_zero() && exponent < 0) throw Error("zero raised to a negative power");
    return Expr::constant(base.value.pow(exponent));
  }
  Expr e;
  e.op = Expr::Op::pow;
  e.exponent = exponent;
  e.args.push_back(std::move(base));
  return e;
}

int precedence(const Expr& e) {
  switch (e.op) {
  case Expr::Op::add:
  case Expr::Op::sub: return 1;
  case Expr::Op::mul:
  case Expr::Op::div: return 2;
  case Expr::Op::neg: return 3;
  case Expr::Op::pow: return 4;
  case Expr::Op::param: return 5;
  case Expr::Op::constant:
    if (!e.value.is_integer()) return 2;
    return e.value.sign() < 0 ? 3 : 5;
  }
  return 0;
}

std::string wrap(const Expr& e, int need) {
  std::string s = e.str();
  return precedence(e) < need ? "(" + s + ")" : s;
}

} // namespace

Expr make_binary(Expr::Op op, Expr a, Expr b) {
  if (a.is_constant() && b.is_constant()) return Expr::constant(apply(op, a.value, b.value));
  Expr e;
  e.op = op;
  e.args.push_back(std::move(a));
  e.args.push_back(std::move(b));
  return e;
}

Rational Expr::eval(const ParamValues& params) const {
  switch (op) {
  case Op::constant: return value;
  case Op::param:
    for (const auto& [n, v] : params)
      if (n == name) return v;
    throw Error("no value for parameter '" + name + "'");
  case Op::neg: return -args[0].eval(params);
  case Op::pow: {
    const Rational b = args[0].eval(params);
    if (b.is_zero() && exponent < 0) throw Error("zero raised to a negative power");
    return b.pow(exponent);
  }
  default: return apply(op, args[0].eval(params), args[1].eval(params));
  }
}

void Expr::collect_params(std::set<std::string>& out) const {
  if (op == Op::param) out.insert(name);
  for (const auto& a : args) a.collect_params(out);
}

std::string Expr::str() const {
  switch (op) {
  case Op::constant: return value.str();
  case Op::param: return name;
  case Op::neg: return "-" + wrap(args[0], 3);
  case Op::pow: return wrap(args[0], 5) + "^" + std::to_string(exponent);
  case Op::add: return wrap(args[0], 1) + " + " + wrap(args[1], 2);
  case Op::sub: return wrap(args[0], 1) + " - " + wrap(args[1], 2);
  case Op::mul: return wrap(args[0], 2) + "*" + wrap(args[1], 3);
  case Op::div: return wrap(args[0], 2) + "/" + wrap(args[1], 3);
  }
  return {};
}

// ---------------------------------------------------------------------------

SpecError::SpecError(std::size_t line, std::size_t column, const std::string& what)
    : Error(fmt::format("line {}, column {}: {}", line, column, what)), line_(line),
      column_(column) {}

void Cursor::skip_space() {
  while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
}

bool Cursor::at_end() {
  skip_space();
  return pos_ >= text_.size();
}

char Cursor::peek() {
  skip_space();
  return pos_ < text_.size() ? text_[pos_] : '\0';
}

bool Cursor::accept(char c) {
  if (peek() != c) return false;
  ++pos_;
  return true;
}

bool Cursor::accept(std::string_view word) {
  skip_space();
  if (!word.empty() && (std::isalpha(static_cast<unsigned char>(word[0])) || word[0] == '_')) {
    if (peek_identifier() != word) return false;
    pos_ += word.size();
    return true;
  }
  if (text_.substr(pos_, word.size()) != word) return false;
  pos_ += word.size();
  return true;
}

bool is_basis_name(std::string_view id) {
  if (id.size() < 2 || id[0] != 'e') return false;
  for (std::size_t i = 1; i < id.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
  return true;
}

bool Cursor::at_basis() {
  skip_space();
  const std::string_view r = rest();
  if (r.size() >= 3 && r[0] == 'e' && r[1] == '^' && std::isdigit(static_cast<unsigned char>(r[2])))
    return true;
  return is_basis_name(peek_identifier());
}

std::string_view Cursor::peek_identifier() {
  skip_space();
  const std::string_view r = rest();
  if (r.empty() || !(std::isalpha(static_cast<unsigned char>(r[0])) || r[0] == '_')) return {};
  std::size_t n = 1;
  while (n < r.size() && (std::isalnum(static_cast<unsigned char>(r[n])) || r[n] == '_')) ++n;
  return r.substr(0, n);
}

std::string Cursor::identifier() {
  const std::string_view id = peek_identifier();
  if (id.empty()) fail("expected a name");
  pos_ += id.size();
  return std::string(id);
}

void Cursor::fail(const std::string& what) const { throw SpecError(line_, column(), what); }

// ---------------------------------------------------------------------------

namespace {

Expr parse_unary(Cursor& c);

Expr parse_atom(Cursor& c) {
  const char ch = c.peek();
  if (ch == '(') {
    c.accept('(');
    Expr e = parse_expression(c);
    if (!c.accept(')')) c.fail("expected ')'");
    return e;
  }
  if (std::isdigit(static_cast<unsigned char>(ch))) {
    const std::string_view r = c.rest();
    std::size_t n = 0;
    while (n < r.size() && std::isdigit(static_cast<unsigned char>(r[n]))) ++n;
    const Rational v = Rational::parse(r.substr(0, n));
    c.pos_ += n;
    return Expr::constant(v);
  }
  if (c.at_basis()) c.fail("expected a coefficient, found a basis vector");
  if (!c.peek_identifier().empty()) return Expr::param(c.identifier());
  if (ch == '\0') c.fail("unexpected end of line in expression");
  c.fail(std::string("unexpected character '") + ch + "' in expression");
}

Expr parse_power(Cursor& c) {
  Expr base = parse_atom(c);
  if (!c.accept('^')) return base;
  const bool neg = c.accept('-');
  const std::string_view r = c.rest();
  std::size_t n = 0;
  while (n < r.size() && std::isdigit(static_cast<unsigned char>(r[n]))) ++n;
  if (n == 0 || n > 9) c.fail("expected a small integer exponent");
  const long k = std::stol(std::string(r.substr(0, n)));
  c.pos_ += n;
  try {
    return make_pow(std::move(base), neg ? -k : k);
  } catch (const SpecError&) {
    throw;
  } catch (const Error& e) {
    c.fail(e.what());
  }
}

Expr parse_unary(Cursor& c) {
  if (c.accept('-')) return negate(parse_unary(c));
  return parse_power(c);
}

Expr binary_or_fail(Cursor& c, Expr::Op op, Expr a, Expr b) {
  try {
    return make_binary(op, std::move(a), std::move(b));
  } catch (const Error& e) {
    c.fail(e.what());
  }
}

} // namespace

Expr parse_product(Cursor& c) {
  Expr e = parse_unary(c);
  while (true) {
    if (c.accept('*')) {
      e = binary_or_fail(c, Expr::Op::mul, std::move(e), parse_unary(c));
    } else if (c.peek() == '/') {
      c.accept('/');
      e = binary_or_fail(c, Expr::Op::div, std::move(e), parse_unary(c));
    } else {
      return e;
    }
  }
}

Expr parse_expression(Cursor& c) {
  Expr e = parse_product(c);
  while (true) {
    if (c.peek() == '-' && c.rest().substr(0, 2) != "->") {
      c.accept('-');
      e = binary_or_fail(c, Expr::Op::sub, std::move(e), parse_product(c));
    } else if (c.accept('+')) {
      e = binary_or_fail(c, Expr::Op::add, std::move(e), parse_product(c));
    } else {
      return e;
    }
  }
}

Expr parse_expression(std::string_view text) {
  Cursor c(text, 1);
  Expr e = parse_expression(c);
  if (!c.at_end()) c.fail("unexpected trailing input");
  return e;
}

} // namespace lagext
