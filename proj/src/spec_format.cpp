#include "lagext/spec_format.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include <fmt/format.h>

namespace lagext {

ParamValues AlgebraBlock::declared_values() const {
  ParamValues out;
  for (const auto& p : params)
    if (p.value) out.emplace_back(p.name, *p.value);
  return out;
}

std::string basis_name(const BasisRef& r) {
  return fmt::format("e{}{}", r.dual ? "^" : "", r.number);
}

std::size_t position(const AlgebraBlock& b, const BasisRef& r) {
  return r.dual ? b.dim / 2 + r.number - 1 : r.number - 1;
}

std::string format_terms(const std::vector<Term>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const Expr& c = terms[t].coeff;
    const std::string b = basis_name(terms[t].basis);
    const bool negative = (c.is_constant() && c.value.sign() < 0) || c.op == Expr::Op::neg;
    if (t > 0) out += negative ? " - " : " + ";
    if (t > 0 && negative) {
      const Expr mag = c.is_constant() ? Expr::constant(-c.value) : c.args[0];
      if (!(mag.is_constant() && mag.value == 1)) {
        const std::string s = mag.str();
        out += (mag.op == Expr::Op::add || mag.op == Expr::Op::sub) ? "(" + s + ")" : s;
        out += ' ';
      }
      out += b;
      continue;
    }
    if (c.is_constant() && c.value == 1) {
      out += b;
    } else if (c.is_constant() && c.value == -1) {
      out += "-" + b;
    } else {
      const std::string s = c.str();
      out += (c.op == Expr::Op::add || c.op == Expr::Op::sub) ? "(" + s + ")" : s;
      out += " " + b;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

enum class Context { bracket, connection, omega, cocycle_arg, cocycle_value };

bool is_keyword(std::string_view id) {
  static const char* const words[] = {"algebra", "dim",  "dual", "base",     "bracket",
                                      "connection", "omega", "cocycle", "param", "free",
                                      "positive", "nonzero", "positive_nonzero", "gt",
                                      "lt", "ne"};
  return std::find(std::begin(words), std::end(words), id) != std::end(words);
}

BasisRef parse_basis(Cursor& c, const AlgebraBlock& b, Context ctx) {
  c.skip_space();
  const std::size_t col = c.column();
  if (!c.at_basis()) c.fail("expected a basis vector e<k> or e^<k>");
  BasisRef r;
  c.accept('e');
  r.dual = c.rest().substr(0, 1) == "^";
  if (r.dual) c.pos_ += 1;
  const std::string_view rest = c.rest();
  std::size_t n = 0;
  while (n < rest.size() && std::isdigit(static_cast<unsigned char>(rest[n]))) ++n;
  if (n > 9) throw SpecError(c.line(), col, "basis index too large");
  r.number = std::stoul(std::string(rest.substr(0, n)));
  c.pos_ += n;

  const std::string tok = basis_name(r);
  const auto range_error = [&](std::size_t bound) {
    throw SpecError(c.line(), col,
                    fmt::format("index out of range: {} (allowed 1..{})", tok, bound));
  };
  if (r.number == 0) range_error(b.h_dim());
  if (ctx == Context::cocycle_value) {
    if (!r.dual) throw SpecError(c.line(), col, "cocycle values are written in e^<k>");
    if (r.number > b.dim) range_error(b.dim);
    return r;
  }
  if (ctx == Context::cocycle_arg && r.dual)
    throw SpecError(c.line(), col, "cocycle arguments are written in e<k>");
  if (b.dual) {
    if (r.number > b.dim / 2) range_error(b.dim / 2);
  } else {
    if (r.dual) throw SpecError(c.line(), col, "e^<k> needs a dual block (algebra ... dual)");
    if (r.number > b.dim) range_error(b.dim);
  }
  return r;
}

void check_declared(const Cursor& c, std::size_t col, const Expr& e, const AlgebraBlock& b) {
  std::set<std::string> used;
  e.collect_params(used);
  for (const auto& u : used) {
    const bool known = std::any_of(b.params.begin(), b.params.end(),
                                   [&](const ParamDecl& p) { return p.name == u; });
    if (!known) throw SpecError(c.line(), col, "undeclared parameter '" + u + "'");
  }
}

std::vector<Term> parse_terms(Cursor& c, const AlgebraBlock& b, Context ctx) {
  std::vector<Term> terms;
  if (c.peek() == '0') {
    Cursor probe = c;
    probe.pos_ += 1;
    if (probe.at_end()) {
      c = probe;
      return terms;
    }
  }
  bool first = true;
  while (true) {
    bool neg = false;
    if (!first) {
      if (c.at_end()) break;
      if (c.accept('+')) {
      } else if (c.accept('-')) {
        neg = true;
      } else {
        c.fail("expected '+' or '-' between terms");
      }
    }
    c.skip_space();
    const std::size_t col = c.column();
    Expr coeff = Expr::constant(1);
    if (first && c.peek() == '-' && [&] {
          Cursor probe = c;
          probe.accept('-');
          return probe.at_basis();
        }()) {
      c.accept('-');
      neg = true;
    }
    if (!c.at_basis()) coeff = parse_product(c);
    check_declared(c, col, coeff, b);
    if (neg) coeff = negate(std::move(coeff));
    terms.push_back({std::move(coeff), parse_basis(c, b, ctx)});
    first = false;
  }
  return terms;
}

void parse_pair_line(Cursor& c, AlgebraBlock& b, Context ctx, std::vector<SpecLine>& out) {
  SpecLine l;
  l.line = c.line();
  const Context arg = ctx == Context::cocycle_value ? Context::cocycle_arg : ctx;
  c.skip_space();
  const std::size_t col = c.column();
  l.x = parse_basis(c, b, arg);
  l.y = parse_basis(c, b, arg);
  if (!c.accept("->")) c.fail("expected '->'");
  if (ctx == Context::omega) {
    c.skip_space();
    const std::size_t ecol = c.column();
    Expr e = parse_expression(c);
    check_declared(c, ecol, e, b);
    l.terms.push_back({std::move(e), BasisRef{}});
  } else {
    l.terms = parse_terms(c, b, ctx);
  }
  if (!c.at_end()) c.fail("unexpected trailing input");
  if (l.x == l.y && ctx != Context::connection) {
    const bool zero = ctx == Context::omega ? l.terms[0].coeff == Expr::constant(0) : l.terms.empty();
    if (!zero) throw SpecError(c.line(), col, "antisymmetric entry on a repeated basis vector");
  }
  out.push_back(std::move(l));
}

void parse_param(Cursor& c, AlgebraBlock& b) {
  c.skip_space();
  const std::size_t col = c.column();
  ParamDecl p;
  p.name = c.identifier();
  if (is_basis_name(p.name) || is_keyword(p.name))
    throw SpecError(c.line(), col, "'" + p.name + "' is reserved and cannot name a parameter");
  for (const auto& q : b.params)
    if (q.name == p.name) throw SpecError(c.line(), col, "parameter declared twice");
  b.params.push_back(p); // visible to its own bounds only as an error below

  using Kind = ParamConstraint::Kind;
  while (!c.at_end() && c.peek() != '=') {
    c.skip_space();
    const std::size_t kcol = c.column();
    const std::string word = c.identifier();
    ParamConstraint k;
    if (word == "free") k.kind = Kind::free;
    else if (word == "positive") k.kind = Kind::positive;
    else if (word == "nonzero") k.kind = Kind::nonzero;
    else if (word == "positive_nonzero") k.kind = Kind::positive_nonzero;
    else if (word == "gt" || word == "lt" || word == "ne") {
      k.kind = word == "gt" ? Kind::gt : (word == "lt" ? Kind::lt : Kind::ne);
      c.skip_space();
      const std::size_t ecol = c.column();
      k.bound = parse_expression(c);
      check_declared(c, ecol, k.bound, b);
      std::set<std::string> used;
      k.bound.collect_params(used);
      if (used.count(p.name)) throw SpecError(c.line(), ecol, "a bound cannot use its own parameter");
    } else {
      throw SpecError(c.line(), kcol, "unknown constraint '" + word + "'");
    }
    b.params.back().constraints.push_back(std::move(k));
  }
  if (c.accept('=')) {
    c.skip_space();
    const std::size_t vcol = c.column();
    const Expr v = parse_expression(c);
    if (!v.is_constant()) throw SpecError(c.line(), vcol, "parameter value must be a constant");
    b.params.back().value = v.value;
  }
  if (!c.at_end()) c.fail("unexpected trailing input");
}

void parse_header(Cursor& c, SpecFile& f) {
  AlgebraBlock b;
  c.skip_space();
  const std::string_view r = c.rest();
  std::size_t n = 0;
  while (n < r.size() && !std::isspace(static_cast<unsigned char>(r[n]))) ++n;
  if (n == 0) c.fail("expected an algebra name");
  b.name = std::string(r.substr(0, n));
  c.pos_ += n;
  if (!c.accept("dim")) c.fail("expected 'dim'");
  c.skip_space();
  const std::string_view d = c.rest();
  n = 0;
  while (n < d.size() && std::isdigit(static_cast<unsigned char>(d[n]))) ++n;
  if (n == 0 || n > 4) c.fail("expected a dimension");
  b.dim = std::stoul(std::string(d.substr(0, n)));
  c.pos_ += n;
  if (c.accept("dual")) {
    b.dual = true;
    if (b.dim % 2 != 0) c.fail("a dual block needs an even dimension");
  }
  if (c.accept("base")) {
    c.skip_space();
    const std::string tag = c.identifier();
    if (tag != "a" && tag != "l" && tag != "t") c.fail("base must be a, l or t");
    if (b.dim != 4 || b.dual) c.fail("base algebras are 4-dimensional");
    b.base = tag[0];
  }
  if (!c.at_end()) c.fail("unexpected trailing input");
  f.blocks.push_back(std::move(b));
}

} // namespace

SpecFile parse_spec(std::string_view text) {
  SpecFile f;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    Cursor c(line, line_no);
    if (c.at_end()) {
      if (end == text.size()) break;
      continue;
    }
    c.skip_space();
    const std::size_t col = c.column();
    const std::string kw = c.identifier();
    if (kw == "algebra") {
      parse_header(c, f);
    } else {
      if (f.blocks.empty()) throw SpecError(line_no, col, "'" + kw + "' before any 'algebra' line");
      AlgebraBlock& b = f.blocks.back();
      if (kw == "bracket") parse_pair_line(c, b, Context::bracket, b.brackets);
      else if (kw == "connection") parse_pair_line(c, b, Context::connection, b.connection);
      else if (kw == "omega") parse_pair_line(c, b, Context::omega, b.omega);
      else if (kw == "cocycle") {
        if (b.dual) throw SpecError(line_no, col, "cocycles belong to a block on h, not a dual block");
        parse_pair_line(c, b, Context::cocycle_value, b.cocycle);
      } else if (kw == "param") parse_param(c, b);
      else throw SpecError(line_no, col, "unknown keyword '" + kw + "'");
    }
    if (end == text.size()) break;
  }
  return f;
}

namespace {

std::string constraint_str(const ParamConstraint& k) {
  using Kind = ParamConstraint::Kind;
  switch (k.kind) {
  case Kind::free: return "free";
  case Kind::positive: return "positive";
  case Kind::nonzero: return "nonzero";
  case Kind::positive_nonzero: return "positive_nonzero";
  case Kind::gt: return "gt " + k.bound.str();
  case Kind::lt: return "lt " + k.bound.str();
  case Kind::ne: return "ne " + k.bound.str();
  }
  return {};
}

void emit_pairs(std::string& out, const char* kw, const std::vector<SpecLine>& lines) {
  for (const auto& l : lines)
    out += fmt::format("{} {} {} -> {}\n", kw, basis_name(l.x), basis_name(l.y),
                       format_terms(l.terms));
}

} // namespace

std::string serialize(const AlgebraBlock& b) {
  std::string out = fmt::format("algebra {} dim {}", b.name, b.dim);
  if (b.dual) out += " dual";
  if (b.base) out += fmt::format(" base {}", *b.base);
  out += '\n';
  for (const auto& p : b.params) {
    out += "param " + p.name;
    for (const auto& k : p.constraints) out += " " + constraint_str(k);
    if (p.value) out += " = " + p.value->str();
    out += '\n';
  }
  emit_pairs(out, "bracket", b.brackets);
  emit_pairs(out, "connection", b.connection);
  for (const auto& l : b.omega)
    out += fmt::format("omega {} {} -> {}\n", basis_name(l.x), basis_name(l.y),
                       l.terms[0].coeff.str());
  emit_pairs(out, "cocycle", b.cocycle);
  return out;
}

std::string serialize(const SpecFile& f) {
  std::string out;
  for (std::size_t i = 0; i < f.blocks.size(); ++i) {
    if (i > 0) out += '\n';
    out += serialize(f.blocks[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<DuplicateCell> connection_duplicates(const AlgebraBlock& b) {
  std::map<std::pair<std::size_t, std::size_t>, std::vector<const SpecLine*>> cells;
  std::vector<std::pair<std::size_t, std::size_t>> order;
  for (const auto& l : b.connection) {
    const auto key = std::make_pair(position(b, l.x), position(b, l.y));
    auto& v = cells[key];
    if (v.empty()) order.push_back(key);
    v.push_back(&l);
  }
  std::vector<DuplicateCell> out;
  for (const auto& key : order) {
    const auto& v = cells[key];
    if (v.size() < 2) continue;
    DuplicateCell d{key.first, key.second, {}};
    for (const auto* l : v) d.claims.push_back(l->terms);
    out.push_back(std::move(d));
  }
  return out;
}

bool satisfies(const AlgebraBlock& b, const ParamValues& values) {
  using Kind = ParamConstraint::Kind;
  for (const auto& p : b.params) {
    const auto it = std::find_if(values.begin(), values.end(),
                                 [&](const auto& kv) { return kv.first == p.name; });
    if (it == values.end()) return false;
    const Rational& v = it->second;
    for (const auto& k : p.constraints) {
      try {
        switch (k.kind) {
        case Kind::free: break;
        case Kind::positive:
        case Kind::positive_nonzero:
          if (v.sign() <= 0) return false;
          break;
        case Kind::nonzero:
          if (v.is_zero()) return false;
          break;
        case Kind::gt:
          if (!(v > k.bound.eval(values))) return false;
          break;
        case Kind::lt:
          if (!(v < k.bound.eval(values))) return false;
          break;
        case Kind::ne:
          if (v == k.bound.eval(values)) return false;
          break;
        }
      } catch (const Error&) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// Adds each line as an antisymmetric entry into an n^3 tensor.
void fill_antisymmetric(const AlgebraBlock& b, const std::vector<SpecLine>& lines,
                        const ParamValues& values, std::size_t n, bool cocycle,
                        std::vector<Rational>& t, const char* what) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& l : lines) {
    const std::size_t i = cocycle ? l.x.number - 1 : position(b, l.x);
    const std::size_t j = cocycle ? l.y.number - 1 : position(b, l.y);
    if (!seen.insert({std::min(i, j), std::max(i, j)}).second)
      throw Error(fmt::format("line {}: {} entry ({}, {}) given twice", l.line, what,
                              basis_name(l.x), basis_name(l.y)));
    for (const auto& term : l.terms) {
      const std::size_t k = cocycle ? term.basis.number - 1 : position(b, term.basis);
      const Rational v = term.coeff.eval(values);
      t[(i * n + j) * n + k] += v;
      t[(j * n + i) * n + k] -= v;
    }
  }
}

ParamValues merged(const AlgebraBlock& b, const ParamValues& values) {
  ParamValues out = values;
  for (const auto& [name, v] : b.declared_values())
    if (std::none_of(out.begin(), out.end(), [&](const auto& kv) { return kv.first == name; }))
      out.emplace_back(name, v);
  return out;
}

} // namespace

LieAlgebra to_algebra(const AlgebraBlock& b, const ParamValues& values) {
  const ParamValues vals = merged(b, values);
  const std::size_t n = b.dim;
  std::vector<Rational> t(n * n * n);
  fill_antisymmetric(b, b.brackets, vals, n, false, t, "bracket");
  LieAlgebra l(b.name, n, std::move(t));
  if (b.base) {
    const LieAlgebra std_base = base_algebra(*b.base);
    if (b.brackets.empty()) return std_base.renamed(b.name);
    if (!(std_base == l))
      throw Error(fmt::format("brackets of '{}' disagree with base {}", b.name, *b.base));
  }
  return l;
}

FlatConnection to_connection(const AlgebraBlock& b, const ParamValues& values) {
  const auto dups = connection_duplicates(b);
  if (!dups.empty())
    throw Error(fmt::format("connection of '{}' assigns ({}, {}) more than once", b.name,
                            basis_name({dups[0].i + 1, false}), basis_name({dups[0].j + 1, false})));
  const ParamValues vals = merged(b, values);
  LieAlgebra base = to_algebra(b, vals);
  const std::size_t n = b.dim;
  std::vector<Rational> g(n * n * n);
  for (const auto& l : b.connection) {
    const std::size_t i = position(b, l.x);
    const std::size_t j = position(b, l.y);
    for (const auto& term : l.terms) g[(i * n + j) * n + position(b, term.basis)] += term.coeff.eval(vals);
  }
  FlatConnection::Params used;
  for (const auto& p : b.params)
    for (const auto& [name, v] : vals)
      if (name == p.name) used.emplace_back(name, v);
  return FlatConnection(std::move(base), std::move(g), std::move(used));
}

TwoCochain to_cocycle(const AlgebraBlock& b, const ParamValues& values) {
  const ParamValues vals = merged(b, values);
  const std::size_t n = b.dim;
  std::vector<Rational> t(n * n * n);
  fill_antisymmetric(b, b.cocycle, vals, n, true, t, "cocycle");
  TwoCochain a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) a.set(i, j, k, t[(i * n + j) * n + k]);
  return a;
}

RatMatrix to_omega(const AlgebraBlock& b, const ParamValues& values) {
  const ParamValues vals = merged(b, values);
  RatMatrix m(b.dim, b.dim);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& l : b.omega) {
    const std::size_t i = position(b, l.x);
    const std::size_t j = position(b, l.y);
    if (!seen.insert({std::min(i, j), std::max(i, j)}).second)
      throw Error(fmt::format("line {}: omega entry given twice", l.line));
    const Rational v = l.terms[0].coeff.eval(vals);
    m(i, j) += v;
    m(j, i) -= v;
  }
  return m;
}

namespace {

BasisRef ref_at(std::size_t pos, std::size_t dim, bool dual) {
  if (dual && pos >= dim / 2) return {pos - dim / 2 + 1, true};
  return {pos + 1, false};
}

std::vector<Term> terms_of(const Vector& v, std::size_t dim, bool dual) {
  std::vector<Term> out;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) out.push_back({Expr::constant(v[k]), ref_at(k, dim, dual)});
  return out;
}

AlgebraBlock block_of(const LieAlgebra& l, bool dual) {
  AlgebraBlock b;
  b.name = l.name().empty() ? "g" : l.name();
  // names become a single whitespace-free token
  for (auto& ch : b.name)
    if (std::isspace(static_cast<unsigned char>(ch))) ch = '_';
  b.dim = l.dim();
  b.dual = dual;
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i + 1; j < l.dim(); ++j) {
      const Vector v = l.bracket_basis(i, j);
      if (is_zero(v)) continue;
      b.brackets.push_back({ref_at(i, l.dim(), dual), ref_at(j, l.dim(), dual),
                            terms_of(v, l.dim(), dual), 0});
    }
  return b;
}

} // namespace

AlgebraBlock from_algebra(const LieAlgebra& l) { return block_of(l, false); }

AlgebraBlock from_connection(const FlatConnection& c) {
  AlgebraBlock b = block_of(c.base(), false);
  const std::size_t n = c.dim();
  for (const auto& [name, v] : c.params()) b.params.push_back({name, {}, v});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector v(n);
      for (std::size_t k = 0; k < n; ++k) v[k] = c.gamma(i, j, k);
      if (is_zero(v)) continue;
      b.connection.push_back({{i + 1, false}, {j + 1, false}, terms_of(v, n, false), 0});
    }
  return b;
}

AlgebraBlock from_symplectic(const SymplecticLieAlgebra& s, bool dual) {
  if (dual && s.dim() % 2 != 0) throw Error("a dual layout needs an even dimension");
  AlgebraBlock b = block_of(s.algebra, dual);
  const std::size_t m = s.dim();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (!s.omega(i, j).is_zero())
        b.omega.push_back({ref_at(i, m, dual), ref_at(j, m, dual),
                           {{Expr::constant(s.omega(i, j)), BasisRef{}}}, 0});
  return b;
}

void add_cocycle(AlgebraBlock& b, const TwoCochain& alpha) {
  const std::size_t n = alpha.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Term> t;
      for (std::size_t k = 0; k < n; ++k)
        if (!alpha(i, j, k).is_zero()) t.push_back({Expr::constant(alpha(i, j, k)), {k + 1, true}});
      if (!t.empty()) b.cocycle.push_back({{i + 1, false}, {j + 1, false}, std::move(t), 0});
    }
}

} // namespace lagext
