#include <doctest.h>

#include "lagext/catalog.hpp"
#include "lagext/spec_format.hpp"

using namespace lagext;

namespace {

std::pair<std::size_t, std::size_t> error_at(const std::string& text) {
  try {
    parse_spec(text);
  } catch (const SpecError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

} // namespace

TEST_CASE("expressions print with minimal parentheses") {
  CHECK(parse_expression("(t + 1)/4").str() == "(t + 1)/4");
  CHECK(parse_expression("mu/3*(2*mu + 1)").str() == "mu/3*(2*mu + 1)");
  CHECK(parse_expression("-(mu + 1)/2").str() == "-(mu + 1)/2");
  CHECK(parse_expression("t - (1 - t)").str() == "t - (1 - t)");
  CHECK(parse_expression("2*3 - 1/2").str() == "11/2");
  CHECK(parse_expression("(-t)^2").str() == "(-t)^2");
}

TEST_CASE("expressions evaluate exactly") {
  const Expr e = parse_expression("(mu1 - mu)/(mu - 1)");
  CHECK(e.eval({{"mu", 3}, {"mu1", 1}}) == Rational(-1));
  CHECK_THROWS_AS((void)e.eval({{"mu", 1}, {"mu1", 2}}), Error);
  CHECK_THROWS_AS((void)e.eval({{"mu", 3}}), Error);
  CHECK(parse_expression("t^2 - 3*t").eval({{"t", Rational(1, 2)}}) == Rational(-5, 4));
  for (const char* s : {"(t + 1)/4", "-(mu + 1)/2", "mu/3*(2*mu + 1)", "t^3/2 - t", "-t^2"}) {
    const Expr a = parse_expression(s);
    CHECK(parse_expression(a.str()) == a);
  }
}

TEST_CASE("a small block parses and materializes") {
  const char* text = R"(# comment
algebra x dim 4 base l
param t positive = 2
connection e1 e2 -> t/4 e3 + e4
connection e2 e1 -> (t/4 - 1) e3 + e4
)";
  const SpecFile f = parse_spec(text);
  REQUIRE(f.blocks.size() == 1);
  const AlgebraBlock& b = f.blocks[0];
  CHECK(b.base == 'l');
  CHECK(b.connection.size() == 2);
  CHECK(b.connection[0].line == 4);
  const FlatConnection c = to_connection(b, b.declared_values());
  CHECK(c.gamma(0, 1, 2) == Rational(1, 2));
  CHECK(c.gamma(1, 0, 2) == Rational(-1, 2));
  CHECK(c.gamma(0, 1, 3) == 1);
  CHECK(check_flat_torsion_free(c).torsion_free());
  CHECK_FALSE(satisfies(b, {{"t", -1}}));
}

TEST_CASE("serialization round-trips every catalog block") {
  const SpecFile f = parse_spec(table1_text());
  CHECK(f.blocks.size() == 70);
  CHECK(parse_spec(serialize(f)) == f);
  CHECK(serialize(parse_spec(serialize(f))) == serialize(f));
}

TEST_CASE("in-memory structures round-trip through text") {
  const FlatConnection c = std::get<FlatConnection>(
      instantiate(*find_entry("t_13"), sample_parameters(*find_entry("t_13"), 1, 0)[0]));
  const AlgebraBlock b = from_connection(c);
  const AlgebraBlock back = parse_spec(serialize(b)).blocks.at(0);
  CHECK(to_connection(back, back.declared_values()) == c);

  const SymplecticLieAlgebra s = build_extension({c, TwoCochain(4)});
  const AlgebraBlock sb = parse_spec(serialize(from_symplectic(s, true))).blocks.at(0);
  CHECK(sb.dual);
  CHECK(to_algebra(sb, sb.declared_values()) == s.algebra.renamed(sb.name));
  CHECK(to_omega(sb, {}) == s.omega);

  AlgebraBlock withc = from_connection(c);
  TwoCochain a(4);
  a.set(0, 1, 3, Rational(2, 3));
  add_cocycle(withc, a);
  const AlgebraBlock cb = parse_spec(serialize(withc)).blocks.at(0);
  CHECK(to_cocycle(cb, cb.declared_values()) == a);
}

TEST_CASE("diagnostics carry line and column") {
  CHECK(error_at("algebra x dim 4\nbracket e1 e5 -> e3\n") == std::pair<std::size_t, std::size_t>{2, 12});
  CHECK(error_at("algebra x dim 4\nbracket e1 e2 => e3\n") == std::pair<std::size_t, std::size_t>{2, 15});
  CHECK(error_at("algebra x dim 4\nconnection e1 e2 -> s e3\n") ==
        std::pair<std::size_t, std::size_t>{2, 21});
  CHECK(error_at("bracket e1 e2 -> e3\n") == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK(error_at("algebra x dim 4\nparam t sometimes\n") == std::pair<std::size_t, std::size_t>{2, 9});
  CHECK(error_at("algebra x dim 4\nbracket e1 e^2 -> e3\n").first == 2);
  CHECK(error_at("algebra x dim 3 base l\n").first == 1);
  CHECK(error_at("algebra x dim 4\nparam t gt t\n").first == 2);
  CHECK(error_at("algebra x dim 4\nbracket e1 e1 -> e3\n").first == 2);
  CHECK(error_at("algebra x dim 4\nfrobnicate e1 e2 -> e3\n") ==
        std::pair<std::size_t, std::size_t>{2, 1});
}

TEST_CASE("duplicate connection cells are reported, not merged") {
  const char* text = "algebra x dim 4 base a\nconnection e2 e2 -> e3\nconnection e2 e2 -> e4\n";
  const AlgebraBlock b = parse_spec(text).blocks.at(0);
  const auto d = connection_duplicates(b);
  REQUIRE(d.size() == 1);
  CHECK(d[0].i == 1);
  CHECK(d[0].j == 1);
  CHECK(d[0].claims.size() == 2);
  CHECK_THROWS_AS(to_connection(b, {}), Error);
}

TEST_CASE("constraint kinds") {
  const char* text = R"(algebra x dim 4 base a
param mu ne 0 ne 1
param nu gt 1/2 lt mu
param k positive_nonzero
)";
  const AlgebraBlock b = parse_spec(text).blocks.at(0);
  CHECK(satisfies(b, {{"mu", 2}, {"nu", 1}, {"k", 3}}));
  CHECK_FALSE(satisfies(b, {{"mu", 1}, {"nu", Rational(3, 4)}, {"k", 3}}));
  CHECK_FALSE(satisfies(b, {{"mu", 2}, {"nu", Rational(1, 2)}, {"k", 3}}));
  CHECK_FALSE(satisfies(b, {{"mu", 2}, {"nu", 1}, {"k", 0}}));
  CHECK_FALSE(satisfies(b, {{"mu", 2}, {"nu", 1}}));
}
