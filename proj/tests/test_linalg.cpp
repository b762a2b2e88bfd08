#include <doctest.h>

#include "lagext/error.hpp"
#include "lagext/linalg.hpp"
#include "lagext/sampler.hpp"
#include "oracle.hpp"

using namespace lagext;

TEST_CASE("rational literals normalize and round-trip") {
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse("-0/7").is_zero());
  CHECK(Rational::parse("+5").str() == "5");
  CHECK(Rational(-2, 6).str() == "-1/3");
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("1.5"), Error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
}

TEST_CASE("large values stay exact") {
  Rational x(1, 3);
  for (int i = 0; i < 200; ++i) x = x * Rational(7, 5) + Rational(1, 11);
  Rational y = x;
  for (int i = 0; i < 200; ++i) y = (y - Rational(1, 11)) / Rational(7, 5);
  CHECK(y == Rational(1, 3));
}

TEST_CASE("echelon form is fully reduced with leftmost pivots") {
  const RatMatrix m{{0, 2, 4}, {1, 1, 1}, {2, 4, 6}};
  const Echelon e = row_reduce(m);
  CHECK(e.pivots == std::vector<std::size_t>{0, 1});
  CHECK(e.reduced == RatMatrix{{1, 0, -1}, {0, 1, 2}, {0, 0, 0}});
  CHECK(rank(m) == 2);
}

TEST_CASE("kernel, solve and inverse") {
  const RatMatrix m{{1, 2, 3}, {2, 4, 6}};
  const Subspace k = kernel_basis(m);
  CHECK(k.dim() == 2);
  for (const auto& v : k.basis()) CHECK(is_zero(m * v));

  const auto x = solve_linear(m, Vector{1, 2});
  REQUIRE(x);
  CHECK(*x == Vector{1, 0, 0}); // free variables set to 0
  CHECK_FALSE(solve_linear(m, Vector{1, 3}));

  const RatMatrix a{{2, 1}, {5, 3}};
  CHECK(inverse(a) * a == RatMatrix::identity(2));
  CHECK_THROWS(inverse(RatMatrix{{1, 2}, {2, 4}}));
  CHECK(inverse(RatMatrix(0, 0)).rows() == 0);
}

TEST_CASE("subspace sum, intersection and quotient") {
  const Subspace a = Subspace::coordinate(4, {0, 1});
  const Subspace b(4, {Vector{0, 1, 1, 0}, Vector{0, 0, 0, 1}});
  CHECK((a + b).dim() == 4);
  CHECK(intersection(a, b).dim() == 0);
  const Subspace c(4, {Vector{1, 1, 0, 0}});
  CHECK(intersection(a, c) == c);
  CHECK(quotient_basis(a, c).size() == 1);
  CHECK_THROWS_AS(quotient_basis(c, a), PreconditionError);
}

TEST_CASE("nilpotent matrices and traces") {
  CHECK(is_nilpotent(RatMatrix{{0, 1, 5}, {0, 0, 2}, {0, 0, 0}}));
  CHECK_FALSE(is_nilpotent(RatMatrix{{0, 1}, {1, 0}}));
  CHECK(is_nilpotent(RatMatrix{{2, -4}, {1, -2}}));
  CHECK(trace(RatMatrix{{1, 9}, {9, Rational(1, 2)}}) == Rational(3, 2));
}

TEST_CASE("rank agrees with the reference elimination on random matrices") {
  RationalSampler s(42);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + s.index(6), cols = 1 + s.index(6);
    RatMatrix m(rows, cols);
    oracle::Mat ref(rows, std::vector<oracle::Q>(cols));
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) {
        // sparse entries so that deficient ranks occur
        m(r, c) = s.index(3) == 0 ? s.next() : Rational(0);
        ref[r][c] = oracle::from(m(r, c));
      }
    CHECK(rank(m) == oracle::rank(ref));
    CHECK(kernel_basis(m).dim() == cols - rank(m));
  }
}

TEST_CASE("sampler is reproducible") {
  RationalSampler a(7), b(7);
  for (int i = 0; i < 20; ++i) CHECK(a.next() == b.next());
  RationalSampler c(7);
  for (int i = 0; i < 20; ++i) CHECK_FALSE(c.next_nonzero().is_zero());
}
