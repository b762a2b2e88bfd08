#include <doctest.h>

#include "lagext/lie_algebra.hpp"
#include "oracle.hpp"

using namespace lagext;

namespace {
std::vector<std::size_t> dims(const std::vector<Subspace>& s) {
  std::vector<std::size_t> out;
  for (const auto& x : s) out.push_back(x.dim());
  return out;
}
} // namespace

TEST_CASE("base algebras satisfy Jacobi") {
  for (char tag : {'a', 'l', 't'}) {
    CHECK(check_jacobi(base_algebra(tag)).empty());
    CHECK(oracle::jacobi(oracle::brackets(base_algebra(tag))));
  }
}

TEST_CASE("Jacobi violation is located") {
  // l with an extra [e1,e3] = e1
  const LieAlgebra bad = LieAlgebra::from_brackets("bad", 4, {{0, 1, 1, 2}, {0, 2, 1, 0}});
  const auto v = check_jacobi(bad);
  REQUIRE_FALSE(v.empty());
  CHECK(v.front().i == 0);
  CHECK(v.front().j == 1);
  CHECK(v.front().k == 2);
  CHECK(v.front().residual == Vector{0, 0, 1, 0});
  CHECK_FALSE(oracle::jacobi(oracle::brackets(bad)));
}

TEST_CASE("lower central series") {
  CHECK(dims(lower_central_series(base_algebra_t())) == std::vector<std::size_t>{4, 2, 1, 0});
  CHECK(dims(lower_central_series(base_algebra_l())) == std::vector<std::size_t>{4, 1, 0});
  CHECK(dims(lower_central_series(base_algebra_a())) == std::vector<std::size_t>{4, 0});
  for (char tag : {'a', 'l', 't'})
    CHECK(dims(lower_central_series(base_algebra(tag))) ==
          oracle::lcs_dims(oracle::brackets(base_algebra(tag))));
}

TEST_CASE("fingerprints separate the base algebras") {
  const Fingerprint a = fingerprint(base_algebra_a());
  const Fingerprint l = fingerprint(base_algebra_l());
  const Fingerprint t = fingerprint(base_algebra_t());
  CHECK(a.nilpotency_class == 1u);
  CHECK(l.nilpotency_class == 2u);
  CHECK(t.nilpotency_class == 3u);
  CHECK(l.center_dim == 2);
  CHECK_FALSE(l.is_filiform);
  CHECK(t.is_filiform);
  CHECK_FALSE(a == l);
  CHECK_FALSE(l == t);
  CHECK_FALSE(a == t);
}

TEST_CASE("ideals and quotients") {
  const LieAlgebra l = base_algebra_l();
  const Subspace z = Subspace::coordinate(4, {2, 3});
  CHECK(center(l) == z);
  CHECK(is_ideal(l, z));
  CHECK_FALSE(is_ideal(l, Subspace::coordinate(4, {0})));
  CHECK(is_subalgebra(l, Subspace::coordinate(4, {0})));
  const LieAlgebra q = quotient_algebra(l, z);
  CHECK(q.dim() == 2);
  CHECK(q.is_abelian());
}

TEST_CASE("derivations of the abelian algebra are all endomorphisms") {
  CHECK(derivations(abelian_algebra(3)).dim() == 9);
  CHECK(derived_series(base_algebra_t()).back().dim() == 0);
}

TEST_CASE("change of basis preserves the fingerprint") {
  const RatMatrix p{{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 1, 1}};
  const LieAlgebra t2 = change_basis(base_algebra_t(), p);
  CHECK(check_jacobi(t2).empty());
  CHECK(fingerprint(t2) == fingerprint(base_algebra_t()));
}
