#include <doctest.h>

#include "lagext/cohomology.hpp"
#include "lagext/sampler.hpp"
#include "lagext/symplectic.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace lagext;
using testing::entry_connection;

namespace {

oracle::Tensor cocycle_tensor(const TwoCochain& a) {
  oracle::Tensor t(a.dim());
  for (std::size_t i = 0; i < t.n; ++i)
    for (std::size_t j = 0; j < t.n; ++j)
      for (std::size_t k = 0; k < t.n; ++k) t(i, j, k) = oracle::from(a(i, j, k));
  return t;
}

TwoCochain random_cocycle(const Subspace& z, RationalSampler& rng, std::size_t n) {
  Vector v(z.ambient_dim());
  for (const auto& b : z.basis()) axpy(v, rng.next(), b);
  return TwoCochain::unflatten(n, v);
}

} // namespace

TEST_CASE("extension of l_26 with zero cocycle") {
  const SymplecticLieAlgebra s = build_extension({entry_connection("l_26"), TwoCochain(4)});
  const LieAlgebra& g = s.algebra;
  CHECK(g.dim() == 8);
  // [e1,e2] = e3, [e1,e³] = -1/2 e², [e2,e³] = 1/2 e¹, nothing else
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i + 1; j < 8; ++j)
      if (!is_zero(g.bracket_basis(i, j))) ++nonzero;
  CHECK(nonzero == 3);
  CHECK(g.bracket_basis(0, 1) == unit_vector(8, 2));
  CHECK(g.bracket_basis(0, 6) == Rational(-1, 2) * unit_vector(8, 5));
  CHECK(g.bracket_basis(1, 6) == Rational(1, 2) * unit_vector(8, 4));
  CHECK(s.omega == standard_omega(4));
  CHECK(s.form(unit_vector(8, 0), unit_vector(8, 4)) == -1);
  CHECK(d_omega(s).empty());
  CHECK(is_symplectic(s));
}

TEST_CASE("extension of a_10 has a single bracket") {
  const SymplecticLieAlgebra s = build_extension({entry_connection("a_10"), TwoCochain(4)});
  CHECK(s.algebra.bracket_basis(3, 4) == Rational(-1) * unit_vector(8, 7));
  CHECK(nilpotency_class(s.algebra) == 2u);
}

TEST_CASE("extension brackets match the reference construction") {
  RationalSampler rng(17);
  for (const char* label : {"l_26", "t_1", "t_13", "l_35", "a_7"}) {
    INFO(label);
    const FlatConnection c = entry_connection(label);
    const TwoCochain a = random_cocycle(cocycle_bases(dual_representation(c)).z2, rng, 4);
    const SymplecticLieAlgebra s = build_extension({c, a});
    const oracle::Tensor ref = oracle::extension(oracle::christoffel(c),
                                                 oracle::brackets(c.base()), cocycle_tensor(a));
    CHECK(oracle::brackets(s.algebra) == ref);
    CHECK(oracle::jacobi(ref));
    CHECK(d_omega(s).empty() == oracle::closed(ref));
    CHECK(d_omega(s).empty() == check_bianchi(a));
  }
}

TEST_CASE("a cocycle violating the cyclic condition gives a residual of -1") {
  // α(e1,e2) = e³ on the zero connection of R^4; ω(e_i,e^i) = -1 makes the
  // residual at (e1,e2,e3) equal to ω(e3,[e1,e2]) = -1
  TwoCochain a(4);
  a.set(0, 1, 2, 1);
  CHECK_FALSE(check_bianchi(a));
  const SymplecticLieAlgebra s = build_extension({FlatConnection(abelian_algebra(4)), a});
  const auto v = d_omega(s);
  REQUIRE(v.size() == 1);
  CHECK(v[0].i == 0);
  CHECK(v[0].j == 1);
  CHECK(v[0].k == 2);
  CHECK(v[0].residual == -1);
}

TEST_CASE("build_extension rejects non-cocycles") {
  TwoCochain a(4);
  a.set(0, 1, 3, 1); // α(e1,e2) = e^4 is fine on l_26 ...
  CHECK_NOTHROW(build_extension({entry_connection("l_26"), a}));
  TwoCochain b(4);
  b.set(2, 3, 0, 1); // ... α(e3,e4) = e^1 is not
  CHECK_THROWS_AS(build_extension({entry_connection("l_26"), b}), PreconditionError);
}

TEST_CASE("ideal classification") {
  const SymplecticLieAlgebra s = build_extension({entry_connection("l_26"), TwoCochain(4)});
  const IdealVerdict dual = is_lagrangian_ideal(s, Subspace::coordinate(8, {4, 5, 6, 7}));
  CHECK(dual.kind == IdealKind::lagrangian);
  CHECK(dual.normal);
  CHECK(is_lagrangian_ideal(s, Subspace::coordinate(8, {0, 1, 2, 3})).kind ==
        IdealKind::not_ideal);
  CHECK(is_lagrangian_ideal(s, Subspace::coordinate(8, {4})).kind == IdealKind::isotropic);
  CHECK(is_lagrangian_ideal(s, Subspace::coordinate(8, {0, 4})).kind ==
        IdealKind::not_isotropic);
  CHECK(std::string(to_string(IdealKind::lagrangian)) == "lagrangian");
}

TEST_CASE("reduction by a central isotropic ideal") {
  const SymplecticLieAlgebra s = build_extension({entry_connection("l_26"), TwoCochain(4)});
  const Subspace j = Subspace::coordinate(8, {4});
  CHECK(symplectic_orthogonal(s, j).dim() == 7);
  const SymplecticLieAlgebra red = symplectic_reduction(s, j);
  CHECK(red.dim() == 6);
  CHECK(check_jacobi(red.algebra).empty());
  CHECK(is_symplectic(red));
  CHECK_THROWS_AS(symplectic_reduction(s, Subspace::coordinate(8, {0, 4})), PreconditionError);
}

TEST_CASE("quotient connection recovers the catalog row") {
  for (const char* label : {"l_26", "a_10", "t_8", "l_40"}) {
    INFO(label);
    const FlatConnection c = entry_connection(label);
    const SymplecticLieAlgebra s = build_extension({c, TwoCochain(4)});
    CHECK(induced_flat_connection(s, *s.lagrangian_ideal) == c);
  }
}

TEST_CASE("canonical connection is flat and torsion-free") {
  RationalSampler rng(23);
  for (const char* label : {"l_26", "a_10", "t_2"}) {
    const FlatConnection c = entry_connection(label);
    const TwoCochain a = random_cocycle(cocycle_bases(dual_representation(c)).z2l, rng, 4);
    const SymplecticLieAlgebra s = build_extension({c, a});
    const FlatConnection k = canonical_connection(s);
    CHECK(check_flat_torsion_free(k).ok());
    CHECK(oracle::flat(oracle::christoffel(k), oracle::brackets(s.algebra)));
    CHECK(oracle::torsion_free(oracle::christoffel(k), oracle::brackets(s.algebra)));
  }
}

TEST_CASE("nilpotency of extensions") {
  const NilpotencyVerdict v = extension_nilpotency({entry_connection("l_26"), TwoCochain(4)});
  CHECK(v.nilpotent);
  CHECK(v.nilpotency_class == 2u);
  CHECK(v.lcs_dims == std::vector<std::size_t>{8, 3, 0});
  CHECK(v.condition_holds);

  const FlatConnection a3 = entry_connection("a_3");
  const NilpotencyVerdict w = extension_nilpotency({a3, TwoCochain(4)});
  const SymplecticLieAlgebra s = build_extension({a3, TwoCochain(4)});
  CHECK(w.nilpotent);
  CHECK(w.lcs_dims == oracle::lcs_dims(oracle::brackets(s.algebra)));
}

TEST_CASE("equivalence map for a random sigma") {
  RationalSampler rng(31);
  const FlatConnection c = entry_connection("l_26");
  const DualRep r = dual_representation(c);
  OneCochain sigma(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k) sigma(i, k) = rng.next();
  const ExtensionTriple t1{c, TwoCochain(4)};
  const ExtensionTriple t2{c, TwoCochain(4) - coboundary_1(r, sigma)};
  const RatMatrix psi = equivalence_map_psi(t1, t2, sigma);
  CHECK(preserves_bracket(psi, build_extension(t1).algebra, build_extension(t2).algebra));
  CHECK_FALSE(pullback(psi, standard_omega(4)) == standard_omega(4));

  OneCochain sym(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = i; k < 4; ++k) sym(i, k) = sym(k, i) = rng.next();
  const ExtensionTriple t3{c, TwoCochain(4) - coboundary_1(r, sym)};
  const RatMatrix psi3 = equivalence_map_psi(t1, t3, sym);
  CHECK(pullback(psi3, standard_omega(4)) == standard_omega(4));

  CHECK_THROWS(equivalence_map_psi(t1, t1, sigma));
}

TEST_CASE("adjusted form for a matrix unit sigma") {
  // σ(e1) = e², σ_L = 0, zero connection on R^4. The form is the pullback
  // along x + ξ -> x + ξ - σ(x), so ω'(e1,e2) = ω(e1, -σ(e2)) + ω(-σ(e1), e2) = -1.
  OneCochain sigma(4);
  sigma(0, 1) = 1;
  const ExtensionTriple t{FlatConnection(abelian_algebra(4)), TwoCochain(4)};
  const RatMatrix w = adjusted_symplectic_form(t, sigma, OneCochain(4));
  CHECK(w(0, 1) == -1);
  CHECK(w(1, 0) == 1);
  CHECK(w.transpose() == Rational(-1) * w);
  RatMatrix rest = w;
  rest(0, 1) = 0;
  rest(1, 0) = 0;
  CHECK(rest == standard_omega(4));

  OneCochain sym(4);
  sym(0, 1) = sym(1, 0) = 1;
  CHECK(adjusted_symplectic_form(t, sym, sym) == standard_omega(4));
  CHECK_THROWS_AS(adjusted_symplectic_form(t, sigma, sigma), PreconditionError);
}
