#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "birkit/birational.hpp"
#include "birkit/rng.hpp"

using namespace birkit;

namespace {

Poly P(const RingPtr& R, const std::string& s) { return poly_parse(s, R); }

VarietyPtr conic() {
  RingPtr R = make_ring(FieldSpec::rationals(), {"x", "y", "z"});
  return make_variety(R, make_ideal(R, {"y^2 - x*z"}));
}

VarietyPtr cusp() {
  RingPtr R = make_ring(FieldSpec::rationals(), {"x", "y", "z"});
  return make_variety(R, make_ideal(R, {"y^3 - x^2*z"}));
}

VarietyPtr scroll() {
  RingPtr R = make_ring(FieldSpec::rationals(), {"a0", "a1", "a2", "a3", "a4"});
  return make_variety(R, make_ideal(R, {"a0*a3 - a1*a2", "a0*a4 - a1*a3", "a2*a4 - a3^2"}));
}

VarietyPtr proj_plane() {
  RingPtr R = make_ring(FieldSpec::rationals(), {"x", "y", "z"});
  return make_variety(R, make_ideal(R, std::vector<Poly>{}));
}

VarietyPtr proj_line() {
  RingPtr R = make_ring(FieldSpec::rationals(), {"x", "y"});
  return make_variety(R, make_ideal(R, std::vector<Poly>{}));
}

RationalMap M(const VarietyPtr& V, std::initializer_list<const char*> ss) {
  std::vector<std::string> v(ss.begin(), ss.end());
  return make_map(V, v);
}

}  // namespace

TEST_CASE("well-definedness") {
  auto V1 = conic();
  CHECK(is_well_defined(M(V1, {"z", "y", "x"})));
  CHECK(!is_well_defined(M(V1, {"x", "y", "x"})));
  auto V2 = cusp();
  CHECK(is_well_defined(M(V2, {"x*z", "y^2", "x^2"})));
  auto S = scroll();
  CHECK(is_well_defined(M(S, {"a0*a1", "a0*a2", "a1^2", "a0*a3", "a2^2"})));
}

TEST_CASE("same map") {
  auto V2 = cusp();
  RationalMap s2 = M(V2, {"y*z", "x*z", "x*y"});
  RationalMap tau = M(V2, {"x*z", "y^2", "x^2"});
  CHECK(same_map(s2, tau));
  CHECK(same_map(tau, s2));  // symmetric
  CHECK(same_map(s2, s2));   // reflexive

  auto V1 = conic();
  CHECK(same_map(M(V1, {"y*z", "x*z", "x*y"}), M(V1, {"z", "y", "x"})));
  CHECK(!same_map(M(V1, {"z", "y", "x"}), M(V1, {"x", "y", "z"})));

  // transitive across three representatives of one map
  RationalMap a = M(V1, {"y*z", "x*z", "x*y"});
  RationalMap b = M(V1, {"z", "y", "x"});
  RationalMap c = M(V1, {"y*z + y^2 - x*z", "x*z", "x*y"});
  CHECK(same_map(a, b));
  CHECK(same_map(b, c));
  CHECK(same_map(a, c));

  // comparing maps on different varieties is rejected
  CHECK_THROWS_AS(same_map(a, M(cusp(), {"y*z", "x*z", "x*y"})), Error);
}

TEST_CASE("map construction rejects bad input") {
  auto V1 = conic();
  CHECK_THROWS_AS(M(V1, {"x", "y"}), Error);               // wrong count
  CHECK_THROWS_AS(M(V1, {"x", "y", "z + z^2"}), Error);    // inhomogeneous
  CHECK_THROWS_AS(M(V1, {"x", "y^2", "z"}), Error);        // mixed degrees
  CHECK_THROWS_AS(M(V1, {"y^2 - x*z", "0", "0"}), Error);  // zero map on X
}

TEST_CASE("representatives of a given degree") {
  auto V1 = conic();
  RationalMap s1 = M(V1, {"y*z", "x*z", "x*y"});
  auto b1 = representatives_of_degree(s1, 1);
  REQUIRE(b1.size() == 1);
  // spanned by (z, y, x) up to scalar
  Coeff lc = b1[0][0].leading_coeff();
  CHECK(b1[0][0] == P(V1->ring(), "z").scaled(lc));
  CHECK(b1[0][1] == P(V1->ring(), "y").scaled(lc));
  CHECK(b1[0][2] == P(V1->ring(), "x").scaled(lc));

  CHECK(representatives_of_degree(s1, 2).size() == 6);

  auto V2 = cusp();
  RationalMap s2 = M(V2, {"y*z", "x*z", "x*y"});
  auto b2 = representatives_of_degree(s2, 2);
  CHECK(b2.size() == 2);
  RationalMap tau = M(V2, {"x*z", "y^2", "x^2"});
  CHECK(same_map(s2, tau));
  CHECK(representatives_of_degree(s2, 1).empty());

  RationalMap id = M(V1, {"x", "y", "z"});
  auto b3 = representatives_of_degree(id, 1);
  REQUIRE(b3.size() == 1);
  Coeff l3 = b3[0][0].leading_coeff();
  CHECK(b3[0][0] == P(V1->ring(), "x").scaled(l3));
  CHECK(b3[0][1] == P(V1->ring(), "y").scaled(l3));
  CHECK(b3[0][2] == P(V1->ring(), "z").scaled(l3));
}

TEST_CASE("dominance") {
  auto V1 = conic();
  CHECK(is_dominant(M(V1, {"z", "y", "x"})));
  CHECK(!is_dominant(M(V1, {"x", "2*x", "3*x"})));
  auto S = scroll();
  CHECK(is_dominant(M(S, {"a0*a1", "a0*a2", "a1^2", "a0*a3", "a2^2"})));
  // dominance reads only the base ideal; well-definedness is a separate gate
  CHECK(is_dominant(M(V1, {"x", "y", "x"})));
}

TEST_CASE("clear degree") {
  auto V1 = conic();
  CHECK(clear_degree_check(M(V1, {"z", "y", "x"})) == ClearDegree::Yes);

  auto S = scroll();
  CHECK(clear_degree_check(M(S, {"a0*a1", "a0*a2", "a1^2", "a0*a3", "a2^2"})) ==
        ClearDegree::Yes);

  // the cuspidal quadratic never certifies a clear degree, across seeds
  auto V2 = cusp();
  RationalMap s2 = M(V2, {"y*z", "x*z", "x*y"});
  for (uint64_t seed : {1, 2, 3, 4, 5}) {
    ClearDegree cd = clear_degree_check(s2, 32, seed);
    CHECK(cd != ClearDegree::Yes);
  }
}

TEST_CASE("inverse degree bound, exact values") {
  auto V1 = conic();
  InverseBound b = inverse_degree_bound(*V1, 1);
  CHECK(b.delta == 2);
  CHECK(b.d0 == 2);
  mpz_class expect = 1;
  mpz_class base = (mpz_class(1) << 31) + 2;
  for (int i = 0; i < 8; ++i) expect *= base;
  expect *= 4;
  CHECK(b.value == expect);
  CHECK(b.gabber == 1);
  CHECK(b.exceeds_gabber);

  // odd delta: the half term is ceiled before exponentiation
  auto V2 = cusp();
  InverseBound b2 = inverse_degree_bound(*V2, 2);
  CHECK(b2.delta == 3);
  mpz_class t32;
  mpz_class three(3);
  mpz_pow_ui(t32.get_mpz_t(), three.get_mpz_t(), 32);
  mpz_class bracket = (t32 + 7) / 2;  // ceil(3^32 / 2 + 3)
  mpz_class e2 = 1;
  for (int i = 0; i < 8; ++i) e2 *= bracket;
  e2 *= 4;
  CHECK(b2.value == e2);

  CHECK_THROWS_AS(inverse_degree_bound(*V1, 0), Error);
}

TEST_CASE("inverse degree bound grows with delta") {
  RingPtr R = make_ring(FieldSpec::rationals(), {"x", "y", "z"});
  auto quartic = make_variety(R, make_ideal(R, {"y^4 - x^3*z"}));
  CHECK(quartic->d0() == 4);
  std::vector<VarietyPtr> by_d0 = {conic(), cusp(), quartic};  // d0 = 2, 3, 4

  for (const auto& V : by_d0) {
    mpz_class prev = 0;
    long prev_delta = 0;
    for (int d = 1; d <= 5; ++d) {
      InverseBound b = inverse_degree_bound(*V, d);
      CHECK(b.value >= prev);
      if (prev_delta != 0 && b.delta > prev_delta) CHECK(b.value > prev);
      if (prev_delta != 0 && b.delta == prev_delta) CHECK(b.value == prev);
      prev = b.value;
      prev_delta = b.delta;
    }
  }
  for (int d = 1; d <= 5; ++d) {
    InverseBound b2 = inverse_degree_bound(*by_d0[0], d);
    InverseBound b3 = inverse_degree_bound(*by_d0[1], d);
    InverseBound b4 = inverse_degree_bound(*by_d0[2], d);
    if (b3.delta > b2.delta) CHECK(b3.value > b2.value);
    if (b4.delta > b3.delta) CHECK(b4.value > b3.value);
    CHECK(b3.value >= b2.value);
    CHECK(b4.value >= b3.value);
  }
}

TEST_CASE("verify inverse pair") {
  auto V1 = conic();
  RationalMap inv = M(V1, {"z", "y", "x"});
  CHECK(verify_inverse_pair(inv, inv));  // involution
  CHECK(!verify_inverse_pair(inv, M(V1, {"x", "y", "z"})));
  RationalMap s1 = M(V1, {"y*z", "x*z", "x*y"});
  CHECK(verify_inverse_pair(s1, inv));
  CHECK(verify_inverse_pair(inv, s1));  // symmetric
}

TEST_CASE("find inverse on the conic") {
  auto V1 = conic();
  RationalMap lin = M(V1, {"z", "y", "x"});
  auto inv = find_inverse(lin, 2);
  REQUIRE(inv.has_value());
  CHECK(inv->degree == 1);
  CHECK(same_map(*inv, lin));  // self-inverse
  CHECK(verify_inverse_pair(lin, *inv));
  CHECK(is_dominant(*inv));

  RationalMap s1 = M(V1, {"y*z", "x*z", "x*y"});
  auto inv2 = find_inverse(s1, 3);
  REQUIRE(inv2.has_value());
  CHECK(inv2->degree == 1);
  CHECK(same_map(*inv2, lin));

  CHECK_THROWS_AS(find_inverse(M(V1, {"x", "2*x", "3*x"}), 2), Error);  // not dominant
}

TEST_CASE("is_birational on curves and the plane") {
  auto V1 = conic();
  BirationalVerdict v = is_birational(M(V1, {"y*z", "x*z", "x*y"}));
  CHECK(v.kind == BirKind::Yes);
  CHECK(v.inverse_degree == 1);

  auto P2 = proj_plane();
  BirationalVerdict c = is_birational(M(P2, {"y*z", "x*z", "x*y"}));
  CHECK(c.kind == BirKind::Yes);
  CHECK(c.inverse_degree == 2);  // the quadratic involution of the plane

  auto P1 = proj_line();
  BirationalVerdict sq = is_birational(M(P1, {"x^2", "y^2"}), {}, 77);
  CHECK(sq.kind == BirKind::No);
  CHECK(sq.reason.find("fiber") != std::string::npos);

  BirationalVerdict nd = is_birational(M(V1, {"x", "2*x", "3*x"}));
  CHECK(nd.kind == BirKind::No);
  CHECK(nd.reason.find("dominant") != std::string::npos);
}

TEST_CASE("fiber probe soundness") {
  auto P2 = proj_plane();
  auto lin = probe_generic_fiber_degree(M(P2, {"y", "z", "x"}), 5, 3);
  REQUIRE(lin.has_value());
  CHECK(*lin == 1);

  auto P1 = proj_line();
  auto sq = probe_generic_fiber_degree(M(P1, {"x^2", "y^2"}), 5, 3);
  REQUIRE(sq.has_value());
  CHECK(*sq == 2);
}

TEST_CASE("bir_xd membership pipeline") {
  auto V1 = conic();
  MapVerdict ok = bir_xd_membership(M(V1, {"z", "y", "x"}));
  CHECK(ok.well_defined);
  CHECK(ok.dominant);
  CHECK(ok.birational.kind == BirKind::Yes);
  CHECK(ok.clear_degree == ClearDegree::Yes);
  CHECK(ok.in_bir_xd);

  auto V2 = cusp();
  MapVerdict s2 = bir_xd_membership(M(V2, {"y*z", "x*z", "x*y"}));
  CHECK(s2.well_defined);
  CHECK(s2.dominant);
  CHECK(s2.birational.kind == BirKind::Yes);
  CHECK(s2.clear_degree != ClearDegree::Yes);
  CHECK(!s2.in_bir_xd);

  MapVerdict bad = bir_xd_membership(M(V1, {"x", "2*x", "3*x"}));
  CHECK(!bad.dominant);
  CHECK(!bad.in_bir_xd);
}

TEST_CASE("canonical coordinates") {
  auto V1 = conic();
  RationalMap lin = M(V1, {"z", "y", "x"});
  auto c1 = canonical_coordinates(lin);
  REQUIRE(c1.size() == 9);  // s = 3 per form
  // standard monomials of degree 1 are x > y > z: z -> e2, y -> e1, x -> e0
  std::vector<int> expect = {0, 0, 1, 0, 1, 0, 1, 0, 0};
  for (size_t i = 0; i < 9; ++i) CHECK(c1[i] == expect[i]);

  RationalMap s1 = M(V1, {"y*z", "x*z", "x*y"});
  auto c2 = canonical_coordinates(s1, true);
  CHECK(c2.size() == 15);  // s = 5 per form
  int nonzero = 0;
  for (const auto& c : c2)
    if (c != 0) ++nonzero;
  CHECK(nonzero == 3);

  // replacing y^2 by xz inside a slot does not move the point
  RationalMap s1b = M(V1, {"y*z", "y^2", "x*y"});
  auto c3 = canonical_coordinates(s1b, true);
  CHECK(c2 == c3);

  // perturbation by multiples of the conic is invisible
  Rng rng(42);
  Poly q = P(V1->ring(), "y^2 - x*z");
  for (int t = 0; t < 20; ++t) {
    std::vector<Poly> forms = {P(V1->ring(), "y*z") + q.scaled(rng.coeff(V1->ring()->F)),
                               P(V1->ring(), "x*z") + q.scaled(rng.coeff(V1->ring()->F)),
                               P(V1->ring(), "x*y") + q.scaled(rng.coeff(V1->ring()->F))};
    auto c = canonical_coordinates(make_map(V1, forms), true);
    CHECK(c == c2);
  }

  // non-equivalent tuples separate
  int tried = 0, separated = 0;
  for (int t = 0; t < 20; ++t) {
    std::vector<Poly> forms = {random_form(V1->ring(), 2, rng, true),
                               random_form(V1->ring(), 2, rng, true),
                               random_form(V1->ring(), 2, rng, true)};
    RationalMap h = make_map(V1, forms);
    if (same_map(h, s1)) continue;
    ++tried;
    if (canonical_coordinates(h, true) != c2) ++separated;
  }
  CHECK(tried == separated);
  CHECK(tried >= 15);

  CHECK_THROWS_AS(canonical_coordinates(M(V1, {"x", "y", "x"})), Error);
}

TEST_CASE("the inverse of the scroll involution conjugate has no clear degree at 3") {
  auto S = scroll();
  RationalMap psi = M(S, {"a1^3", "a1^2*a3", "a1^2*a4", "a1*a3*a4", "a3^2*a4"});
  CHECK(is_well_defined(psi));
  CHECK(is_dominant(psi));
  BirationalVerdict v = is_birational(psi);
  CHECK(v.kind == BirKind::Yes);
  CHECK(v.inverse_degree == 2);  // recovers the degree-2 map it inverts
  CHECK(clear_degree_check(psi, 8, 11) != ClearDegree::Yes);
}

TEST_CASE("non-Cohen-Macaulay curve: the identity map has no clear degree") {
  // smooth rational quartic in P^3, coordinate ring of depth 1: the kernel of
  // x -> (s^4, s^3 t, s t^3, t^4), computed by elimination
  RingPtr big = make_ring(FieldSpec::rationals(), {"s", "t", "x0", "x1", "x2", "x3"});
  std::vector<std::string> rel = {"x0 - s^4", "x1 - s^3*t", "x2 - s*t^3", "x3 - t^4"};
  Ideal K = eliminate(make_ideal(big, rel), {2, 3, 4, 5});
  auto C4 = make_variety(K.ring, K);
  CHECK(C4->r() == 2);
  CHECK(C4->nondegenerate());
  CHECK(C4->hilbert_data().multiplicity == 4);

  RationalMap id = make_map(C4, {"x0", "x1", "x2", "x3"});
  // the irrelevant ideal has grade 1 here, so even the identity fails
  CHECK(!grade_at_least_2(*C4, make_ideal(C4->ring(), {"x0", "x1", "x2", "x3"})));
  CHECK(clear_degree_check(id) == ClearDegree::No);
  MapVerdict mv = bir_xd_membership(id);
  CHECK(mv.well_defined);
  CHECK(mv.dominant);
  CHECK(mv.birational.kind == BirKind::Yes);
  CHECK(mv.birational.inverse_degree == 1);
  CHECK(!mv.in_bir_xd);  // birational, but outside Bir(X)_1
}

TEST_CASE("multiplicity comparison (SUV)") {
  auto V1 = conic();
  SuvReport r1 = suv_check(M(V1, {"z", "y", "x"}));
  CHECK(r1.applicable);
  CHECK(r1.lhs == 2);
  CHECK(r1.rhs == 2);
  CHECK(r1.equality);
  CHECK(r1.r == 2);
  CHECK(r1.g == 2);
  CHECK(r1.r_le_g_plus_1);
  REQUIRE(r1.birational_consistent.has_value());
  CHECK(*r1.birational_consistent);

  // dominant non-birational squares map: strict inequality, consistent
  SuvReport r2 = suv_check(M(V1, {"x^2", "y^2", "z^2"}));
  CHECK(r2.applicable);
  CHECK(r2.lhs == 2);
  CHECK(r2.rhs == 4);
  CHECK(!r2.equality);
  REQUIRE(r2.birational_consistent.has_value());
  CHECK(*r2.birational_consistent);

  // the degree-2 representative of sigma1 has base points on X: guarded path
  SuvReport r3 = suv_check(M(V1, {"y*z", "x*z", "x*y"}));
  CHECK(!r3.applicable);

  CHECK_THROWS_AS(suv_check(M(V1, {"x", "2*x", "3*x"})), Error);  // not dominant
}

TEST_CASE("edim bound") {
  auto V1 = conic();
  EdimBoundReport e1 = edim_bound(*V1, 1);
  CHECK(e1.bound == 8);
  CHECK(e1.hf_rd == 3);
  CHECK(e1.c1_quasi_projective);

  EdimBoundReport e2 = edim_bound(*V1, 2);
  CHECK(e2.bound == 14);
  CHECK(!e2.c1_quasi_projective);

  auto P2 = proj_plane();
  for (int d = 1; d <= 4; ++d) {
    EdimBoundReport e = edim_bound(*P2, d);
    CHECK(e.bound == 3 * monomial_count(3, d) - 1);
    CHECK(e.c1_quasi_projective);
  }
}
