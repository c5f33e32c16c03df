#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "birkit/poly.hpp"
#include "birkit/rng.hpp"

using namespace birkit;

namespace {

RingPtr qq_xyz(MonomialOrder o = MonomialOrder::grevlex()) {
  return make_ring(FieldSpec::rationals(), {"x", "y", "z"}, o);
}

Poly P(const RingPtr& R, const std::string& s) { return poly_parse(s, R); }

}  // namespace

TEST_CASE("parse basics") {
  RingPtr R = qq_xyz();
  Poly f = P(R, "y^2 - x*z");
  CHECK(f.size() == 2);
  CHECK(f.degree() == 2);
  CHECK(f.is_homogeneous());

  CHECK(P(R, "0").is_zero());
  CHECK(P(R, "1 - 1").is_zero());
  CHECK(P(R, "x + y - x - y").is_zero());

  RingPtr F101 = make_ring(FieldSpec::prime(101), {"x", "y", "z"});
  Poly g = P(F101, "y^3 - x^2*z");
  CHECK(g.size() == 2);
  std::vector<Coeff> cs;
  for (const auto& t : g.terms()) cs.push_back(t.coeff);
  CHECK(((cs[0] == 1 && cs[1] == 100) || (cs[0] == 100 && cs[1] == 1)));
}

TEST_CASE("parse errors carry positions") {
  RingPtr R = qq_xyz();
  CHECK_THROWS_WITH_AS(P(R, "x + + y"), doctest::Contains("position 5"), Error);
  try {
    P(R, "x * w");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownVariable);
    CHECK(std::string(e.what()).find("'w'") != std::string::npos);
  }
  CHECK_THROWS_AS(P(R, "x y"), Error);          // juxtaposition is not multiplication
  CHECK_THROWS_AS(P(R, "x^-1"), Error);         // negative exponent
  CHECK_THROWS_AS(P(R, "(x + y"), Error);       // unbalanced
  CHECK_THROWS_AS(P(R, ""), Error);
  CHECK(P(R, "-x + (-y)*(-1)") == P(R, "y - x"));
  CHECK(P(R, "2^3") == P(R, "8"));
}

TEST_CASE("arithmetic examples") {
  RingPtr R = qq_xyz();
  CHECK(P(R, "(y^2 - x*z)*(y^2 + x*z)") == P(R, "y^4 - x^2*z^2"));
  Poly f = P(R, "x^2 - 3*y*z");
  CHECK(poly_arith(ArithOp::Add, f, Poly::zero(R)) == f);
  CHECK(poly_arith(ArithOp::Mul, P(R, "y^2 - x*z"), P(R, "y^2 + x*z")) ==
        P(R, "y^4 - x^2*z^2"));

  RingPtr F5 = make_ring(FieldSpec::prime(5), {"x"});
  CHECK(poly_arith(ArithOp::Mul, P(F5, "2*x"), P(F5, "3*x")) == P(F5, "x^2"));

  // degree additivity on nonzero homogeneous inputs
  Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    Poly a = random_form(R, 1 + (int)rng.below(3), rng, true);
    Poly b = random_form(R, 1 + (int)rng.below(3), rng, true);
    CHECK((a * b).degree() == a.degree() + b.degree());
  }
}

TEST_CASE("ring mismatch is rejected") {
  RingPtr R = qq_xyz();
  RingPtr S = make_ring(FieldSpec::rationals(), {"x", "y"});
  CHECK_THROWS_AS(P(R, "x") + P(S, "x"), Error);
  try {
    P(R, "x") * P(S, "y");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RingMismatch);
  }
}

TEST_CASE("leading terms per order") {
  RingPtr R = qq_xyz();
  auto [m1, c1] = leading_term(P(R, "y^2 - x*z"));
  CHECK(m1.exps == std::vector<int32_t>{0, 2, 0});  // grevlex convention: y^2 wins
  CHECK(c1 == 1);

  RingPtr L = qq_xyz(MonomialOrder::lex());
  auto [m2, c2] = leading_term(P(L, "x"));
  CHECK(m2.exps == std::vector<int32_t>{1, 0, 0});
  CHECK(c2 == 1);

  auto [m3, c3] = leading_term(P(L, "y^2 - x*z"));
  CHECK(m3.exps == std::vector<int32_t>{1, 0, 1});
  CHECK(c3 == -1);

  CHECK_THROWS_AS(leading_term(Poly::zero(R)), Error);
}

TEST_CASE("monomials_of_degree counts and determinism") {
  RingPtr R = qq_xyz();
  CHECK(monomials_of_degree(*R, 1).size() == 3);
  CHECK(monomials_of_degree(*R, 2).size() == 6);
  RingPtr R2 = make_ring(FieldSpec::rationals(), {"s", "t"});
  CHECK(monomials_of_degree(*R2, 5).size() == 6);
  CHECK(monomials_of_degree(*R, 0).size() == 1);

  for (int n = 0; n <= 5; ++n) {
    std::vector<std::string> vars;
    for (int i = 0; i <= n; ++i) vars.push_back("v" + std::to_string(i));
    RingPtr Rn = make_ring(FieldSpec::rationals(), vars);
    for (int d = 0; d <= 8; ++d)
      CHECK(mpz_class((long)monomials_of_degree(*Rn, d).size()) == monomial_count(n + 1, d));
  }

  // descending in the ring order, strictly
  auto mons = monomials_of_degree(*R, 3);
  for (size_t i = 0; i + 1 < mons.size(); ++i)
    CHECK(mono_cmp(R->order, mons[i], mons[i + 1]) > 0);
}

TEST_CASE("order axioms on sampled monomials") {
  RingPtr R = make_ring(FieldSpec::rationals(), {"a", "b", "c", "d"});
  Rng rng(99);
  auto random_mono = [&](int dmax) {
    Monomial m(4);
    for (int i = 0; i < 4; ++i) m.exps[i] = (int)rng.below(dmax + 1);
    return m;
  };
  for (MonomialOrder o : {MonomialOrder::lex(), MonomialOrder::grevlex(),
                          MonomialOrder::block_elim(2)}) {
    Monomial one(4);
    for (int t = 0; t < 300; ++t) {
      Monomial u = random_mono(3), v = random_mono(3), w = random_mono(3);
      int uv = mono_cmp(o, u, v);
      // totality / antisymmetry
      CHECK(uv == -mono_cmp(o, v, u));
      if (u == v) CHECK(uv == 0);
      if (uv == 0) CHECK(u == v);
      // multiplicativity
      CHECK(mono_cmp(o, mono_mul(u, w), mono_mul(v, w)) == uv);
      // 1 is minimal
      if (!u.is_one()) CHECK(mono_cmp(o, u, one) > 0);
      // transitivity spot check
      if (uv > 0 && mono_cmp(o, v, w) > 0) CHECK(mono_cmp(o, u, w) > 0);
    }
  }
}

TEST_CASE("ring axioms on random polynomials") {
  for (FieldSpec fs : {FieldSpec::rationals(), FieldSpec::prime(101)}) {
    RingPtr R = make_ring(fs, {"x", "y", "z"});
    Rng rng(2024);
    for (int t = 0; t < 60; ++t) {
      Poly f = random_form(R, (int)rng.below(3), rng);
      Poly g = random_form(R, (int)rng.below(3), rng);
      Poly h = random_form(R, (int)rng.below(3), rng);
      CHECK((f + g) + h == f + (g + h));
      CHECK(f * g == g * f);
      CHECK(f * (g + h) == f * g + f * h);
      CHECK((f * g) * h == f * (g * h));
    }
  }
}

TEST_CASE("canonicalization and projective normal form") {
  RingPtr R = qq_xyz();
  Poly f = P(R, "4*y^2 - 4*x*z + 8*z^2");
  Poly nf = projective_normal(f);
  CHECK(nf == P(R, "y^2 - x*z + 2*z^2"));
  CHECK(projective_normal(nf) == nf);  // idempotent
  CHECK(projective_scalar(f) == 4);
  Poly g = P(R, "-3*x + 6*y");
  CHECK(projective_normal(g) == P(R, "x - 2*y"));
  CHECK(projective_normal(Poly::zero(R)).is_zero());

  RingPtr F7 = make_ring(FieldSpec::prime(7), {"x", "y"});
  Poly h = P(F7, "3*x^2 + 5*y^2");
  CHECK(projective_normal(h).leading_coeff() == 1);
}

TEST_CASE("print/parse round trip") {
  RingPtr R = qq_xyz();
  for (const char* s : {"y^2 - x*z", "x", "0", "x^3 - 2*x*y*z + 5*z^3", "-x + y",
                        "x^2*y^2*z^2 + 1"}) {
    Poly f = P(R, s);
    CHECK(poly_parse(f.to_string(), R) == f);
  }
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    Poly f = random_form(R, (int)rng.below(4), rng);
    CHECK(poly_parse(f.to_string(), R) == f);
  }
  RingPtr F101 = make_ring(FieldSpec::prime(101), {"x", "y", "z"});
  for (int t = 0; t < 50; ++t) {
    Poly f = random_form(F101, (int)rng.below(4), rng);
    CHECK(poly_parse(f.to_string(), F101) == f);
  }
}

TEST_CASE("substitution") {
  RingPtr R = qq_xyz();
  // evaluate y^2 - xz at (t^2, t*u, u^2): identically zero
  RingPtr TU = make_ring(FieldSpec::rationals(), {"t", "u"});
  std::vector<Poly> images = {P(TU, "t^2"), P(TU, "t*u"), P(TU, "u^2")};
  CHECK(poly_substitute(P(R, "y^2 - x*z"), images).is_zero());
  CHECK(poly_substitute(P(R, "x*z"), images) == P(TU, "t^2*u^2"));
}

#include "birkit/univariate.hpp"

TEST_CASE("univariate roots over small and large prime fields") {
  Rng rng(88);
  // small field: scan path
  {
    long p = 101;
    // (x - 3)(x - 5)(x^2 + 1); 10^2 = -1 mod 101, so +-10 are also roots
    UniPoly f = {0, 0, 0, 0, 1};  // start from x^4 and build by multiplication
    auto mul = [&](UniPoly a, UniPoly b) {
      UniPoly r(a.size() + b.size() - 1, 0);
      for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
          r[i + j] = (r[i + j] + a[i] * b[j] % p + p) % p;
      return r;
    };
    f = mul(mul(UniPoly{p - 3, 1}, UniPoly{p - 5, 1}), UniPoly{1, 0, 1});
    auto roots = uni_roots(f, p, rng);
    CHECK(roots == std::vector<long>{3, 5, 10, 91});
  }
  // large field: gcd with x^p - x plus random splitting
  {
    long p = 2147483629;  // prime just below 2^31
    CHECK(is_prime_long(p));
    auto mul = [&](UniPoly a, UniPoly b) {
      UniPoly r(a.size() + b.size() - 1, 0);
      for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
          r[i + j] = (long)(((__int128)r[i + j] + (__int128)a[i] * b[j]) % p);
      return r;
    };
    UniPoly f = mul(mul(UniPoly{p - 7, 1}, UniPoly{p - 123456789, 1}),
                    UniPoly{1, 0, 1});  // x^2 + 1 may or may not split
    auto roots = uni_roots(f, p, rng);
    CHECK(std::find(roots.begin(), roots.end(), 7L) != roots.end());
    CHECK(std::find(roots.begin(), roots.end(), 123456789L) != roots.end());
    for (long r : roots) {
      // verify by Horner
      __int128 acc = 0;
      for (size_t i = f.size(); i-- > 0;) acc = (acc * r + f[i]) % p;
      CHECK((long)acc == 0);
    }
  }
}
