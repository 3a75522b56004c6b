#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "knotint/ring.hpp"

using namespace knotint;

namespace {

InvariantPoly random_poly(std::mt19937& rng, int terms) {
  InvariantPoly p;
  std::uniform_int_distribution<int> e(-4, 4), c(-5, 5);
  for (int i = 0; i < terms; ++i)
    p.add_term({e(rng), e(rng), e(rng), e(rng)}, c(rng));
  return p;
}

// Independent term-by-term expansion used as the multiplication oracle.
InvariantPoly mul_oracle(const InvariantPoly& a, const InvariantPoly& b) {
  std::vector<std::pair<Monomial4, Int>> acc;
  for (auto& [m1, c1] : a.terms)
    for (auto& [m2, c2] : b.terms)
      acc.push_back({{m1.u + m2.u, m1.x + m2.x, m1.y + m2.y, m1.d + m2.d}, c1 * c2});
  InvariantPoly r;
  for (auto& [m, c] : acc) r.add_term(m, c);
  return r;
}

const char* kTrefoilGamma = "1*u^-4*x^-3*y^-1-1*u^-4*x^-2*y^-1+1*u^-4*x^-1*y^-1+1*u^-4-1*u^-4*y^-1";

}  // namespace

TEST_CASE("additive identity") {
  std::mt19937 rng(7);
  InvariantPoly p = random_poly(rng, 6);
  CHECK(p + InvariantPoly::zero() == p);
}

TEST_CASE("trefoil prefactor product") {
  // u^-4 (-y)^-1 (-x^-3 + x^-2 - x^-1 + 1 - y)
  InvariantPoly inner = InvariantPoly::parse("-1*x^-3+1*x^-2-1*x^-1+1-1*y");
  InvariantPoly pref = InvariantPoly::monomial({-4, 0, -1, 0}, -1);
  InvariantPoly gamma = pref * inner;
  CHECK(gamma == InvariantPoly::parse(kTrefoilGamma));
}

TEST_CASE("multiplication against expansion oracle, commutativity") {
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    InvariantPoly a = random_poly(rng, 5), b = random_poly(rng, 5);
    CHECK(a * b == mul_oracle(a, b));
    CHECK(a * b == b * a);
  }
}

TEST_CASE("specialize_generic is a ring homomorphism") {
  std::mt19937 rng(3);
  for (int i = 0; i < 500; ++i) {
    InvariantPoly a = random_poly(rng, 4), b = random_poly(rng, 4);
    int c = int(rng() % 5) - 2;
    CHECK(specialize_generic(a * b, c) ==
          specialize_generic(a, c) * specialize_generic(b, c));
    CHECK(specialize_generic(a + b, c) ==
          specialize_generic(a, c) + specialize_generic(b, c));
  }
  CHECK(specialize_generic(InvariantPoly::one(), 1) ==
        specialize_generic(InvariantPoly::one(), -3));
}

TEST_CASE("jones specialisation of the trefoil value") {
  InvariantPoly gamma = InvariantPoly::parse(kTrefoilGamma);
  LaurentPoly j = specialize_jones(gamma, 2);
  LaurentPoly expect('q');
  expect.add_term(-8, -1);
  expect.add_term(-6, 1);
  expect.add_term(-2, 1);
  CHECK(j == expect);
  CHECK(specialize_jones(InvariantPoly::one(), 2) == LaurentPoly::constant('q', 1));
}

TEST_CASE("ado specialisation of the trefoil value") {
  InvariantPoly gamma = InvariantPoly::parse(kTrefoilGamma);
  CyclotomicPoly ado = specialize_ado(gamma, 2);
  // A^2 - 1 + A^-2
  CyclotomicRing ring(4);
  REQUIRE(ado.terms.size() == 3);
  auto xf = ado.rewrite_in_x(ring);
  REQUIRE(xf.has_value());
  LaurentPoly expect('x');
  expect.add_term(1, 1);
  expect.add_term(0, -1);
  expect.add_term(-1, 1);
  CHECK(*xf == expect);
  CHECK(specialize_ado(InvariantPoly::zero(), 2).is_zero());
}

TEST_CASE("cyclotomic identities zeta^2N = 1, zeta^N = -1") {
  for (int N = 2; N <= 6; ++N) {
    CyclotomicRing ring(2 * N);
    CHECK(ring.zeta_power(2 * N) == ring.from_int(1));
    CHECK(ring.zeta_power(N) == ring.from_int(-1));
    CHECK(ring.zeta_power(-N) == ring.from_int(-1));
    // multiplicative sanity zeta^a * zeta^b = zeta^(a+b)
    for (int a = -3; a <= 3; ++a)
      for (int b = -3; b <= 3; ++b)
        CHECK(ring.mul(ring.zeta_power(a), ring.zeta_power(b)) ==
              ring.zeta_power(a + b));
  }
}

TEST_CASE("ado homomorphism law on random inputs") {
  std::mt19937 rng(17);
  for (int i = 0; i < 100; ++i) {
    InvariantPoly a = random_poly(rng, 3), b = random_poly(rng, 3);
    for (int N = 2; N <= 3; ++N) {
      CyclotomicRing ring(2 * N);
      auto pa = specialize_ado(a, N);
      auto pb = specialize_ado(b, N);
      auto pab = specialize_ado(a * b, N);
      // multiply pa * pb in the cyclotomic ring
      CyclotomicPoly prod;
      prod.order = 2 * N;
      for (auto& [ea, ca] : pa.terms)
        for (auto& [eb, cb] : pb.terms)
          prod.add_term(ring, ea + eb, ring.mul(ca, cb));
      CHECK(prod.terms == pab.terms);
    }
  }
}

TEST_CASE("canonical text form round trip") {
  std::mt19937 rng(23);
  for (int i = 0; i < 200; ++i) {
    InvariantPoly p = random_poly(rng, 6);
    CHECK(InvariantPoly::parse(p.to_string()) == p);
  }
  CHECK(InvariantPoly::parse("0").is_zero());
  CHECK(InvariantPoly::parse("-1*u^-4*x^-3*y^-1").to_string() == "-1*u^-4*x^-3*y^-1");
}

TEST_CASE("laurent division") {
  LaurentPoly cyc('t');
  for (int j = 0; j < 3; ++j) cyc.add_term(j, 1);
  LaurentPoly p = cyc * LaurentPoly::monomial('t', -2, 3) + LaurentPoly('t');
  CHECK(p.divide_exact(cyc) == LaurentPoly::monomial('t', -2, 3));
  CHECK_THROWS_AS(LaurentPoly::constant('t', 1).divide_exact(cyc), std::domain_error);
}
