#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "rueppel/error.hpp"
#include "rueppel/integer.hpp"
#include "rueppel/poly2.hpp"

using namespace rueppel;

TEST_CASE("integer exact division and text round trip") {
  const Integer big("123456789012345678901234567890");
  CHECK(Integer(big.str()) == big);
  CHECK(exact_div(big * Integer(7), Integer(7)) == big);
  CHECK_THROWS_AS(exact_div(Integer(7), Integer(2)), Error);
  CHECK_THROWS_AS(exact_div(Integer(7), Integer(0)), Error);
  CHECK(Integer(-12).abs() == Integer(12));
  CHECK(Integer(3).pow(4) == Integer(81));
}

TEST_CASE("rational canonical form") {
  const Rational a(Integer(6), Integer(-4));
  CHECK(a.str() == "-3/2");
  CHECK(a.num() == Integer(-3));
  CHECK(a.den() == Integer(2));
  CHECK(Rational("2/4") == Rational(Integer(1), Integer(2)));
  CHECK((a * Rational(Integer(-2), Integer(3))).is_integer());
  CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), Error);
}

TEST_CASE("poly2 ring axioms on random polynomials") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Poly2 p = oracle::random_poly2(rng);
    const Poly2 q = oracle::random_poly2(rng);
    const Poly2 s = oracle::random_poly2(rng);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p * q) * s == p * (q * s));
    CHECK(p * (q + s) == p * q + p * s);
    CHECK(p - p == Poly2(0));
    CHECK(p * Poly2(1) == p);
    if (!q.is_zero()) CHECK(exact_div(p * q, q) == p);
  }
}

TEST_CASE("poly2 evaluation agrees with arithmetic") {
  std::mt19937 rng(11);
  const Rational b(Integer(3), Integer(2));
  const Rational c(Integer(-5), Integer(7));
  for (int trial = 0; trial < 50; ++trial) {
    const Poly2 p = oracle::random_poly2(rng);
    const Poly2 q = oracle::random_poly2(rng);
    CHECK((p * q).eval(b, c) == p.eval(b, c) * q.eval(b, c));
    CHECK((p - q).eval(b, c) == p.eval(b, c) - q.eval(b, c));
  }
}

TEST_CASE("poly2 printing and substitution") {
  const Poly2 b = Poly2::b();
  const Poly2 c = Poly2::c();
  CHECK((b + c * c * c).str() == "c^3+b");
  CHECK((Poly2(2) * b - c).str() == "2*b-c");
  CHECK((b * c + c).substitute_c(b) == b * b + b);
  CHECK_THROWS_AS(exact_div(b + Poly2(1), c), Error);
}

TEST_CASE("degree bound is enforced and can be raised per thread") {
  const Poly2 c = Poly2::c();
  Poly2 p = Poly2::monomial(1, 0, Poly2::degree_bound());
  CHECK_THROWS_AS(p * c, Error);
  {
    const DegreeBoundScope scope(Poly2::degree_bound() + 8);
    CHECK_NOTHROW(p * c);
  }
  CHECK_THROWS_AS(p * c, Error);
}

TEST_CASE("ratfunc normal form and field operations") {
  const Poly2 b = Poly2::b();
  const Poly2 c = Poly2::c();
  const RatFunc f(b * c, c * c);
  CHECK(f == RatFunc(b, c));
  CHECK(f.str() == RatFunc(b, c).str());
  const RatFunc g(b + c, b);
  CHECK((f / g) * g == f);
  CHECK(f - f == RatFunc(0));
  CHECK((f + g).eval(Rational(2), Rational(3)) == f.eval(Rational(2), Rational(3)) + g.eval(Rational(2), Rational(3)));
  CHECK_THROWS_AS(RatFunc(b, Poly2(0)), Error);
}
