#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "rueppel/series.hpp"

using namespace rueppel;
using ZS = Series<Integer>;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("multiplication is commutative and associative to the shared order") {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const ZS a = oracle::random_unit_series(rng, 12);
    const ZS b = oracle::random_unit_series(rng, 10);
    const ZS c = oracle::random_unit_series(rng, 14);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * b).order() == 10);
  }
}

TEST_CASE("recip round trip on 100 random unit series") {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const ZS s = oracle::random_unit_series(rng, 20);
    CHECK(s * recip(s) == ZS::one(20));
  }
  CHECK_THROWS_AS(recip(ZS(ints({2, 1}))), Error);
}

TEST_CASE("compose_xk composes multiplicatively") {
  std::mt19937 rng(3);
  const ZS s = oracle::random_unit_series(rng, 9);
  CHECK(compose_xk(compose_xk(s, 2), 3) == compose_xk(s, 6));
  CHECK(compose_xk(ZS(ints({1, 2, 3})), 2).coeffs() == ints({1, 0, 2, 0, 3, 0}));
}

TEST_CASE("compose matches a hand expansion") {
  // 1/(1 - y) at y = x + x^2 is sum of Fibonacci numbers F(n+1).
  const ZS geo(std::vector<Integer>(10, Integer(1)));
  const ZS f(ints({0, 1, 1, 0, 0, 0, 0, 0, 0, 0}));
  CHECK(compose(geo, f).coeffs() == ints({1, 1, 2, 3, 5, 8, 13, 21, 34, 55}));
  CHECK_THROWS_AS(compose(geo, ZS::one(10)), Error);
}

TEST_CASE("catalan and motzkin series match combinatorial counts") {
  CHECK(catalan_series(30).coeffs() == oracle::catalan_numbers(30));
  CHECK(motzkin_series(25).coeffs() == oracle::motzkin_paths(25));
}

TEST_CASE("rueppel series") {
  CHECK(rueppel_series(11).coeffs() == ints({1, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0}));
  const auto cat = oracle::catalan_numbers(64);
  const ZS r = rueppel_series(64);
  for (std::size_t n = 0; n < 64; ++n) CHECK(r[n] == mod_floor(cat[n], Integer(2)));
}

TEST_CASE("two-parameter rueppel series") {
  const auto s = rueppel_bc_series(8);
  const Poly2 b = Poly2::b();
  const Poly2 c = Poly2::c();
  const std::vector<Poly2> want{Poly2(1), c, Poly2(0), b, Poly2(0), Poly2(0), Poly2(0), b};
  CHECK(s.coeffs() == want);
}

TEST_CASE("truncation bookkeeping takes the minimum") {
  const ZS a = ZS::one(5);
  const ZS b = ZS::one(3);
  CHECK((a + b).order() == 3);
  CHECK_THROWS_AS(a[5], Error);
  CHECK(shift_left(ZS(ints({1, 2, 3})), 1).coeffs() == ints({2, 3}));
  CHECK(series_shift(ZS(ints({1, 2})), -1).coeffs() == ints({0, 1, 2}));
}
