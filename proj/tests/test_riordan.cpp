#include "doctest.h"
#include "rueppel/riordan.hpp"

using namespace rueppel;
using ZS = Series<Integer>;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

// Pascal's triangle is the Riordan array (1/(1-x), x/(1-x)).
ZS geometric(std::size_t n) { return ZS(std::vector<Integer>(n, Integer(1))); }

}  // namespace

TEST_CASE("Pascal triangle as a Riordan array") {
  const std::size_t n = 8;
  const ZS g = geometric(n);
  const ZS f = ZS::x(n) * geometric(n);
  const auto m = riordan_build(g, f, n);
  for (std::size_t i = 0; i < n; ++i) {
    Integer binom(1);
    for (std::size_t k = 0; k <= i; ++k) {
      CHECK(m(i, k) == binom);
      binom = exact_div(binom * Integer(long(i - k)), Integer(long(k + 1)));
    }
    for (std::size_t k = i + 1; k < n; ++k) CHECK(m(i, k).is_zero());
  }
}

TEST_CASE("parallel and serial builds agree") {
  const std::size_t n = 24;
  const ZS g = rueppel_series(n);
  const ZS f = ZS::x(n) * rueppel_series(n);
  CHECK(riordan_build(g, f, n) == riordan_build_serial(g, f, n));
}

TEST_CASE("fundamental theorem: matrix action is g(x) h(f(x))") {
  const std::size_t n = 16;
  const ZS g = catalan_series(n);
  const ZS f = ZS::x(n) * catalan_series(n);
  const ZS h = rueppel_series(n);
  CHECK(matrix_apply(riordan_build(g, f, n), h) == riordan_apply(g, f, h));
}

TEST_CASE("bivariate generating function reproduces the columns") {
  const std::size_t n = 10;
  const ZS g = geometric(n);
  const ZS f = ZS::x(n) * geometric(n);
  const auto m = riordan_build(g, f, n);
  const auto biv = riordan_bivariate(g, f);
  const auto arr = coeff_array(biv, n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) CHECK(arr(i, k) == m(i, k));
  }
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(riordan_build(ZS::x(4), ZS::x(4), 4), Error);
  CHECK_THROWS_AS(riordan_build(ZS::one(4), ZS::one(4), 4), Error);
  CHECK_THROWS_AS(riordan_build(ZS::one(3), ZS::x(4), 4), Error);
  CHECK_THROWS_AS(strip_first_row(Matrix<Integer>(1, 1)), Error);
}

TEST_CASE("strip first row") {
  const auto m = riordan_build(geometric(4), ZS::x(4) * geometric(4), 4);
  const auto s = strip_first_row(m);
  CHECK(s.rows() == 3);
  CHECK(s(0, 0) == m(1, 0));
  CHECK(s(2, 3) == m(3, 3));
}

TEST_CASE("INVERT transform") {
  // INVERT(1) of all ones is 1, 2, 4, 8, ...
  const Sequence<Integer> ones{std::vector<Integer>(6, Integer(1)), 0};
  CHECK(invert_transform(ones, Integer(1)).terms == ints({1, 2, 4, 8, 16, 32}));
  // INVERT(-1) of r_{n+1} is the row sums of (r(x^2)/r(x)).
  const ZS r = rueppel_series(12);
  const Sequence<Integer> shifted{shift_left(r, 1).coeffs(), 0};
  const ZS want = compose_xk(r.truncated(6), 2) * recip(r.truncated(11));
  CHECK(invert_transform(shifted, Integer(-1)).terms == want.coeffs());
  CHECK_THROWS_AS(invert_transform(Sequence<Integer>{ints({2, 1}), 0}, Integer(1)), Error);
}
