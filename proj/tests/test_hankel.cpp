#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "rueppel/cfrac.hpp"
#include "rueppel/hankel.hpp"

using namespace rueppel;
using ZS = Series<Integer>;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("Bareiss agrees with the cofactor oracle on integer matrices") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = oracle::random_int_matrix(rng, std::size_t(1 + trial % 6));
    CHECK(det_fraction_free(m) == oracle::cofactor_det(m));
  }
}

TEST_CASE("Bareiss agrees with the cofactor oracle on Poly2 matrices") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = oracle::random_poly2_matrix(rng, std::size_t(1 + trial % 4));
    CHECK(det_fraction_free(m) == oracle::cofactor_det(m));
  }
}

TEST_CASE("Bareiss handles zero pivots and singular matrices") {
  Matrix<Integer> m(3, 3);
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(2, 2) = 5;
  CHECK(det_fraction_free(m) == Integer(-5));
  Matrix<Integer> z(2, 2);
  z(0, 0) = 1;
  z(0, 1) = 2;
  z(1, 0) = 2;
  z(1, 1) = 4;
  CHECK(det_fraction_free(z) == Integer(0));
}

TEST_CASE("Hankel transform of 1 - x r(x)") {
  const ZS r = rueppel_series(21);
  const ZS s = ZS::one(21) - ZS::x(21) * r;
  CHECK(hankel_transform(s, 10).terms == ints({1, -2, 3, 2, -3, 4, 3, 2, -3, 4, -5}));
}

TEST_CASE("parallel and serial Hankel transforms agree") {
  const ZS c = catalan_series(41);
  CHECK(hankel_transform(c, 20).terms == hankel_transform_serial(c, 20).terms);
  const ZS r = rueppel_series(41);
  CHECK(hankel_transform(r, 20).terms == hankel_transform_serial(r, 20).terms);
}

TEST_CASE("Hankel closed forms") {
  const auto hc = hankel_transform(catalan_series(41), 20).terms;
  for (const auto& v : hc) CHECK(v == Integer(1));
  const auto hr = hankel_transform(rueppel_series(41), 20).terms;
  for (std::size_t n = 0; n < hr.size(); ++n) {
    const long m = long(n + 1) * long(n) / 2;
    CHECK(hr[n] == Integer(m % 2 == 0 ? 1 : -1));
  }
}

TEST_CASE("Hankel transform needs 2n+1 terms") {
  CHECK_THROWS_AS(hankel_transform(ZS::one(4), 2), Error);
}

TEST_CASE("Hankel from J-fraction parameters matches determinants") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    JFraction<Integer> j;
    j.a0 = Integer(trial % 2 ? 1 : -2);
    for (int k = 0; k < 8; ++k) {
      j.alphas.push_back(oracle::random_int(rng, -3, 3));
      Integer beta(0);
      while (beta.is_zero()) beta = oracle::random_int(rng, -3, 3);
      j.betas.push_back(beta);
    }
    const ZS s = jacobi_eval(j, 17);
    CHECK(hankel_from_jacobi(j.a0, std::span<const Integer>(j.betas), 8).terms == hankel_transform(s, 8).terms);
  }
}

TEST_CASE("Hankel from S-fraction parameters matches determinants") {
  const ZS s = ZS::one(30) - ZS::x(30) * catalan_series(30);
  const auto sf = stieltjes_expand(s, 24);
  const auto h = hankel_transform(convert<Rational>(s), 12).terms;
  // The product formula takes the matrix size, so h_n is size n + 1.
  for (std::size_t n = 0; n <= 12; ++n) {
    CHECK(hankel_from_stieltjes(sf.a0, std::span<const Rational>(sf.alphas), n + 1) == h[n]);
  }
}
