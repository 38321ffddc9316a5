#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "rueppel/cfrac.hpp"

using namespace rueppel;
using ZS = Series<Integer>;

namespace {

std::vector<Rational> rats(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("S-fraction of the Rueppel series") {
  const auto sf = stieltjes_expand(rueppel_series(12), 11);
  CHECK(sf.alphas == rats({1, -1, -1, 1, -1, 1, -1, 1, 1, -1, 1}));
  CHECK(sf.a0 == Rational(1));
}

TEST_CASE("S- and J-fractions of the Catalan series") {
  const ZS c = catalan_series(25);
  CHECK(stieltjes_expand(c, 20).alphas == std::vector<Rational>(20, Rational(1)));
  const auto jf = jacobi_expand(c, 12);
  CHECK(jf.betas == std::vector<Rational>(12, Rational(1)));
  CHECK(jf.alphas.front() == Rational(1));
  for (std::size_t k = 1; k < jf.alphas.size(); ++k) CHECK(jf.alphas[k] == Rational(2));
}

TEST_CASE("depth accounting") {
  CHECK_NOTHROW(stieltjes_expand(rueppel_series(12), 11));
  CHECK_THROWS_AS(stieltjes_expand(rueppel_series(11), 11), Error);
  CHECK_NOTHROW(jacobi_expand(rueppel_series(21), 10));
  CHECK_THROWS_AS(jacobi_expand(rueppel_series(20), 10), Error);
}

TEST_CASE("S and J round trips on random unit series") {
  std::mt19937 rng(9);
  int s_checked = 0;
  int j_checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = convert<Rational>(oracle::random_unit_series(rng, 15));
    try {
      const auto sf = stieltjes_expand(s, 14);
      CHECK(stieltjes_eval(sf, 15) == s);
      ++s_checked;
    } catch (const Error& e) {
      CHECK(e.code() == Errc::SFractionBreakdown);
    }
    const auto jf = jacobi_expand(s, 7);
    if (jf.terminated_at && !jf.finite) continue;  // beta_k = 0 with a nonzero remainder: no J-fraction
    CHECK(jacobi_eval(jf, 15) == s);
    ++j_checked;
  }
  CHECK(s_checked > 70);
  CHECK(j_checked > 90);
}

TEST_CASE("finite fractions terminate") {
  // 1/(1 - x) has alpha_1 = 1 and nothing after.
  const ZS geo(std::vector<Integer>(10, Integer(1)));
  const auto sf = stieltjes_expand(geo, 5);
  CHECK(sf.finite);
  CHECK(sf.alphas == rats({1}));
  const auto jf = jacobi_expand(geo, 4);
  CHECK(jf.terminated_at == std::optional<std::size_t>(1));
  CHECK(jacobi_eval(jf, 10) == convert<Rational>(geo));
}

TEST_CASE("S-fraction over RatFunc for the two-parameter series") {
  const DegreeBoundScope bound(256);
  const auto sf = stieltjes_expand(rueppel_bc_series(10), 6);
  const Poly2 b = Poly2::b();
  const Poly2 c = Poly2::c();
  CHECK(sf.alphas[0] == RatFunc(c));
  CHECK(sf.alphas[1] == RatFunc(-c));
  CHECK(stieltjes_eval(sf, 7) == convert<RatFunc>(rueppel_bc_series(7)));
}

TEST_CASE("tail series") {
  const auto t = tail_series(rueppel_series(12));
  // r(x) = 1/(1 - x T(x)) gives T = (1 - 1/r)/x.
  const ZS direct = shift_left(ZS::one(12) - recip(rueppel_series(12)), 1);
  CHECK(t == direct);
  CHECK(t.coeffs()[0] == Integer(1));
  CHECK_THROWS_AS(tail_series(ZS(std::vector<Integer>{Integer(2), Integer(1)})), Error);
}
