#include "rueppel/hankel.hpp"

#include <algorithm>

namespace rueppel {

namespace detail {

Rational hankel_det(std::span<const Rational> a, std::size_t n) {
  const std::size_t used = 2 * n + 1;
  Integer scale(1);
  for (std::size_t i = 0; i < used; ++i) scale = lcm(scale, a[i].den());
  if (scale.is_zero()) scale = Integer(1);
  std::vector<Integer> ints;
  ints.reserve(used);
  for (std::size_t i = 0; i < used; ++i) ints.push_back(exact_div(a[i].num() * scale, a[i].den()));
  const Integer d = det_fraction_free(hankel_matrix(std::span<const Integer>(ints), n));
  return Rational(d, scale.pow(n + 1));
}

RatFunc hankel_det(std::span<const RatFunc> a, std::size_t n) {
  const std::size_t used = 2 * n + 1;
  // Common multiple of the denominators: a true lcm when all are monomials,
  // otherwise the product of the distinct ones.
  std::vector<Poly2> dens;
  bool all_monomial = true;
  for (std::size_t i = 0; i < used; ++i) {
    const Poly2& d = a[i].den();
    if (std::find(dens.begin(), dens.end(), d) == dens.end()) dens.push_back(d);
    all_monomial = all_monomial && d.is_monomial();
  }
  Poly2 scale(1);
  if (all_monomial) {
    Monomial m{};
    Integer k(1);
    for (const auto& d : dens) {
      m.b_exp = std::max(m.b_exp, d.leading().mono.b_exp);
      m.c_exp = std::max(m.c_exp, d.leading().mono.c_exp);
      k = lcm(k, d.leading().coeff);
    }
    scale = Poly2::monomial(k, m.b_exp, m.c_exp);
  } else {
    for (const auto& d : dens) scale *= d;
  }
  std::vector<Poly2> polys;
  polys.reserve(used);
  for (std::size_t i = 0; i < used; ++i) polys.push_back(exact_div(a[i].num() * scale, a[i].den()));
  const Poly2 d = det_fraction_free(hankel_matrix(std::span<const Poly2>(polys), n));
  Poly2 denom(1);
  for (std::size_t i = 0; i <= n; ++i) denom *= scale;
  return RatFunc(d, denom);
}

}  // namespace detail

const char* to_string(StieltjesExponents p) {
  return p == StieltjesExponents::as_printed ? "as_printed(n, n-2, ..., 2, 1)" : "consistent(n-1, n-2, ..., 2, 1)";
}

namespace {

// S-fraction parameters by direct reciprocal-and-shift expansion; kept local
// so hankel does not depend on cfrac.
std::vector<Rational> stieltjes_params(const Series<Rational>& s, std::size_t depth) {
  std::vector<Rational> alphas;
  Series<Rational> g = Rational(1) / s[0] * s;
  for (std::size_t k = 0; k < depth; ++k) {
    const Series<Rational> u = Series<Rational>::one(g.order()) - recip(g);
    const Rational alpha = u[1];
    alphas.push_back(alpha);
    if (alpha.is_zero()) break;
    g = (Rational(1) / alpha) * shift_left(u, 1);
  }
  return alphas;
}

bool pattern_matches(StieltjesExponents pattern, const Series<Rational>& s, std::size_t max_n) {
  const auto alphas = stieltjes_params(s, 2 * max_n);
  const auto h = hankel_transform_serial(s, max_n - 1);
  for (std::size_t n = 1; n <= max_n; ++n) {
    if (hankel_from_stieltjes(s[0], std::span<const Rational>(alphas), n, pattern) != h.terms[n - 1]) return false;
  }
  return true;
}

StieltjesExponents calibrate() {
  constexpr std::size_t kOrder = 24;
  constexpr std::size_t kMaxN = 6;
  const auto c = convert<Rational>(catalan_series(kOrder));
  const auto one_minus_xc = Series<Rational>::one(kOrder) - Series<Rational>::x(kOrder) * c;
  for (auto pattern : {StieltjesExponents::consistent, StieltjesExponents::as_printed}) {
    if (pattern_matches(pattern, c, kMaxN) && pattern_matches(pattern, one_minus_xc, kMaxN)) return pattern;
  }
  throw Error(Errc::InsufficientDepth, "no Stieltjes exponent pattern matches the determinant path");
}

}  // namespace

StieltjesExponents calibrated_stieltjes_exponents() {
  static const StieltjesExponents pattern = calibrate();
  return pattern;
}

}  // namespace rueppel
