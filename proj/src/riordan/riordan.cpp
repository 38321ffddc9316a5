#include "rueppel/riordan.hpp"

namespace rueppel {

Series<Poly2> riordan_bivariate(const Series<Integer>& g, const Series<Integer>& f) {
  const std::size_t n = std::min(g.order(), f.order());
  detail::check_riordan(g, f, n);
  const auto gp = convert<Poly2>(g.truncated(n));
  const auto fp = convert<Poly2>(f.truncated(n));
  return gp * recip(Series<Poly2>::one(n) - Poly2::b() * fp);
}

Matrix<Integer> coeff_array(const Series<Poly2>& family, std::size_t max_deg) {
  Matrix<Integer> m(family.order(), max_deg + 1);
  for (std::size_t n = 0; n < family.order(); ++n) {
    for (const Term& t : family[n].terms()) {
      if (t.mono.c_exp != 0) {
        throw Error(Errc::UnexpectedVariable, "term " + std::to_string(n) + " involves c", long(n));
      }
      if (t.mono.b_exp > max_deg) {
        throw Error(Errc::DegreeBoundExceeded,
                    "term " + std::to_string(n) + " has b-degree " + std::to_string(t.mono.b_exp), long(n));
      }
      m(n, t.mono.b_exp) = t.coeff;
    }
  }
  return m;
}

}  // namespace rueppel
