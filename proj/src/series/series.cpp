#include "rueppel/series.hpp"

namespace rueppel {

Series<Poly2> rueppel_bc_series(std::size_t order) {
  std::vector<Poly2> r(order, Poly2(0));
  if (order > 0) r[0] = Poly2(1);
  if (order > 1) r[1] = Poly2::c();
  for (std::size_t n = 3; n < order; ++n) {
    if (is_power_of_two(n + 1)) r[n] = Poly2::b();
  }
  return Series<Poly2>(std::move(r));
}

}  // namespace rueppel
