// Serial reference kernels against their OpenMP versions.
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "rueppel/hankel.hpp"
#include "rueppel/poly2.hpp"
#include "rueppel/riordan.hpp"
#include "rueppel/series.hpp"

using namespace rueppel;

namespace {

template <typename F>
double seconds(F&& f, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

void report(const char* name, double serial, double parallel, bool same) {
  std::printf("%-34s serial %9.4fs  parallel %9.4fs  speedup %5.2fx  %s\n", name, serial, parallel,
              serial / parallel, same ? "agree" : "DISAGREE");
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t n = argc > 1 ? std::size_t(std::atoi(argv[1])) : 60;
  const int reps = argc > 2 ? std::atoi(argv[2]) : 3;

  const auto r = rueppel_series(2 * n + 1);
  HankelTransform<Integer> hs, hp;
  const double hs_t = seconds([&] { hs = hankel_transform_serial(r, n); }, reps);
  const double hp_t = seconds([&] { hp = hankel_transform(r, n); }, reps);
  report("Hankel transform of r(x)", hs_t, hp_t, hs.terms == hp.terms);

  const std::size_t pn = n / 4;
  const DegreeBoundScope bound(unsigned(8 * pn + 64));
  const auto rbc = rueppel_bc_series(2 * pn + 1);
  HankelTransform<Poly2> ps, pp;
  const double ps_t = seconds([&] { ps = hankel_transform_serial(rbc, pn); }, 1);
  const double pp_t = seconds([&] { pp = hankel_transform(rbc, pn); }, 1);
  report("Hankel transform of r_{b,c}(x)", ps_t, pp_t, ps.terms == pp.terms);

  const std::size_t rows = 4 * n;
  const auto g = catalan_series(rows);
  const auto f = Series<Integer>::x(rows) * rueppel_series(rows);
  Matrix<Integer> ms, mp;
  const double rs_t = seconds([&] { ms = riordan_build_serial(g, f, rows); }, reps);
  const double rp_t = seconds([&] { mp = riordan_build(g, f, rows); }, reps);
  report("Riordan array (c(x), x r(x))", rs_t, rp_t, ms == mp);
  return 0;
}
