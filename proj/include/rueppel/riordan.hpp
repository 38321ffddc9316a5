#ifndef RUEPPEL_RIORDAN_HPP
#define RUEPPEL_RIORDAN_HPP

#include <cstddef>
#include <exception>
#include <mutex>
#include <string>
#include <vector>

#include <omp.h>

#include "rueppel/error.hpp"
#include "rueppel/matrix.hpp"
#include "rueppel/series.hpp"

namespace rueppel {

/// (g, f) with g(0) != 0 and f(0) = 0. ord(f) > 1 gives a stretched array.
template <Ring R>
struct RiordanPair {
  Series<R> g;
  Series<R> f;
};

namespace detail {

template <Ring R>
void check_riordan(const Series<R>& g, const Series<R>& f, std::size_t n) {
  if (g.order() == 0 || is_zero(g[0])) throw Error(Errc::BadOrder, "g(0) must be nonzero");
  if (f.order() == 0 || !is_zero(f[0])) throw Error(Errc::BadOrder, "f(0) must be zero");
  if (g.order() < n || f.order() < n) {
    throw Error(Errc::InsufficientTruncation, "matrix order " + std::to_string(n) + " exceeds series truncation",
                long(std::min(g.order(), f.order())));
  }
}

template <Ring R>
std::vector<Series<R>> powers(const Series<R>& f, std::size_t n) {
  std::vector<Series<R>> p;
  p.reserve(n);
  p.push_back(Series<R>::one(n));
  for (std::size_t k = 1; k < n; ++k) p.push_back(p.back() * f.truncated(n));
  return p;
}

}  // namespace detail

/// Serial reference: m_{n,k} = [x^n] g f^k for 0 <= n, k < order.
template <Ring R>
Matrix<R> riordan_build_serial(const Series<R>& g, const Series<R>& f, std::size_t order) {
  detail::check_riordan(g, f, order);
  Matrix<R> m(order, order);
  Series<R> col = g.truncated(order);
  for (std::size_t k = 0; k < order; ++k) {
    for (std::size_t n = 0; n < order; ++n) m(n, k) = col[n];
    col = col * f.truncated(order);
  }
  return m;
}

/// Columns g f^k are independent once the powers of f are known; they are
/// multiplied out concurrently.
template <Ring R>
Matrix<R> riordan_build(const Series<R>& g, const Series<R>& f, std::size_t order) {
  detail::check_riordan(g, f, order);
  const auto pw = detail::powers(f, order);
  const Series<R> gt = g.truncated(order);
  Matrix<R> m(order, order);
  std::exception_ptr failure;
  std::mutex failure_mutex;
#pragma omp parallel for schedule(dynamic, 1)
  for (long k = 0; k < long(order); ++k) {
    try {
      const Series<R> col = gt * pw[std::size_t(k)];
      for (std::size_t n = 0; n < order; ++n) m(n, std::size_t(k)) = col[n];
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return m;
}

template <Ring R>
Matrix<R> riordan_build(const RiordanPair<R>& p, std::size_t order) {
  return riordan_build(p.g, p.f, order);
}

/// Fundamental theorem: (g, f) . h = g(x) h(f(x)).
template <Ring R>
Series<R> riordan_apply(const Series<R>& g, const Series<R>& f, const Series<R>& h) {
  const std::size_t n = std::min({g.order(), f.order(), h.order()});
  detail::check_riordan(g, f, n);
  return g.truncated(n) * compose(h.truncated(n), f.truncated(n));
}

/// Matrix times the coefficient vector of h, as a series.
template <Ring R>
Series<R> matrix_apply(const Matrix<R>& m, const Series<R>& h) {
  const std::size_t n = std::min(m.rows(), h.order());
  std::vector<R> out(n, R(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < std::min(m.cols(), h.order()); ++k) {
      if (!is_zero(m(i, k)) && !is_zero(h[k])) out[i] += m(i, k) * h[k];
    }
  }
  return Series<R>(std::move(out));
}

/// Riordan group product (g1, f1) * (g2, f2) = (g1 g2(f1), f2(f1)).
template <Ring R>
RiordanPair<R> riordan_multiply(const RiordanPair<R>& a, const RiordanPair<R>& b) {
  return RiordanPair<R>{a.g * compose(b.g, a.f), compose(b.f, a.f)};
}

/// Bivariate generating function g / (1 - y f) with y carried by the Poly2
/// indeterminate b: coefficient of x^n b^k is m_{n,k}.
Series<Poly2> riordan_bivariate(const Series<Integer>& g, const Series<Integer>& f);

/// Row n lists the b-coefficients of term n. The family must not involve c.
Matrix<Integer> coeff_array(const Series<Poly2>& family, std::size_t max_deg);

/// Rows shifted up by one; TooSmall below two rows.
template <typename R>
Matrix<R> strip_first_row(const Matrix<R>& m) {
  if (m.rows() < 2) throw Error(Errc::TooSmall, "need at least two rows");
  Matrix<R> out(m.rows() - 1, m.cols());
  for (std::size_t i = 1; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i - 1, j) = m(i, j);
  }
  return out;
}

/// INVERT(t): A(x) -> A(x) / (1 - t x A(x)). Requires a_0 = 1.
template <Ring R>
Sequence<R> invert_transform(const Sequence<R>& a, const R& t) {
  if (a.terms.empty() || !(a.terms.front() == R(1))) throw Error(Errc::BadLeadingTerm, "INVERT needs a_0 = 1");
  const Series<R> A(a.terms);
  const std::size_t n = A.order();
  const Series<R> denom = Series<R>::one(n) - t * (Series<R>::x(n) * A);
  return Sequence<R>{(A * recip(denom)).coeffs(), a.offset};
}

}  // namespace rueppel

#endif  // RUEPPEL_RIORDAN_HPP
