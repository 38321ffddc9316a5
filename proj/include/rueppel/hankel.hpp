#ifndef RUEPPEL_HANKEL_HPP
#define RUEPPEL_HANKEL_HPP

#include <cstddef>
#include <exception>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include <omp.h>

#include "rueppel/error.hpp"
#include "rueppel/matrix.hpp"
#include "rueppel/series.hpp"

namespace rueppel {

/// h_0..h_{n_max}; values[n] is the order-n Hankel determinant det(a_{i+j})_{0<=i,j<=n}.
template <typename R>
using HankelTransform = Sequence<R>;

/// Fraction-free (Bareiss) determinant with row pivoting. Every division is
/// exact in an integral domain; singular matrices give 0.
template <IntegralDomain R>
R det_fraction_free(Matrix<R> m) {
  if (m.rows() != m.cols()) {
    throw Error(Errc::NonSquare, std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  const std::size_t n = m.rows();
  if (n == 0) return R(1);
  bool negate = false;
  R prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t p = k + 1;
      while (p < n && is_zero(m(p, k))) ++p;
      if (p == n) return R(0);
      m.swap_rows(k, p);
      negate = !negate;
    }
    const R& pivot = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const R& lead = m(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        R v = m(i, j) * pivot;
        if (!is_zero(lead) && !is_zero(m(k, j))) v -= lead * m(k, j);
        m(i, j) = prev == R(1) ? std::move(v) : exact_div(v, prev);
      }
    }
    prev = m(k, k);
  }
  R d = m(n - 1, n - 1);
  return negate ? -d : d;
}

/// (n+1)x(n+1) matrix with entry (i, j) = a_{i+j}.
template <Ring R>
Matrix<R> hankel_matrix(std::span<const R> a, std::size_t n) {
  if (a.size() < 2 * n + 1) {
    throw Error(Errc::InsufficientTerms,
                "order " + std::to_string(n) + " needs " + std::to_string(2 * n + 1) + " terms", long(n));
  }
  Matrix<R> m(n + 1, n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) m(i, j) = a[i + j];
  }
  return m;
}

namespace detail {

inline void require_terms(std::size_t have, std::size_t n_max) {
  if (have < 2 * n_max + 1) {
    throw Error(Errc::InsufficientTerms,
                "Hankel order " + std::to_string(n_max) + " needs " + std::to_string(2 * n_max + 1) + " terms, have " +
                    std::to_string(have),
                long(have));
  }
}

// Order-n determinant of an arbitrary-ring sequence, reduced to an integral
// domain by clearing denominators.
template <IntegralDomain R>
R hankel_det(std::span<const R> a, std::size_t n) {
  return det_fraction_free(hankel_matrix(a, n));
}
Rational hankel_det(std::span<const Rational> a, std::size_t n);
RatFunc hankel_det(std::span<const RatFunc> a, std::size_t n);

}  // namespace detail

/// Serial reference: one independent determinant per order.
template <Ring R>
HankelTransform<R> hankel_transform_serial(std::span<const R> a, std::size_t n_max) {
  detail::require_terms(a.size(), n_max);
  HankelTransform<R> h;
  h.terms.resize(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) h.terms[n] = detail::hankel_det(a, n);
  return h;
}

/// OpenMP kernel: the determinants for different orders run concurrently,
/// largest first.
template <Ring R>
HankelTransform<R> hankel_transform(std::span<const R> a, std::size_t n_max) {
  detail::require_terms(a.size(), n_max);
  HankelTransform<R> h;
  h.terms.resize(n_max + 1);
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const long count = long(n_max) + 1;
#pragma omp parallel for schedule(dynamic, 1)
  for (long idx = 0; idx < count; ++idx) {
    const std::size_t n = std::size_t(count - 1 - idx);
    try {
      h.terms[n] = detail::hankel_det(a, n);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return h;
}

template <Ring R>
HankelTransform<R> hankel_transform(const Series<R>& s, std::size_t n_max) {
  return hankel_transform(std::span<const R>(s.coeffs()), n_max);
}
template <Ring R>
HankelTransform<R> hankel_transform(const Sequence<R>& s, std::size_t n_max) {
  return hankel_transform(std::span<const R>(s.terms), n_max);
}
template <Ring R>
HankelTransform<R> hankel_transform_serial(const Series<R>& s, std::size_t n_max) {
  return hankel_transform_serial(std::span<const R>(s.coeffs()), n_max);
}

/// h_n = a0^{n+1} * prod_{k=1..n} beta_k^{n+1-k}; the alphas play no role.
template <Ring F>
HankelTransform<F> hankel_from_jacobi(const F& a0, std::span<const F> betas, std::size_t n_max) {
  if (betas.size() < n_max) {
    throw Error(Errc::InsufficientDepth, "need " + std::to_string(n_max) + " betas", long(betas.size()));
  }
  // h_n / h_{n-1} = a0 * beta_1 * ... * beta_n.
  HankelTransform<F> h;
  h.terms.reserve(n_max + 1);
  F ratio = a0;
  F value = a0;
  h.terms.push_back(value);
  for (std::size_t n = 1; n <= n_max; ++n) {
    ratio = ratio * betas[n - 1];
    value = value * ratio;
    h.terms.push_back(value);
  }
  return h;
}

/// Exponent pattern for the Stieltjes product formula
///   |a_{i+j}|_{0<=i,j<=n-1} = a0^n * prod_k (alpha_{2k-1} alpha_{2k})^{e_k}.
/// `as_printed` uses exponents n, n-2, ..., 2, 1; `consistent` uses n-1, n-2, ..., 1.
enum class StieltjesExponents { as_printed, consistent };

const char* to_string(StieltjesExponents p);

/// Determines the exponent pattern by matching both candidates against
/// Bareiss determinants for c(x) and 1 - x c(x). Computed once.
StieltjesExponents calibrated_stieltjes_exponents();

/// Order-(n-1) Hankel determinant from S-fraction parameters (alphas[0] is alpha_1).
template <Ring F>
F hankel_from_stieltjes(const F& a0, std::span<const F> alphas, std::size_t n,
                        StieltjesExponents pattern = calibrated_stieltjes_exponents()) {
  if (n == 0) return F(1);
  if (n >= 2 && alphas.size() < 2 * n - 2) {
    throw Error(Errc::InsufficientDepth, "need " + std::to_string(2 * n - 2) + " alphas", long(alphas.size()));
  }
  F value(1);
  for (std::size_t i = 0; i < n; ++i) value = value * a0;
  for (std::size_t k = 1; k + 1 <= n; ++k) {
    std::size_t e = n - k;
    if (pattern == StieltjesExponents::as_printed && k == 1) e = n;
    const F pair = alphas[2 * k - 2] * alphas[2 * k - 1];
    for (std::size_t i = 0; i < e; ++i) value = value * pair;
  }
  return value;
}

}  // namespace rueppel

#endif  // RUEPPEL_HANKEL_HPP
