// Independent oracles and random generators shared by the unit tests and the
// acceptance binary. Nothing here calls the code under test.

#ifndef RUEPPEL_TESTS_ORACLE_HPP
#define RUEPPEL_TESTS_ORACLE_HPP

#include <random>
#include <vector>

#include "rueppel/matrix.hpp"
#include "rueppel/poly2.hpp"
#include "rueppel/series.hpp"

namespace oracle {

using rueppel::Integer;
using rueppel::Matrix;
using rueppel::Poly2;

/// Laplace expansion along the first row.
template <typename R>
R cofactor_det(const Matrix<R>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return R(1);
  if (n == 1) return m(0, 0);
  R acc(0);
  for (std::size_t j = 0; j < n; ++j) {
    Matrix<R> minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t k = 0, c = 0; k < n; ++k) {
        if (k != j) minor(i - 1, c++) = m(i, k);
      }
    }
    const R term = m(0, j) * cofactor_det(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

inline Integer random_int(std::mt19937& rng, long lo, long hi) {
  return Integer(std::uniform_int_distribution<long>(lo, hi)(rng));
}

inline Matrix<Integer> random_int_matrix(std::mt19937& rng, std::size_t n, long bound = 9) {
  Matrix<Integer> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_int(rng, -bound, bound);
  }
  return m;
}

/// Up to `terms` monomials b^i c^j with i, j <= max_exp and small coefficients.
inline Poly2 random_poly2(std::mt19937& rng, unsigned terms = 3, unsigned max_exp = 2) {
  std::uniform_int_distribution<unsigned> e(0, max_exp);
  Poly2 p;
  for (unsigned t = 0; t < terms; ++t) p += Poly2::monomial(random_int(rng, -3, 3), e(rng), e(rng));
  return p;
}

inline Matrix<Poly2> random_poly2_matrix(std::mt19937& rng, std::size_t n) {
  Matrix<Poly2> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_poly2(rng);
  }
  return m;
}

/// Constant term 1, other coefficients in [-bound, bound].
inline rueppel::Series<Integer> random_unit_series(std::mt19937& rng, std::size_t order, long bound = 5) {
  std::vector<Integer> c(order);
  for (std::size_t i = 0; i < order; ++i) c[i] = i == 0 ? Integer(1) : random_int(rng, -bound, bound);
  return rueppel::Series<Integer>(std::move(c));
}

/// Motzkin paths of length n by dynamic programming over heights.
inline std::vector<Integer> motzkin_paths(std::size_t count) {
  std::vector<Integer> out;
  for (std::size_t n = 0; n < count; ++n) {
    std::vector<Integer> h(n + 2, Integer(0));
    h[0] = 1;
    for (std::size_t step = 0; step < n; ++step) {
      std::vector<Integer> next(n + 2, Integer(0));
      for (std::size_t k = 0; k <= n; ++k) {
        if (h[k].is_zero()) continue;
        next[k] += h[k];
        next[k + 1] += h[k];
        if (k > 0) next[k - 1] += h[k];
      }
      h = std::move(next);
    }
    out.push_back(h[0]);
  }
  return out;
}

/// binom(2n, n) / (n + 1) from the product formula.
inline std::vector<Integer> catalan_numbers(std::size_t count) {
  std::vector<Integer> out;
  Integer c(1);
  for (std::size_t n = 0; n < count; ++n) {
    out.push_back(c);
    c = rueppel::exact_div(c * Integer(long(2 * (2 * n + 1))), Integer(long(n + 2)));
  }
  return out;
}

}  // namespace oracle

#endif  // RUEPPEL_TESTS_ORACLE_HPP
