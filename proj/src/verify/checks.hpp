#ifndef RUEPPEL_SRC_VERIFY_CHECKS_HPP
#define RUEPPEL_SRC_VERIFY_CHECKS_HPP

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "rueppel/hankel.hpp"
#include "rueppel/integer.hpp"
#include "rueppel/poly2.hpp"
#include "rueppel/series.hpp"
#include "rueppel/verify.hpp"

namespace rueppel::checks {

using ZS = Series<Integer>;
using Ints = std::vector<Integer>;
using Rats = std::vector<Rational>;

Ints ints(std::initializer_list<long> v);
Rats rats(std::initializer_list<std::string_view> v);

inline ZS one(std::size_t n) { return ZS::one(n); }
inline ZS xpow(std::size_t k, std::size_t n) { return ZS::monomial(Integer(1), k, n); }
inline ZS r(std::size_t n) { return rueppel_series(n); }
inline ZS c(std::size_t n) { return catalan_series(n); }
/// s(x^k), truncated to n coefficients.
ZS at_xk(const ZS& s, std::size_t k, std::size_t n);
inline ZS at_x2(const ZS& s, std::size_t n) { return at_xk(s, 2, n); }

/// First n coefficients (fewer if the series is shorter).
Ints coeffs(const ZS& s, std::size_t n);
/// Hankel transform h_0..h_nmax.
Ints hankel(const ZS& s, std::size_t n_max);
Ints hankel(const Ints& a, std::size_t n_max);

/// (-1)^binom(n,2)
inline int sign_binom2(long n) { return (n % 4 == 0 || n % 4 == 1) ? 1 : -1; }
/// (-1)^binom(n+1,2)
inline int sign_binom2_next(long n) { return sign_binom2(n + 1); }

std::string join(const Ints& v, std::size_t limit = 24);

/// Sign word of values[first..], compared in absolute value with target.
SignProfile sign_profile(std::string target, long first_index, const Ints& values, const Ints& target_values);

void add_hankel_checks(std::vector<CheckInfo>& out);
void add_polynomial_checks(std::vector<CheckInfo>& out);
void add_sequence_checks(std::vector<CheckInfo>& out);

}  // namespace rueppel::checks

#endif  // RUEPPEL_SRC_VERIFY_CHECKS_HPP
