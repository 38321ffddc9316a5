#ifndef RUEPPEL_CFRAC_HPP
#define RUEPPEL_CFRAC_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rueppel/error.hpp"
#include "rueppel/series.hpp"

namespace rueppel {

/// a0 / (1 - alpha_1 x / (1 - alpha_2 x / (1 - ...))).
template <Ring F>
struct SFraction {
  F a0 = F(1);
  std::vector<F> alphas;  // alphas[0] is alpha_1
  /// True when the expansion ended with an exactly zero remainder, so the
  /// fraction is exact at every order.
  bool finite = false;

  std::size_t depth() const noexcept { return alphas.size(); }
};

/// a0 / (1 - alpha_0 x - beta_1 x^2 / (1 - alpha_1 x - beta_2 x^2 / ...)).
template <Ring F>
struct JFraction {
  F a0 = F(1);
  std::vector<F> alphas;  // alphas[k] is alpha_k
  std::vector<F> betas;   // betas[k] is beta_{k+1}
  /// Level k at which beta_{k} came out zero, if it did.
  std::optional<std::size_t> terminated_at;
  /// Termination with a zero remainder: the J-fraction is finite and exact.
  /// Termination with a nonzero remainder means no J-fraction exists past it.
  bool finite = false;

  std::size_t depth() const noexcept { return alphas.size(); }
};

namespace detail {
template <Ring F>
Series<F> one_minus(const Series<F>& s) {
  return Series<F>::one(s.order()) - s;
}
}  // namespace detail

/// Iterated reciprocal-and-shift: g_0 = s/a0, g_k = 1/(1 - alpha_{k+1} x g_{k+1}).
/// Needs depth+1 trusted coefficients. A zero alpha with a nonzero remainder
/// is SFractionBreakdown(k); with a zero remainder the fraction is finite.
template <Ring R>
SFraction<field_of<R>> stieltjes_expand(const Series<R>& s, std::size_t depth) {
  using F = field_of<R>;
  if (s.order() < depth + 1) {
    throw Error(Errc::InsufficientTruncation,
                "S-depth " + std::to_string(depth) + " needs " + std::to_string(depth + 1) + " coefficients",
                long(s.order()));
  }
  const Series<F> sf = convert<F>(s);
  if (is_zero(sf[0])) throw Error(Errc::NonUnitConstantTerm, "constant term is zero");
  SFraction<F> out;
  out.a0 = sf[0];
  Series<F> g = exact_div(F(1), out.a0) * sf;
  for (std::size_t k = 1; k <= depth; ++k) {
    const Series<F> u = detail::one_minus(recip(g));
    const F alpha = u[1];
    if (is_zero(alpha)) {
      if (u.is_zero_from(2)) {
        out.finite = true;
        break;
      }
      throw Error(Errc::SFractionBreakdown, "alpha_" + std::to_string(k) + " is zero with nonzero remainder",
                  long(k));
    }
    out.alphas.push_back(alpha);
    g = exact_div(F(1), alpha) * shift_left(u, 1);
  }
  return out;
}

/// Iterated step g_k = 1/(1 - alpha_k x - beta_{k+1} x^2 g_{k+1}).
/// J-depth d (d alphas, d betas) needs 2d+1 trusted coefficients. A zero beta
/// ends the expansion and is recorded in `terminated_at`, never thrown.
template <Ring R>
JFraction<field_of<R>> jacobi_expand(const Series<R>& s, std::size_t depth) {
  using F = field_of<R>;
  if (s.order() < 2 * depth + 1) {
    throw Error(Errc::InsufficientTruncation,
                "J-depth " + std::to_string(depth) + " needs " + std::to_string(2 * depth + 1) + " coefficients",
                long(s.order()));
  }
  const Series<F> sf = convert<F>(s);
  if (is_zero(sf[0])) throw Error(Errc::NonUnitConstantTerm, "constant term is zero");
  JFraction<F> out;
  out.a0 = sf[0];
  Series<F> g = exact_div(F(1), out.a0) * sf;
  for (std::size_t k = 0; k < depth; ++k) {
    const Series<F> u = recip(g);
    const F alpha = -u[1];
    const F beta = -u[2];
    out.alphas.push_back(alpha);
    if (is_zero(beta)) {
      out.terminated_at = k + 1;
      out.finite = u.is_zero_from(3);
      break;
    }
    out.betas.push_back(beta);
    const Series<F> rest = Series<F>::one(u.order()) - Series<F>::monomial(alpha, 1, u.order()) - u;
    g = exact_div(F(1), beta) * shift_left(rest, 2);
  }
  return out;
}

/// Bottom-up evaluation; InsufficientDepth unless the fraction is finite or
/// depth covers the requested order (order <= depth + 1).
template <Ring F>
Series<F> stieltjes_eval(const SFraction<F>& f, std::size_t order) {
  if (!f.finite && order > f.depth() + 1) {
    throw Error(Errc::InsufficientDepth,
                "S-depth " + std::to_string(f.depth()) + " determines " + std::to_string(f.depth() + 1) +
                    " coefficients, asked for " + std::to_string(order),
                long(order));
  }
  Series<F> g = Series<F>::one(order);
  const Series<F> x = Series<F>::x(order);
  for (std::size_t k = f.depth(); k-- > 0;) {
    g = recip(Series<F>::one(order) - f.alphas[k] * (x * g));
  }
  return f.a0 * g;
}

/// Bottom-up evaluation; a non-finite J-fraction of depth d determines
/// 2d+1 coefficients.
template <Ring F>
Series<F> jacobi_eval(const JFraction<F>& j, std::size_t order) {
  if (!j.finite && order > 2 * j.depth() + 1) {
    throw Error(Errc::InsufficientDepth,
                "J-depth " + std::to_string(j.depth()) + " determines " + std::to_string(2 * j.depth() + 1) +
                    " coefficients, asked for " + std::to_string(order),
                long(order));
  }
  Series<F> g = Series<F>::one(order);
  const Series<F> x = Series<F>::x(order);
  const Series<F> x2 = Series<F>::monomial(F(1), 2, order);
  for (std::size_t k = j.depth(); k-- > 0;) {
    Series<F> denom = Series<F>::one(order) - j.alphas[k] * x;
    if (k < j.betas.size()) denom = denom - j.betas[k] * (x2 * g);
    g = recip(denom);
  }
  return j.a0 * g;
}

/// g1 with s = 1/(1 - alpha_1 x g1), alpha_1 = [x]s. Requires s(0) = 1; the
/// division by alpha_1 must be exact in the coefficient ring.
template <Ring R>
Series<R> tail_series(const Series<R>& s) {
  if (s.order() < 2) throw Error(Errc::InsufficientTruncation, "tail needs two coefficients");
  if (!(s[0] == R(1))) throw Error(Errc::BadLeadingTerm, "tail needs s(0) = 1");
  const R alpha = s[1];
  if (is_zero(alpha)) throw Error(Errc::SFractionBreakdown, "alpha_1 is zero", 1);
  const Series<R> u = shift_left(detail::one_minus(recip(s)), 1);
  std::vector<R> out;
  out.reserve(u.order());
  for (const auto& v : u.coeffs()) out.push_back(exact_div(v, alpha));
  return Series<R>(std::move(out));
}

}  // namespace rueppel

#endif  // RUEPPEL_CFRAC_HPP
