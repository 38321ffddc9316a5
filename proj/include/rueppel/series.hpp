#ifndef RUEPPEL_SERIES_HPP
#define RUEPPEL_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rueppel/error.hpp"
#include "rueppel/ring.hpp"

namespace rueppel {

/// Finite sequence prefix with an explicit starting index.
template <Ring R>
struct Sequence {
  std::vector<R> terms;
  long offset = 0;

  std::size_t size() const noexcept { return terms.size(); }
  /// Term with sequence index `n` (not position); InsufficientTerms if outside.
  const R& at(long n) const {
    if (n < offset || n - offset >= long(terms.size())) {
      throw Error(Errc::InsufficientTerms, "index " + std::to_string(n) + " outside known range", n);
    }
    return terms[std::size_t(n - offset)];
  }
  friend bool operator==(const Sequence&, const Sequence&) = default;
};

/// Truncated formal power series. Coefficients 0..order()-1 are trusted;
/// nothing beyond is ever reported.
template <Ring R>
class Series {
 public:
  Series() = default;
  explicit Series(std::vector<R> coeffs) : c_(std::move(coeffs)) {}

  static Series zero(std::size_t order) { return Series(std::vector<R>(order, R(0))); }
  static Series constant(const R& v, std::size_t order) {
    Series s = zero(order);
    if (order > 0) s.c_[0] = v;
    return s;
  }
  static Series one(std::size_t order) { return constant(R(1), order); }
  /// coeff * x^k truncated at `order`.
  static Series monomial(const R& coeff, std::size_t k, std::size_t order) {
    Series s = zero(order);
    if (k < order) s.c_[k] = coeff;
    return s;
  }
  static Series x(std::size_t order) { return monomial(R(1), 1, order); }

  std::size_t order() const noexcept { return c_.size(); }
  const R& operator[](std::size_t i) const {
    if (i >= c_.size()) {
      throw Error(Errc::InsufficientTruncation,
                  "coefficient " + std::to_string(i) + " beyond truncation order " + std::to_string(c_.size()),
                  long(i));
    }
    return c_[i];
  }
  const std::vector<R>& coeffs() const noexcept { return c_; }
  Sequence<R> to_sequence(long offset = 0) const { return Sequence<R>{c_, offset}; }

  Series truncated(std::size_t order) const {
    Series s = *this;
    if (order < s.c_.size()) s.c_.resize(order);
    return s;
  }

  /// True when every trusted coefficient from `from` on is zero.
  bool is_zero_from(std::size_t from) const {
    for (std::size_t i = from; i < c_.size(); ++i) {
      if (!is_zero(c_[i])) return false;
    }
    return true;
  }

  friend Series operator+(const Series& a, const Series& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<R> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = a.c_[i] + b.c_[i];
    return Series(std::move(out));
  }
  friend Series operator-(const Series& a, const Series& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<R> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = a.c_[i] - b.c_[i];
    return Series(std::move(out));
  }
  friend Series operator-(const Series& a) {
    std::vector<R> out(a.order());
    for (std::size_t i = 0; i < a.order(); ++i) out[i] = -a.c_[i];
    return Series(std::move(out));
  }
  friend Series operator*(const Series& a, const Series& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<R> out(n, R(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; i + j < n; ++j) {
        if (!is_zero(b.c_[j])) out[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return Series(std::move(out));
  }
  friend Series operator*(const R& k, const Series& a) {
    std::vector<R> out(a.order());
    for (std::size_t i = 0; i < a.order(); ++i) out[i] = k * a.c_[i];
    return Series(std::move(out));
  }

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<R> c_;
};

/// series_arith over two series of the same ring; result truncation is the min.
enum class SeriesOp { add, sub, mul };
template <Ring R>
Series<R> series_arith(const Series<R>& s, const Series<R>& t, SeriesOp op) {
  switch (op) {
    case SeriesOp::add: return s + t;
    case SeriesOp::sub: return s - t;
    case SeriesOp::mul: return s * t;
  }
  return s;
}

/// 1/s to the truncation order of s. NonUnitConstantTerm unless s(0) is a unit.
template <Ring R>
Series<R> recip(const Series<R>& s) {
  const std::size_t n = s.order();
  if (n == 0) return s;
  const R& a0 = s[0];
  if (!is_unit(a0)) throw Error(Errc::NonUnitConstantTerm, "constant term " + to_string(a0) + " is not a unit");
  std::vector<R> r(n, R(0));
  r[0] = exact_div(R(1), a0);
  const bool monic = a0 == R(1);
  for (std::size_t k = 1; k < n; ++k) {
    R acc(0);
    for (std::size_t i = 1; i <= k; ++i) {
      if (!is_zero(s[i]) && !is_zero(r[k - i])) acc += s[i] * r[k - i];
    }
    r[k] = monic ? -acc : exact_div(-acc, a0);
  }
  return Series<R>(std::move(r));
}

/// s / t as s * recip(t).
template <Ring R>
Series<R> divide(const Series<R>& s, const Series<R>& t) {
  return s * recip(t);
}

/// s^e with the truncation order of s.
template <Ring R>
Series<R> power(const Series<R>& s, unsigned e) {
  Series<R> acc = Series<R>::one(s.order());
  for (unsigned i = 0; i < e; ++i) acc = acc * s;
  return acc;
}

/// s(x^k); truncation order becomes k times the input order.
template <Ring R>
Series<R> compose_xk(const Series<R>& s, std::size_t k) {
  if (k == 0) throw Error(Errc::BadOrder, "compose_xk needs k >= 1");
  std::vector<R> out(s.order() * k, R(0));
  for (std::size_t n = 0; n < s.order(); ++n) out[n * k] = s[n];
  return Series<R>(std::move(out));
}

/// h(f(x)) by Horner's rule; f(0) must vanish (BadOrder otherwise).
template <Ring R>
Series<R> compose(const Series<R>& h, const Series<R>& f) {
  if (f.order() > 0 && !is_zero(f[0])) throw Error(Errc::BadOrder, "inner series must have zero constant term");
  const std::size_t n = std::min(h.order(), f.order());
  Series<R> acc = Series<R>::zero(n);
  for (std::size_t k = n; k-- > 0;) acc = Series<R>::constant(h[k], n) + f.truncated(n) * acc;
  return acc;
}

/// Drops the first k coefficients: term n of the result is term n+k.
template <Ring R>
Series<R> shift_left(const Series<R>& s, std::size_t k) {
  if (k > s.order()) throw Error(Errc::InsufficientTruncation, "shift past truncation order");
  return Series<R>(std::vector<R>(s.coeffs().begin() + long(k), s.coeffs().end()));
}

/// Multiplies by x^k: prepends k zeros, order grows by k.
template <Ring R>
Series<R> shift_right(const Series<R>& s, std::size_t k) {
  std::vector<R> out(k, R(0));
  out.insert(out.end(), s.coeffs().begin(), s.coeffs().end());
  return Series<R>(std::move(out));
}

/// Sequence-level shift: term n of the result is term n+k of the input.
/// Positive k shifts left (r_{n+1} from r_n); negative k prepends zeros.
template <Ring R>
Series<R> series_shift(const Series<R>& s, long k) {
  return k >= 0 ? shift_left(s, std::size_t(k)) : shift_right(s, std::size_t(-k));
}

/// Coefficient-wise conversion between rings (e.g. Integer -> Rational).
template <Ring To, Ring From>
Series<To> convert(const Series<From>& s) {
  std::vector<To> out;
  out.reserve(s.order());
  for (const auto& v : s.coeffs()) out.push_back(To(v));
  return Series<To>(std::move(out));
}

template <Ring To, typename From, typename F>
Series<To> map_coeffs(const Series<From>& s, F&& f) {
  std::vector<To> out;
  out.reserve(s.order());
  for (const auto& v : s.coeffs()) out.push_back(f(v));
  return Series<To>(std::move(out));
}

/// Catalan generating function from c = 1 + x c^2, coefficient by coefficient.
template <Ring R = Integer>
Series<R> catalan_series(std::size_t order) {
  std::vector<R> c(order, R(0));
  if (order == 0) return Series<R>(c);
  c[0] = R(1);
  for (std::size_t k = 1; k < order; ++k) {
    R acc(0);
    for (std::size_t i = 0; i < k; ++i) acc += c[i] * c[k - 1 - i];
    c[k] = acc;
  }
  return Series<R>(std::move(c));
}

/// Motzkin generating function from m = 1 + x m + x^2 m^2.
template <Ring R = Integer>
Series<R> motzkin_series(std::size_t order) {
  std::vector<R> m(order, R(0));
  if (order == 0) return Series<R>(m);
  m[0] = R(1);
  for (std::size_t k = 1; k < order; ++k) {
    R acc = m[k - 1];
    for (std::size_t i = 0; i + 2 <= k; ++i) acc += m[i] * m[k - 2 - i];
    m[k] = acc;
  }
  return Series<R>(std::move(m));
}

inline bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

/// r(x) = sum_k x^(2^k - 1).
template <Ring R = Integer>
Series<R> rueppel_series(std::size_t order) {
  std::vector<R> r(order, R(0));
  for (std::size_t n = 0; n < order; ++n) {
    if (is_power_of_two(n + 1)) r[n] = R(1);
  }
  return Series<R>(std::move(r));
}

/// r_{b,c}(x) = 1 + c x + b (x^3 + x^7 + x^15 + ...), over Poly2.
Series<Poly2> rueppel_bc_series(std::size_t order);

}  // namespace rueppel

#endif  // RUEPPEL_SERIES_HPP
