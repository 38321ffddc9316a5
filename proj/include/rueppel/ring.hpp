#ifndef RUEPPEL_RING_HPP
#define RUEPPEL_RING_HPP

#include <concepts>
#include <string>

#include "rueppel/integer.hpp"
#include "rueppel/poly2.hpp"

namespace rueppel {

/// Exact commutative ring with an exact-division partial operation.
template <typename R>
concept Ring = std::regular<R> && requires(const R& a, const R& b) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { exact_div(a, b) } -> std::convertible_to<R>;
  { to_string(a) } -> std::convertible_to<std::string>;
  R(0);
  R(1);
};

/// Fraction field of each coefficient ring.
template <typename R> struct FractionField;
template <> struct FractionField<Integer> { using type = Rational; };
template <> struct FractionField<Rational> { using type = Rational; };
template <> struct FractionField<Poly2> { using type = RatFunc; };
template <> struct FractionField<RatFunc> { using type = RatFunc; };
template <typename R> using field_of = typename FractionField<R>::type;

/// Integral domains on which fraction-free elimination runs.
template <typename R>
concept IntegralDomain = Ring<R> && (std::same_as<R, Integer> || std::same_as<R, Poly2>);

inline bool is_unit(const Integer& a) { return a == Integer(1) || a == Integer(-1); }
inline bool is_unit(const Poly2& a) { return a == Poly2(1) || a == Poly2(-1); }
inline bool is_unit(const Rational& a) { return !a.is_zero(); }
inline bool is_unit(const RatFunc& a) { return !a.is_zero(); }

inline const char* ring_name(const Integer*) { return "int"; }
inline const char* ring_name(const Rational*) { return "rat"; }
inline const char* ring_name(const Poly2*) { return "poly-bc"; }
inline const char* ring_name(const RatFunc*) { return "ratfunc-bc"; }
template <typename R> const char* ring_name() { return ring_name(static_cast<const R*>(nullptr)); }

}  // namespace rueppel

#endif  // RUEPPEL_RING_HPP
