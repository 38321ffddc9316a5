#ifndef RUEPPEL_INTEGER_HPP
#define RUEPPEL_INTEGER_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rueppel {

/// Arbitrary-precision integer. Thin value wrapper over mpz_class so generic
/// code never sees GMP expression templates.
class Integer {
 public:
  Integer() = default;
  Integer(long v) : v_(v) {}                 // NOLINT(google-explicit-constructor)
  Integer(int v) : v_(v) {}                  // NOLINT(google-explicit-constructor)
  Integer(long long v);                      // NOLINT(google-explicit-constructor)
  explicit Integer(const mpz_class& v) : v_(v) {}
  explicit Integer(std::string_view text);

  const mpz_class& raw() const noexcept { return v_; }

  int sign() const noexcept { return sgn(v_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_one() const noexcept { return v_ == 1; }
  bool fits_long() const noexcept { return v_.fits_slong_p(); }
  long to_long() const noexcept { return v_.get_si(); }
  std::string str() const { return v_.get_str(); }

  Integer abs() const { return Integer(mpz_class(::abs(v_))); }
  Integer pow(unsigned long e) const;

  Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
  Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
  Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }

  friend Integer operator+(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ + b.v_)); }
  friend Integer operator-(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ - b.v_)); }
  friend Integer operator*(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ * b.v_)); }
  friend Integer operator-(const Integer& a) { return Integer(mpz_class(-a.v_)); }

  friend bool operator==(const Integer& a, const Integer& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Integer& a) { return os << a.v_; }

 private:
  mpz_class v_;
};

/// Throws InexactDivision / DivisionByZero.
Integer exact_div(const Integer& a, const Integer& b);
/// Remainder in [0, |m|).
Integer mod_floor(const Integer& a, const Integer& m);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
/// Exact integer square root; returns false when `a` is negative or not a square.
bool exact_sqrt(const Integer& a, Integer& root);

inline bool is_zero(const Integer& a) { return a.is_zero(); }
inline std::string to_string(const Integer& a) { return a.str(); }

/// Reduced fraction with positive denominator; canonical zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}                      // NOLINT(google-explicit-constructor)
  Rational(int v) : v_(v) {}                       // NOLINT(google-explicit-constructor)
  Rational(const Integer& v) : v_(v.raw()) {}      // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
  explicit Rational(std::string_view text);

  Integer num() const { return Integer(v_.get_num()); }
  Integer den() const { return Integer(v_.get_den()); }
  const mpq_class& raw() const noexcept { return v_; }

  int sign() const noexcept { return sgn(v_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_integer() const noexcept { return v_.get_den() == 1; }
  std::string str() const { return v_.get_str(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.v_; }

 private:
  mpq_class v_;
};

/// Field division; DivisionByZero when `b` is zero. Always exact.
Rational exact_div(const Rational& a, const Rational& b);
inline bool is_zero(const Rational& a) { return a.is_zero(); }
inline std::string to_string(const Rational& a) { return a.str(); }
/// Converts to Integer; NonIntegral when the denominator is not 1.
Integer to_integer(const Rational& a);

}  // namespace rueppel

#endif  // RUEPPEL_INTEGER_HPP
