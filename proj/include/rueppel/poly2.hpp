#ifndef RUEPPEL_POLY2_HPP
#define RUEPPEL_POLY2_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rueppel/integer.hpp"

namespace rueppel {

/// Exponent pair of the monomial b^b_exp * c^c_exp.
struct Monomial {
  std::uint16_t b_exp = 0;
  std::uint16_t c_exp = 0;

  unsigned degree() const noexcept { return unsigned(b_exp) + c_exp; }
  /// Graded-lex key with b > c: larger key means larger monomial.
  std::uint32_t key() const noexcept { return (std::uint32_t(degree()) << 16) | b_exp; }
  bool divides(const Monomial& o) const noexcept { return b_exp <= o.b_exp && c_exp <= o.c_exp; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct Term {
  Monomial mono;
  Integer coeff;
};

/// Sparse bivariate polynomial over Z in the indeterminates b and c.
///
/// Terms are kept sorted in strictly decreasing graded-lex order (b before c)
/// with no zero coefficients, so structural equality is ring equality.
/// Each exponent is capped by a process-wide bound (default 64); crossing it
/// raises DegreeBoundExceeded instead of truncating.
class Poly2 {
 public:
  Poly2() = default;
  Poly2(long v);            // NOLINT(google-explicit-constructor)
  Poly2(int v) : Poly2(long(v)) {}  // NOLINT(google-explicit-constructor)
  Poly2(const Integer& v);  // NOLINT(google-explicit-constructor)

  static Poly2 monomial(const Integer& coeff, unsigned b_exp, unsigned c_exp);
  static Poly2 b() { return monomial(1, 1, 0); }
  static Poly2 c() { return monomial(1, 0, 1); }
  /// Builds from arbitrary (unsorted, possibly repeated or zero) terms.
  static Poly2 from_terms(std::vector<Term> terms);

  static unsigned degree_bound() noexcept;
  static void set_degree_bound(unsigned bound) noexcept;

  std::span<const Term> terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  const Term& leading() const { return terms_.front(); }
  unsigned degree_b() const noexcept;
  unsigned degree_c() const noexcept;
  /// Coefficient of b^i c^j (zero when absent).
  Integer coeff(unsigned b_exp, unsigned c_exp) const;

  /// gcd of the integer coefficients, sign taken from the leading term.
  Integer content() const;
  /// Largest monomial dividing every term.
  Monomial monomial_content() const;

  Rational eval(const Rational& b_val, const Rational& c_val) const;
  /// Substitutes c := value (e.g. value = b or 1).
  Poly2 substitute_c(const Poly2& value) const;
  Poly2 scaled(const Integer& k) const;
  Poly2 times_monomial(const Monomial& m) const;
  /// Divides every term by `m` and every coefficient by `k`; both must divide.
  Poly2 divided(const Monomial& m, const Integer& k) const;

  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  Poly2& operator*=(const Poly2& o) { return *this = *this * o; }

  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend Poly2 operator-(Poly2 a);

  friend bool operator==(const Poly2& a, const Poly2& b);

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Poly2& p) { return os << p.str(); }

 private:
  void check_bound() const;
  std::vector<Term> terms_;
};

/// Multivariate exact division in graded-lex order; nullopt if inexact.
std::optional<Poly2> try_exact_div(const Poly2& a, const Poly2& b);
/// Throws InexactDivision / DivisionByZero.
Poly2 exact_div(const Poly2& a, const Poly2& b);
inline bool is_zero(const Poly2& p) { return p.is_zero(); }
inline std::string to_string(const Poly2& p) { return p.str(); }

/// Quotient of two Poly2 values.
///
/// Normalization removes the common monomial factor and integer content,
/// cancels by trial exact division when one side divides the other, and makes
/// the leading coefficient of the denominator positive. That yields a unique
/// form whenever the common factor is a monomial (all continued-fraction
/// parameters in this project); equality falls back to cross-multiplication so
/// it is correct regardless.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(long v) : num_(v), den_(1) {}            // NOLINT(google-explicit-constructor)
  RatFunc(int v) : num_(v), den_(1) {}             // NOLINT(google-explicit-constructor)
  RatFunc(const Integer& v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& v);                      // NOLINT(google-explicit-constructor)
  RatFunc(const Poly2& p) : num_(p), den_(1) {}    // NOLINT(google-explicit-constructor)
  /// Normalizes; ZeroDenominator when `den` is zero.
  RatFunc(Poly2 num, Poly2 den);

  const Poly2& num() const noexcept { return num_; }
  const Poly2& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.is_constant() && den_.leading().coeff.is_one(); }

  /// DivisionByZero when the denominator vanishes at the point.
  Rational eval(const Rational& b_val, const Rational& c_val) const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b);

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.str(); }

 private:
  struct Raw {};
  RatFunc(Poly2 num, Poly2 den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
  Poly2 num_;
  Poly2 den_;
};

/// Canonical representative of num/den (see RatFunc).
RatFunc ratfunc_normalize(const Poly2& num, const Poly2& den);
RatFunc exact_div(const RatFunc& a, const RatFunc& b);
inline bool is_zero(const RatFunc& f) { return f.is_zero(); }
inline std::string to_string(const RatFunc& f) { return f.str(); }

/// Overrides the degree bound on the current thread for its lifetime.
class DegreeBoundScope {
 public:
  explicit DegreeBoundScope(unsigned bound) noexcept;
  ~DegreeBoundScope();
  DegreeBoundScope(const DegreeBoundScope&) = delete;
  DegreeBoundScope& operator=(const DegreeBoundScope&) = delete;

 private:
  unsigned previous_;
};

}  // namespace rueppel

#endif  // RUEPPEL_POLY2_HPP
