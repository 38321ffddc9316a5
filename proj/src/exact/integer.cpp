#include "rueppel/integer.hpp"

#include "rueppel/error.hpp"

namespace rueppel {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InexactDivision: return "InexactDivision";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::DegreeBoundExceeded: return "DegreeBoundExceeded";
    case Errc::RingMismatch: return "RingMismatch";
    case Errc::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case Errc::InsufficientTerms: return "InsufficientTerms";
    case Errc::InsufficientTruncation: return "InsufficientTruncation";
    case Errc::InsufficientDepth: return "InsufficientDepth";
    case Errc::NonSquare: return "NonSquare";
    case Errc::SFractionBreakdown: return "SFractionBreakdown";
    case Errc::BadOrder: return "BadOrder";
    case Errc::UnexpectedVariable: return "UnexpectedVariable";
    case Errc::BadLeadingTerm: return "BadLeadingTerm";
    case Errc::TooSmall: return "TooSmall";
    case Errc::UnknownSequence: return "UnknownSequence";
    case Errc::UnknownCheck: return "UnknownCheck";
    case Errc::DepthInfeasible: return "DepthInfeasible";
    case Errc::FixtureMissing: return "FixtureMissing";
    case Errc::NetworkUnavailable: return "NetworkUnavailable";
    case Errc::ParseError: return "ParseError";
    case Errc::EmptyOverlap: return "EmptyOverlap";
    case Errc::NonIntegral: return "NonIntegral";
    case Errc::Usage: return "Usage";
  }
  return "Unknown";
}

Integer::Integer(long long v) {
  // mpz_class has no long long constructor on LP64 glibc builds of gmpxx.
  v_ = mpz_class(std::to_string(v));
}

Integer::Integer(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  if (s.empty() || v_.set_str(s, 10) != 0) {
    throw Error(Errc::ParseError, "not an integer: '" + std::string(text) + "'");
  }
}

Integer Integer::pow(unsigned long e) const {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), v_.get_mpz_t(), e);
  return Integer(r);
}

Integer exact_div(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "integer division by zero");
  if (!mpz_divisible_p(a.raw().get_mpz_t(), b.raw().get_mpz_t())) {
    throw Error(Errc::InexactDivision, a.str() + " / " + b.str());
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return Integer(q);
}

Integer mod_floor(const Integer& a, const Integer& m) {
  if (m.is_zero()) throw Error(Errc::DivisionByZero, "modulus zero");
  mpz_class r;
  mpz_mod(r.get_mpz_t(), a.raw().get_mpz_t(), m.raw().get_mpz_t());
  return Integer(r);
}

Integer gcd(const Integer& a, const Integer& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return Integer(g);
}

Integer lcm(const Integer& a, const Integer& b) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return Integer(l);
}

bool exact_sqrt(const Integer& a, Integer& root) {
  if (a.sign() < 0) return false;
  if (!mpz_perfect_square_p(a.raw().get_mpz_t())) return false;
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), a.raw().get_mpz_t());
  root = Integer(r);
  return true;
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den.is_zero()) throw Error(Errc::ZeroDenominator, "rational with zero denominator");
  v_ = mpq_class(num.raw(), den.raw());
  v_.canonicalize();
}

Rational::Rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    v_ = mpq_class(Integer(text).raw());
    return;
  }
  const Integer n(text.substr(0, slash));
  const Integer d(text.substr(slash + 1));
  *this = Rational(n, d);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "rational division by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

Rational exact_div(const Rational& a, const Rational& b) { return a / b; }

Integer to_integer(const Rational& a) {
  if (!a.is_integer()) throw Error(Errc::NonIntegral, a.str() + " is not an integer");
  return a.num();
}

}  // namespace rueppel
