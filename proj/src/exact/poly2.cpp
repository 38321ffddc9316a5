#include "rueppel/poly2.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

#include "rueppel/error.hpp"

namespace rueppel {

namespace {

std::atomic<unsigned> g_degree_bound{64};
thread_local unsigned t_degree_bound = 0;

bool key_greater(const Term& a, const Term& b) { return a.mono.key() > b.mono.key(); }

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  return Monomial{std::uint16_t(a.b_exp + b.b_exp), std::uint16_t(a.c_exp + b.c_exp)};
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  return Monomial{std::uint16_t(a.b_exp - b.b_exp), std::uint16_t(a.c_exp - b.c_exp)};
}

// Sorts by key and merges equal monomials, dropping zeros.
std::vector<Term> canonical(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), key_greater);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  return out;
}

std::string mono_str(const Monomial& m) {
  std::string s;
  if (m.b_exp > 0) {
    s += "b";
    if (m.b_exp > 1) s += "^" + std::to_string(m.b_exp);
  }
  if (m.c_exp > 0) {
    if (!s.empty()) s += "*";
    s += "c";
    if (m.c_exp > 1) s += "^" + std::to_string(m.c_exp);
  }
  return s;
}

Rational rat_pow(const Rational& x, unsigned e) {
  Rational r(1);
  for (unsigned i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

unsigned Poly2::degree_bound() noexcept {
  return t_degree_bound ? t_degree_bound : g_degree_bound.load(std::memory_order_relaxed);
}
void Poly2::set_degree_bound(unsigned bound) noexcept { g_degree_bound.store(bound, std::memory_order_relaxed); }

DegreeBoundScope::DegreeBoundScope(unsigned bound) noexcept : previous_(t_degree_bound) { t_degree_bound = bound; }
DegreeBoundScope::~DegreeBoundScope() { t_degree_bound = previous_; }

Poly2::Poly2(long v) {
  if (v != 0) terms_.push_back(Term{Monomial{}, Integer(v)});
}

Poly2::Poly2(const Integer& v) {
  if (!v.is_zero()) terms_.push_back(Term{Monomial{}, v});
}

Poly2 Poly2::monomial(const Integer& coeff, unsigned b_exp, unsigned c_exp) {
  Poly2 p;
  if (!coeff.is_zero()) {
    p.terms_.push_back(Term{Monomial{std::uint16_t(b_exp), std::uint16_t(c_exp)}, coeff});
  }
  p.check_bound();
  return p;
}

Poly2 Poly2::from_terms(std::vector<Term> terms) {
  Poly2 p;
  p.terms_ = canonical(std::move(terms));
  p.check_bound();
  return p;
}

void Poly2::check_bound() const {
  const unsigned bound = degree_bound();
  for (const auto& t : terms_) {
    if (t.mono.b_exp > bound || t.mono.c_exp > bound) {
      throw Error(Errc::DegreeBoundExceeded,
                  "exponent " + mono_str(t.mono) + " exceeds bound " + std::to_string(bound));
    }
  }
}

bool Poly2::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.degree() == 0);
}

unsigned Poly2::degree_b() const noexcept {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono.b_exp);
  return d;
}

unsigned Poly2::degree_c() const noexcept {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono.c_exp);
  return d;
}

Integer Poly2::coeff(unsigned b_exp, unsigned c_exp) const {
  const Monomial m{std::uint16_t(b_exp), std::uint16_t(c_exp)};
  for (const auto& t : terms_) {
    if (t.mono == m) return t.coeff;
  }
  return Integer(0);
}

Integer Poly2::content() const {
  if (terms_.empty()) return Integer(0);
  Integer g(0);
  for (const auto& t : terms_) {
    g = gcd(g, t.coeff);
    if (g.is_one()) break;
  }
  return terms_.front().coeff.sign() < 0 ? -g : g;
}

Monomial Poly2::monomial_content() const {
  if (terms_.empty()) return Monomial{};
  Monomial m = terms_.front().mono;
  for (const auto& t : terms_) {
    m.b_exp = std::min(m.b_exp, t.mono.b_exp);
    m.c_exp = std::min(m.c_exp, t.mono.c_exp);
  }
  return m;
}

Rational Poly2::eval(const Rational& b_val, const Rational& c_val) const {
  Rational acc(0);
  for (const auto& t : terms_) {
    acc += Rational(t.coeff) * rat_pow(b_val, t.mono.b_exp) * rat_pow(c_val, t.mono.c_exp);
  }
  return acc;
}

Poly2 Poly2::substitute_c(const Poly2& value) const {
  // Horner in c over the b-graded slices.
  const unsigned dc = degree_c();
  std::vector<Poly2> slices(dc + 1);
  for (const auto& t : terms_) {
    slices[t.mono.c_exp] += monomial(t.coeff, t.mono.b_exp, 0);
  }
  Poly2 acc;
  for (unsigned j = dc + 1; j-- > 0;) {
    acc = acc * value + slices[j];
  }
  return acc;
}

Poly2 Poly2::scaled(const Integer& k) const {
  if (k.is_zero()) return Poly2();
  Poly2 p = *this;
  for (auto& t : p.terms_) t.coeff *= k;
  return p;
}

Poly2 Poly2::times_monomial(const Monomial& m) const {
  Poly2 p = *this;
  for (auto& t : p.terms_) t.mono = mono_mul(t.mono, m);
  p.check_bound();
  return p;
}

Poly2 Poly2::divided(const Monomial& m, const Integer& k) const {
  Poly2 p = *this;
  for (auto& t : p.terms_) {
    t.mono = mono_div(t.mono, m);
    t.coeff = exact_div(t.coeff, k);
  }
  return p;
}

Poly2& Poly2::operator+=(const Poly2& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && i->mono.key() > j->mono.key())) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->mono.key() > i->mono.key()) {
      out.push_back(*j++);
    } else {
      Integer s = i->coeff + j->coeff;
      if (!s.is_zero()) out.push_back(Term{i->mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) { return *this += -o; }

Poly2 operator-(Poly2 a) {
  for (auto& t : a.terms_) t.coeff = -t.coeff;
  return a;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  if (a.is_zero() || b.is_zero()) return Poly2();
  if (a.is_constant()) return b.scaled(a.leading().coeff);
  if (b.is_constant()) return a.scaled(b.leading().coeff);
  std::vector<Term> prods;
  prods.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) prods.push_back(Term{mono_mul(x.mono, y.mono), x.coeff * y.coeff});
  }
  Poly2 p;
  p.terms_ = canonical(std::move(prods));
  p.check_bound();
  return p;
}

bool operator==(const Poly2& a, const Poly2& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

std::string Poly2::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    Integer c = t.coeff;
    const bool neg = c.sign() < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? "-" : "+";
    }
    const std::string m = mono_str(t.mono);
    if (m.empty()) {
      s += c.str();
    } else if (c.is_one()) {
      s += m;
    } else {
      s += c.str() + "*" + m;
    }
    first = false;
  }
  return s;
}

std::optional<Poly2> try_exact_div(const Poly2& a, const Poly2& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  if (a.is_zero()) return Poly2();
  if (b.is_monomial()) {
    const Term& d = b.leading();
    std::vector<Term> out;
    out.reserve(a.terms().size());
    for (const auto& t : a.terms()) {
      if (!d.mono.divides(t.mono)) return std::nullopt;
      if (!mpz_divisible_p(t.coeff.raw().get_mpz_t(), d.coeff.raw().get_mpz_t())) return std::nullopt;
      out.push_back(Term{mono_div(t.mono, d.mono), exact_div(t.coeff, d.coeff)});
    }
    // Dividing by a monomial preserves the order of the terms.
    return Poly2::from_terms(std::move(out));
  }
  if (a.degree_b() < b.degree_b() || a.degree_c() < b.degree_c()) return std::nullopt;
  const Term& lead = b.leading();
  Poly2 rem = a;
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const Term& lt = rem.leading();
    if (!lead.mono.divides(lt.mono)) return std::nullopt;
    if (!mpz_divisible_p(lt.coeff.raw().get_mpz_t(), lead.coeff.raw().get_mpz_t())) return std::nullopt;
    const Monomial qm = mono_div(lt.mono, lead.mono);
    const Integer qc = exact_div(lt.coeff, lead.coeff);
    rem -= b.times_monomial(qm).scaled(qc);
    quotient.push_back(Term{qm, qc});
  }
  return Poly2::from_terms(std::move(quotient));
}

Poly2 exact_div(const Poly2& a, const Poly2& b) {
  auto q = try_exact_div(a, b);
  if (!q) throw Error(Errc::InexactDivision, "(" + a.str() + ") / (" + b.str() + ")");
  return std::move(*q);
}

// ---------------------------------------------------------------------------

RatFunc ratfunc_normalize(const Poly2& num, const Poly2& den) { return RatFunc(num, den); }

RatFunc::RatFunc(const Rational& v) : num_(v.num()), den_(v.den()) {}

RatFunc::RatFunc(Poly2 num, Poly2 den) {
  if (den.is_zero()) throw Error(Errc::ZeroDenominator, "rational function with zero denominator");
  if (num.is_zero()) {
    num_ = Poly2();
    den_ = Poly2(1);
    return;
  }
  Monomial mn = num.monomial_content();
  const Monomial md = den.monomial_content();
  mn.b_exp = std::min(mn.b_exp, md.b_exp);
  mn.c_exp = std::min(mn.c_exp, md.c_exp);
  const Integer g = gcd(num.content(), den.content());
  if (mn.degree() > 0 || !g.is_one()) {
    num = num.divided(mn, g);
    den = den.divided(mn, g);
  }
  // With a monomial on either side the only possible common factors are
  // monomials and integers, both removed above.
  if (!num.is_monomial() && !den.is_monomial()) {
    if (auto q = try_exact_div(num, den)) {
      num = std::move(*q);
      den = Poly2(1);
    } else if (auto q2 = try_exact_div(den, num)) {
      den = std::move(*q2);
      num = Poly2(1);
    }
  }
  if (den.leading().coeff.sign() < 0) {
    num = -std::move(num);
    den = -std::move(den);
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

Rational RatFunc::eval(const Rational& b_val, const Rational& c_val) const {
  const Rational d = den_.eval(b_val, c_val);
  if (d.is_zero()) throw Error(Errc::DivisionByZero, "denominator " + den_.str() + " vanishes");
  return num_.eval(b_val, c_val) / d;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  if (a.den_.is_monomial() && b.den_.is_monomial()) {
    // Common denominator lcm(m1, m2) keeps Laurent-type values small.
    const Term& x = a.den_.leading();
    const Term& y = b.den_.leading();
    const Monomial l{std::max(x.mono.b_exp, y.mono.b_exp), std::max(x.mono.c_exp, y.mono.c_exp)};
    const Integer k = lcm(x.coeff, y.coeff);
    const Poly2 na = a.num_.times_monomial(mono_div(l, x.mono)).scaled(exact_div(k, x.coeff));
    const Poly2 nb = b.num_.times_monomial(mono_div(l, y.mono)).scaled(exact_div(k, y.coeff));
    return RatFunc(na + nb, Poly2::monomial(k, l.b_exp, l.c_exp));
  }
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_, RatFunc::Raw{}); }

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "rational function division by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc exact_div(const RatFunc& a, const RatFunc& b) { return a / b; }

bool operator==(const RatFunc& a, const RatFunc& b) {
  if (a.num_ == b.num_ && a.den_ == b.den_) return true;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RatFunc::str() const {
  if (is_polynomial()) return num_.str();
  const auto wrap = [](const Poly2& p) {
    return p.terms().size() > 1 || (p.leading().coeff.sign() < 0 && !p.is_monomial()) ? "(" + p.str() + ")" : p.str();
  };
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace rueppel
