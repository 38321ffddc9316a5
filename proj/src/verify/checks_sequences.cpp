// Continued-fraction relations, row sums, the Josephus pipeline and the catalog.

#include <bit>

#include "checks.hpp"
#include "rueppel/catalog.hpp"
#include "rueppel/cfrac.hpp"
#include "rueppel/riordan.hpp"

namespace rueppel::checks {
namespace {

Rats as_rats(const Ints& v) { return Rats(v.begin(), v.end()); }

void s2_stieltjes(CheckContext& ctx) {
  const std::size_t d = ctx.depth();
  const auto sf = stieltjes_expand(r(d + 1), d);
  ctx.prefix("printed parameters", as_rats(ints({1, -1, -1, 1, -1, 1, -1, 1, 1, -1, 1})), sf.alphas, d);
  if (d == 0) return;
  const auto ref = ctx.ref_terms("A088567", 2, d);
  for (std::size_t n = 0; n < d; ++n) {
    const Integer expected = Integer(2) * mod_floor(ref[n], Integer(2)) - Integer(1);
    ctx.same("alpha_{n+1} = 2 (A088567(n+2) mod 2) - 1", long(n), Rational(expected), sf.alphas[n]);
  }
}

void s2_jacobi(CheckContext& ctx) {
  const std::size_t d = ctx.depth();
  const auto jf = jacobi_expand(r(2 * d + 1), d);
  ctx.prefix("printed alphas", as_rats(ints({1, -2, 0, 0, 2, 0, -2, 0, 2, -2, 0})), jf.alphas, d);
  for (std::size_t k = 0; k < jf.betas.size(); ++k) ctx.same("beta_k = -1", long(k + 1), Rational(-1), jf.betas[k]);
  if (d == 0) return;
  const auto a110036 = ctx.ref_terms("A110036", 1, d);
  for (std::size_t n = 0; n < d; ++n) {
    ctx.same("alpha_n = -A110036(n+1)", long(n), Rational(-a110036[n]), jf.alphas[n]);
  }
  if (d < 2) return;
  const auto a088567 = ctx.ref_terms("A088567", 0, d + 1);
  for (std::size_t n = 0; n + 2 <= d; ++n) {
    ctx.same("|A110036(n+2)| = 2 (A088567(n+2) mod 2)", long(n), Integer(2) * mod_floor(a088567[n + 2], Integer(2)),
             a110036[n + 1].abs());
  }
  for (std::size_t n = 0; n + 2 <= d; ++n) {
    const Integer literal = Integer(2) * mod_floor(a088567[n], Integer(2));
    if (!(literal == a110036[n + 1].abs())) {
      ctx.note("the relation as printed, with A088567(n), first differs at n = " + std::to_string(n) + ": " +
               a110036[n + 1].abs().str() + " vs " + literal.str());
      break;
    }
  }
}

void s4(CheckContext& ctx) {
  const std::size_t d = ctx.depth(), m = 2 * d + 1;
  const ZS g = at_x2(r(m), m);
  const ZS f = -(xpow(1, m) * g);
  const auto arr = riordan_build(g, f, m);
  Ints sums;
  for (std::size_t n = 0; n < m; ++n) {
    Integer acc(0);
    for (std::size_t k = 0; k <= n; ++k) acc += arr(n, k);
    sums.push_back(acc);
  }
  ctx.prefix("printed row sums", ints({1, -1, 2, -3, 4, -6, 10, -15, 22, -34, 52}), sums, m);
  const ZS rr = r(m + 1);
  const ZS quotient = g * recip(rr.truncated(m));
  for (std::size_t i = 0; i < m; ++i) ctx.same("row sums have gf r(x^2)/r(x)", long(i), quotient[i], sums[i]);
  const Sequence<Integer> shifted{shift_left(rr, 1).coeffs(), 0};
  const auto inv = invert_transform(shifted, Integer(-1));
  for (std::size_t i = 0; i < m; ++i) ctx.same("row sums = INVERT(-1) of r_{n+1}", long(i), inv.terms[i], sums[i]);
  const Ints h = hankel(sums, d);
  const Ints hs = hankel(shifted.terms, d);
  ctx.prefix("printed Hankel prefix", ints({1, 1, -1, -1, -1, 1, -1, -1, -1, -1, 1, -1, -1, 1}), h, d + 1);
  for (std::size_t n = 0; n <= d; ++n) ctx.same("Hankel(row sums) = Hankel(r_{n+1})", long(n), hs[n], h[n]);
}

std::vector<Integer> closed_values(Integer (*fn)(std::uint64_t), std::size_t n) {
  std::vector<Integer> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(fn(k));
  return out;
}

void closed_form_rule(CheckContext& ctx, const std::string& name, Integer (*fn)(std::uint64_t), const Ints& printed,
                      const Ints& values) {
  const std::size_t extra = 8;
  const auto cand = closed_values(fn, values.size() + extra);
  const auto shift = calibrate_shift(cand, printed, extra);
  if (!shift) {
    ctx.inconclusive("no index shift makes the " + name + " closed form match its printed prefix");
    return;
  }
  ctx.note(name + " closed form calibrated at index shift " + std::to_string(*shift));
  for (std::size_t i = 0; i < values.size(); ++i) ctx.same(name + " closed form", long(i), cand[i + *shift], values[i]);
}

void s5_josephus(CheckContext& ctx) {
  const std::size_t n = ctx.depth();
  const ZS rr = r(n + 2);
  Ints complement;
  for (std::size_t i = 0; i < n; ++i) complement.push_back(Integer(1) - rr[i + 2]);
  ctx.prefix("printed 1 - r_{n+2}", ints({1, 0, 1, 1, 1, 0, 1, 1, 1, 1, 1, 1, 1, 0, 1, 1, 1, 1, 1, 1, 1}), complement,
             n);
  const ZS gf = (one(n) + Integer(2) * xpow(1, n)) * recip((one(n) - xpow(1, n)) * (one(n) - Integer(2) * xpow(1, n)));
  const Ints printed_zeros = ints({1, 5, 13, 29, 61, 125, 253, 509, 1021, 2045, 4093});
  ctx.prefix("printed zero locations", printed_zeros, coeffs(gf, n), n);

  const auto jp = josephus_pipeline(n);
  ctx.prefix("printed marked sequence",
             ints({1, 0, 1, -1, 1, 1, 1, -3, 1, 1, 1, 1, 1, 1, 1, -7, 1, 1, 1, 1, 1, 1, 1}), jp.marked, n);
  const Ints printed_p1 = ints({1, 1, 2, 1, 2, 3, 4, 1, 2, 3, 4, 5, 6, 7, 8, 1, 2});
  const Ints printed_p2 = ints({1, 1, 3, 1, 3, 5, 7, 1, 3, 5, 7, 9, 11, 13, 15, 1, 3});
  ctx.prefix("printed partial sums", printed_p1, jp.partial1, n);
  ctx.prefix("printed doubled sequence",
             ints({1, 0, 2, -2, 2, 2, 2, -6, 2, 2, 2, 2, 2, 2, 2, -14, 2, 2, 2, 2, 2}), jp.doubled, n);
  ctx.prefix("printed doubled partial sums", printed_p2, jp.partial2, n);

  Ints zeros;
  for (std::size_t i = 0; i < n; ++i) {
    if (complement[i].is_zero()) zeros.push_back(Integer(long(i)));
  }
  const auto a036563 = ctx.ref_terms("A036563", 2, zeros.size());
  for (std::size_t k = 0; k < zeros.size(); ++k) ctx.same("zeros of 1 - r_{n+2} at A036563(k+2)", long(k), a036563[k], zeros[k]);
  const auto a062050 = ctx.ref_terms("A062050", 1, n);
  for (std::size_t i = 0; i < n; ++i) ctx.same("partial sums = A062050(n+1)", long(i), a062050[i], jp.partial1[i]);
  const auto a006257 = ctx.ref_terms("A006257", 1, n);
  for (std::size_t i = 0; i < n; ++i) ctx.same("doubled partial sums = A006257(n+1)", long(i), a006257[i], jp.partial2[i]);
  closed_form_rule(ctx, "A062050", a062050_closed_form, printed_p1, jp.partial1);
  closed_form_rule(ctx, "A006257", a006257_closed_form, printed_p2, jp.partial2);
}

void s5_complement(CheckContext& ctx) {
  const std::size_t n = ctx.depth();
  const ZS rr = r(n), cc = c(n);
  Ints comp;
  for (std::size_t i = 0; i < n; ++i) comp.push_back(Integer(1) - rr[i]);
  ctx.prefix("printed prefix", ints({0, 0, 1, 0, 1, 1, 1, 0, 1, 1, 1}), comp, n);
  for (std::size_t i = 0; i < n; ++i) {
    ctx.same("1 - r_n = 1 - (C_n mod 2)", long(i), Integer(1) - mod_floor(cc[i], Integer(2)), comp[i]);
  }
  const auto ref = ctx.ref_terms("A043545", 0, n);
  for (std::size_t i = 0; i < n; ++i) ctx.same("1 - r_n = A043545(n)", long(i), ref[i], comp[i]);
}

void catalog_check(CheckContext& ctx, const CatalogEntry& e) {
  const std::size_t n = ctx.depth();
  const auto gen = e.generate(n);
  const long skip = e.printed_start - e.offset;
  for (std::size_t i = 0; i < e.printed.size() && skip + long(i) < long(n); ++i) {
    const long k = e.printed_start + long(i);
    if (!ctx.same("printed prefix", k, e.printed[i], gen[std::size_t(skip) + i])) break;
  }
  if (e.oracle) {
    ctx.note("oracle: " + e.oracle_description);
    const auto orc = e.oracle(n);
    for (std::size_t i = 0; i < n; ++i) {
      const long k = e.offset + long(i);
      if (e.oracle_abs_only) {
        ctx.same("oracle (absolute values)", k, orc[i].abs(), gen[i].abs());
      } else {
        ctx.same("oracle", k, orc[i], gen[i]);
      }
    }
  } else {
    ctx.note("no independent oracle; printed prefix and reference only");
  }
  const auto ref = ctx.ref_terms(e.id, e.offset, n);
  for (std::size_t i = 0; i < n; ++i) ctx.same("reference", e.offset + long(i), ref[i], gen[i]);
}

CheckInfo info(std::string id, std::string claim, CheckDomain domain, std::string unit, std::size_t printed,
               std::size_t def, std::size_t min, std::size_t max, std::vector<ReferenceUse> refs,
               std::function<void(CheckContext&)> body) {
  CheckInfo c;
  c.id = std::move(id);
  c.claim = std::move(claim);
  c.domain = domain;
  c.depth_unit = std::move(unit);
  c.printed_depth = printed;
  c.default_depth = def;
  c.min_depth = min;
  c.max_depth = max;
  c.references = std::move(refs);
  c.body = std::move(body);
  return c;
}

}  // namespace

void add_sequence_checks(std::vector<CheckInfo>& out) {
  const auto I = CheckDomain::integer;
  out.push_back(info("S2-stieltjes-A088567", "S(r) parameters are 2 (A088567(n+2) mod 2) - 1", I,
                     "S-parameter count", 11, 64, 0, 128, {{"A088567", 1, -2}}, s2_stieltjes));
  out.push_back(info("S2-jacobi-A110036", "J(r) alphas are -A110036(n+1) with betas -1", I, "J-parameter count", 11,
                     64, 0, 128, {{"A110036", 1, -1}, {"A088567", 1, -2}}, s2_jacobi));
  out.push_back(info("S4-rowsums-invert", "row sums of (r(x^2), -x r(x^2)) are INVERT(-1) of r_{n+1}", I,
                     "Hankel order n", 13, 24, 0, 40, {}, s4));
  out.push_back(info("S5-josephus", "Josephus pipeline built from the zeros of 1 - r_{n+2}", I, "terms N", 23, 64, 4,
                     128, {{"A036563", 1, -2}, {"A062050", 1, -1}, {"A006257", 1, -1}}, s5_josephus));
  out.push_back(info("S5-complement-A043545", "1 - r_n is A043545", I, "terms N", 11, 64, 0, 128,
                     {{"A043545", 1, 0}}, s5_complement));
  for (const auto& e : catalog()) {
    const CatalogEntry* entry = &e;
    out.push_back(info("CAT-" + e.id, e.description, CheckDomain::catalog, "terms N",
                       std::size_t(e.printed_start - e.offset) + e.printed.size(), 64, 1, 128, {{e.id, 1, 0}},
                       [entry](CheckContext& ctx) { catalog_check(ctx, *entry); }));
  }
}

}  // namespace rueppel::checks
