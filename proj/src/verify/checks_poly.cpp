// Generalized Rueppel sequences over Z[b, c] and their Riordan arrays.

#include <algorithm>

#include "checks.hpp"
#include "rueppel/cfrac.hpp"
#include "rueppel/riordan.hpp"

namespace rueppel::checks {
namespace {

using PS = Series<Poly2>;
using RF = RatFunc;

const RF kB{Poly2::b()};
const RF kC{Poly2::c()};

RF q(long v) { return RF(Integer(v)); }

PS with_c(const PS& s, const Poly2& value) {
  return map_coeffs<Poly2>(s, [&](const Poly2& p) { return p.substitute_c(value); });
}

/// s(8k) = s(8k+5) = c, s(8k+1) = s(8k+4) = -c, s(8k+3) = -s(8k+2) = (-1)^k b/c^2,
/// s(8k+7) = -s(8k+6) = (2P(k) - 1)/b.
RF pattern(std::size_t i, const Integer& p) {
  const std::size_t k = i / 8;
  const RF sk = q(k % 2 ? -1 : 1) * kB / (kC * kC);
  const RF pk = q(2 * p.to_long() - 1) / kB;
  switch (i % 8) {
    case 0:
    case 5: return kC;
    case 1:
    case 4: return -kC;
    case 2: return -sk;
    case 3: return sk;
    case 6: return -pk;
    default: return pk;
  }
}

/// The printed closed form, term by term. Factors that vanish are skipped so
/// P is only read at integer arguments.
RF closed_form(long n, const std::vector<Integer>& p) {
  const long m = n % 2 == 0 ? n : n - 1;
  const long sign = n % 2 == 0 ? 1 : -1;
  const long half = m / 2;
  const long f1 = 1 - (half % 2 ? -1 : 1);
  const long f2 = 1 + (half % 2 ? -1 : 1);
  RF val = q(0);
  if (f1 != 0) {
    const long k = (m - 2) / 4;
    val = val + kB * RF(Integer(1) - p.at(std::size_t(k))) * q(f1) / (q(4) * kC * kC);
  }
  if (f2 != 0) val = val + kC * q((m / 4) % 2 ? -1 : 1) * q(f2) / q(4);
  return q(2 * sign) * val;
}

Poly2 mono(long coeff, unsigned b, unsigned c) { return Poly2::monomial(Integer(coeff), b, c); }

std::vector<RF> rf_list(std::initializer_list<RF> v) { return std::vector<RF>(v); }

// Tail coefficients carry c-exponents near twice the depth.
unsigned sbc_degree_bound(std::size_t d) { return unsigned(std::max<std::size_t>(64, 3 * d)); }

void c9_sbc(CheckContext& ctx) {
  const std::size_t d = ctx.depth();
  const DegreeBoundScope bound(sbc_degree_bound(d));
  const PS rbc = rueppel_bc_series(d + 1);
  const auto sf = stieltjes_expand(rbc, d);
  const RF bc2 = kB / (kC * kC);
  const RF ib = q(1) / kB;
  const RF c = kC;
  ctx.prefix("printed r_{b,c} parameters",
             rf_list({c, -c, -bc2, bc2, -c, c, -ib, ib, c, -c, bc2, -bc2, -c, c, -ib, ib, c, -c}), sf.alphas, d);

  const std::size_t d1 = std::min<std::size_t>(d, 21);
  const auto s1 = stieltjes_expand(with_c(rueppel_bc_series(d1 + 1), Poly2(1)), d1);
  const RF b = kB;
  ctx.prefix("printed r_{b,1} parameters",
             rf_list({q(1), q(-1), -b, b, q(-1), q(1), -ib, ib, q(1), q(-1), b, -b, q(-1), q(1), -ib, ib, q(1), q(-1),
                      -b, b, q(-1)}),
             s1.alphas, d1);
  const std::size_t d2 = std::min<std::size_t>(d, 20);
  const auto s2 = stieltjes_expand(with_c(rueppel_bc_series(d2 + 1), Poly2::b()), d2);
  ctx.prefix("printed r_b parameters",
             rf_list({b, -b, -ib, ib, -b, b, -ib, ib, b, -b, ib, -ib, -b, b, -ib, ib, b, -b, -ib, ib}), s2.alphas, d2);

  const auto tail = tail_series(convert<RF>(rueppel_bc_series(std::max<std::size_t>(d, 4) + 1)));
  ctx.prefix("printed tail expansion", rf_list({q(1), -c, (b + c * c * c) / c, q(-2) * b - c * c * c}), tail.coeffs(),
             std::max<std::size_t>(d, 4));

  if (d == 0) return;
  const auto p = ctx.ref_terms("A014577", 0, (d - 1) / 8 + 1);
  for (std::size_t i = 0; i < d; ++i) {
    ctx.same("8-periodic pattern with P = A014577", long(i), pattern(i, p[i / 8]), sf.alphas[i]);
  }
}

void c9_closed_form(CheckContext& ctx) {
  const std::size_t d = ctx.depth();
  const DegreeBoundScope bound(sbc_degree_bound(d));
  const auto sf = stieltjes_expand(rueppel_bc_series(d + 1), d);
  if (d == 0) return;
  const auto p = ctx.ref_terms("A014577", 0, (d - 1) / 4 + 1);
  ctx.note("closed form evaluated literally; P read at (n-2)/4 and (n-3)/4");
  for (std::size_t n = 0; n < d; ++n) {
    ctx.same("printed closed form for s_{b,c}(n)", long(n), closed_form(long(n), p), sf.alphas[n]);
  }
}

void c9_hankel(CheckContext& ctx) {
  const std::size_t d = ctx.depth();
  const auto h = hankel_transform(rueppel_bc_series(2 * d + 1), d).terms;
  const std::vector<Poly2> printed = {mono(1, 0, 0),  mono(-1, 0, 2), mono(-1, 2, 0),  mono(1, 4, 0),  mono(1, 4, 0),
                                      mono(-1, 4, 2), mono(-1, 6, 0), mono(1, 8, 0),   mono(1, 8, 0),  mono(-1, 8, 2),
                                      mono(-1, 10, 0), mono(1, 12, 0), mono(1, 12, 0)};
  ctx.prefix("printed Hankel prefix", printed, h, d + 1);
  for (std::size_t n = 0; n <= d; ++n) {
    const Rational v = h[n].eval(Rational(1), Rational(1));
    ctx.same("b = c = 1 gives (-1)^binom(n+1,2)", long(n), Rational(sign_binom2_next(long(n))), v);
  }
  for (std::size_t n = printed.size(); n <= d; ++n) ctx.note("h_" + std::to_string(n) + " = " + h[n].str());
}

/// Row n of the coefficient array against the Riordan matrix, up to `cols`.
void compare_rows(CheckContext& ctx, std::string_view part, const Matrix<Integer>& expected,
                  const Matrix<Integer>& actual, std::size_t cols) {
  for (std::size_t n = 0; n < std::min(expected.rows(), actual.rows()); ++n) {
    for (std::size_t k = 0; k < cols; ++k) {
      if (!(expected(n, k) == actual(n, k))) {
        ctx.expect(part, long(n), false, "m(" + std::to_string(n) + "," + std::to_string(k) + ") = " + expected(n, k).str(),
                   actual(n, k).str());
        break;
      }
    }
  }
}

Matrix<Integer> matrix_of(const std::vector<std::vector<long>>& rows) {
  Matrix<Integer> m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = Integer(rows[i][j]);
  }
  return m;
}

void compare_series(CheckContext& ctx, std::string_view part, const PS& expected, const PS& actual, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) ctx.same(part, long(i), expected[i], actual[i]);
}

void p2(CheckContext& ctx) {
  const std::size_t n = ctx.depth();
  const PS family = tail_series(with_c(rueppel_bc_series(n + 1), Poly2::b()));
  const Poly2 b = Poly2::b();
  const std::vector<Poly2> printed = {Poly2(1),
                                      -b,
                                      b * b + Poly2(1),
                                      -(b * (b * b + Poly2(2))),
                                      b * b * (b * b + Poly2(3)),
                                      -(b * (b * b * b * b + Poly2(4) * b * b + Poly2(1))),
                                      b * b * b * b * b * b + Poly2(5) * b * b * b * b + Poly2(3) * b * b + Poly2(1)};
  ctx.prefix("printed polynomials", printed, family.coeffs(), n);

  const ZS g = at_x2(r(n), n);
  const ZS f = -(xpow(1, n) * g);
  const auto m = riordan_build(g, f, n);
  const auto serial = riordan_build_serial(g, f, n);
  compare_rows(ctx, "parallel build = serial build", serial, m, n);
  const auto printed_matrix = matrix_of({{1, 0, 0, 0, 0, 0, 0, 0, 0},
                                         {0, -1, 0, 0, 0, 0, 0, 0, 0},
                                         {1, 0, 1, 0, 0, 0, 0, 0, 0},
                                         {0, -2, 0, -1, 0, 0, 0, 0, 0},
                                         {0, 0, 3, 0, 1, 0, 0, 0, 0},
                                         {0, -1, 0, -4, 0, -1, 0, 0, 0},
                                         {1, 0, 3, 0, 5, 0, 1, 0, 0},
                                         {0, -2, 0, -6, 0, -6, 0, -1, 0},
                                         {0, 0, 4, 0, 10, 0, 7, 0, 1}});
  compare_rows(ctx, "printed coefficient matrix", printed_matrix, m, std::min<std::size_t>(n, 9));
  compare_rows(ctx, "coefficient array = (r(x^2), -x r(x^2))", coeff_array(family, n == 0 ? 0 : n - 1), m, n);
  compare_series(ctx, "bivariate g.f. r(x^2)/(1 + x y r(x^2)) at y = b", riordan_bivariate(g, f), family, n);

  const ZS h = r(n);
  const ZS applied = riordan_apply(g, f, h);
  const ZS via_matrix = matrix_apply(m, h);
  for (std::size_t i = 0; i < n; ++i) ctx.same("fundamental theorem on r(x)", long(i), applied[i], via_matrix[i]);
}

void p3(CheckContext& ctx) {
  const std::size_t n = ctx.depth();
  const PS family = tail_series(with_c(rueppel_bc_series(n + 1), Poly2(1)));
  const Poly2 b = Poly2::b();
  const auto P = [](long v) { return Poly2(v); };
  const std::vector<Poly2> printed = {P(1),
                                      P(-1),
                                      b + P(1),
                                      P(-2) * b - P(1),
                                      P(3) * b + P(1),
                                      -(b * b) - P(4) * b - P(1),
                                      P(3) * b * b + P(6) * b + P(1),
                                      P(-6) * b * b - P(8) * b - P(1),
                                      b * b * b + P(10) * b * b + P(10) * b + P(1)};
  ctx.prefix("printed polynomials", printed, family.coeffs(), n);

  const std::size_t n1 = n + 1;
  const ZS inv = recip(one(n1) + xpow(1, n1));
  const ZS g = -inv;
  const ZS f = -(xpow(3, n1) * at_xk(r(n1), 4, n1) * inv);
  const auto full = riordan_build(g, f, n1);
  for (std::size_t k = 0; k < n1; ++k) {
    ctx.same("removed first row is (-1, 0, 0, ...)", long(k), Integer(k == 0 ? -1 : 0), full(0, k));
  }
  const auto stripped = strip_first_row(full);
  const auto printed_matrix = matrix_of({{1, 0, 0, 0, 0, 0, 0, 0, 0},
                                         {-1, 0, 0, 0, 0, 0, 0, 0, 0},
                                         {1, 1, 0, 0, 0, 0, 0, 0, 0},
                                         {-1, -2, 0, 0, 0, 0, 0, 0, 0},
                                         {1, 3, 0, 0, 0, 0, 0, 0, 0},
                                         {-1, -4, -1, 0, 0, 0, 0, 0, 0},
                                         {1, 6, 3, 0, 0, 0, 0, 0, 0},
                                         {-1, -8, -6, 0, 0, 0, 0, 0, 0},
                                         {1, 10, 10, 1, 0, 0, 0, 0, 0}});
  compare_rows(ctx, "printed coefficient matrix", printed_matrix, stripped, std::min<std::size_t>(n, 9));
  if (n > 0) {
    compare_rows(ctx, "coefficient array = stretched array without first row", coeff_array(family, n - 1), stripped,
                 n);
    for (std::size_t i = 0; i < n; ++i) ctx.same("last column vanishes", long(i), Integer(0), stripped(i, n));
  }

  // (1 + b x^2 r(x^4)) / (1 + x + b x^3 r(x^4))
  const PS r4 = convert<Poly2>(at_xk(r(n), 4, n));
  const PS xb2 = PS::monomial(b, 2, n);
  const PS num = PS::one(n) + xb2 * r4;
  const PS den = PS::one(n) + PS::x(n) + PS::monomial(b, 3, n) * r4;
  compare_series(ctx, "bivariate g.f. at y = b", num * recip(den), family, n);
}

CheckInfo info(std::string id, std::string claim, CheckDomain domain, std::string unit, std::size_t printed,
               std::size_t def, std::size_t max, std::vector<ReferenceUse> refs, std::function<void(CheckContext&)> body) {
  CheckInfo c;
  c.id = std::move(id);
  c.claim = std::move(claim);
  c.domain = domain;
  c.depth_unit = std::move(unit);
  c.printed_depth = printed;
  c.default_depth = def;
  c.max_depth = max;
  c.references = std::move(refs);
  c.body = std::move(body);
  return c;
}

}  // namespace

void add_polynomial_checks(std::vector<CheckInfo>& out) {
  out.push_back(info("C9-sbc", "S-parameters of r_{b,c} follow the 8-periodic pattern with paper-folding signs",
                     CheckDomain::polynomial, "S-parameter count", 21, 64, 96, {{"A014577", 8, 6}}, c9_sbc));
  out.push_back(info("C9-sbc-closed-form", "printed closed form for s_{b,c}(n)", CheckDomain::polynomial,
                     "S-parameter count", 18, 64, 96, {{"A014577", 4, 2}}, c9_closed_form));
  out.push_back(info("C9-hankel", "Hankel(r_{b,c}) begins 1, -c^2, -b^2, b^4, b^4, -b^4 c^2, ...",
                     CheckDomain::polynomial, "Hankel order n", 12, 12, 12, {}, c9_hankel));
  out.push_back(info("P2-riordan-rb", "coefficient array of the r_b tail is (r(x^2), -x r(x^2))",
                     CheckDomain::polynomial, "rows N", 9, 24, 40, {}, p2));
  out.push_back(info("P3-riordan-stretched",
                     "coefficient array of the r_{b,1} tail is (-1/(1+x), -x^3 r(x^4)/(1+x)) without its first row",
                     CheckDomain::polynomial, "rows N", 9, 24, 40, {}, p3));
}

}  // namespace rueppel::checks
