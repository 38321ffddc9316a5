#include "rueppel/catalog.hpp"

#include <bit>
#include <map>
#include <utility>

#include "rueppel/cfrac.hpp"
#include "rueppel/error.hpp"

namespace rueppel {

const char* to_string(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::direct_rule: return "direct-rule";
    case GeneratorKind::gf_derived: return "gf-derived";
    case GeneratorKind::relation_derived: return "relation-derived";
  }
  return "?";
}

BinaryRuns binary_runs(std::uint64_t n) {
  BinaryRuns out;
  if (n == 0) return out;
  int prev = -1;
  for (int bit = 63 - std::countl_zero(n); bit >= 0; --bit) {
    const int d = int((n >> bit) & 1U);
    if (d != prev) {
      ++out.total_runs;
      if (d == 1) ++out.runs_of_ones;
      if (prev != -1) ++out.digit_alternations;
    }
    prev = d;
  }
  return out;
}

int paperfold(std::uint64_t n) {
  std::uint64_t m = n + 1;
  m >>= std::countr_zero(m);
  return (m & 3U) == 1 ? 1 : 0;
}

JosephusPipeline josephus_pipeline(std::size_t n) {
  if (n < 4) throw Error(Errc::TooSmall, "Josephus pipeline needs N >= 4", long(n));
  JosephusPipeline out;
  out.marked = {Integer(1), Integer(0)};
  for (std::size_t i = 0; out.marked.size() < n; ++i) {
    const bool zero = is_power_of_two(i + 3);  // 1 - r_{i+2} vanishes
    out.marked.push_back(zero ? Integer(-long(i + 1) / 2) : Integer(1));
  }
  Integer acc1(0);
  Integer acc2(0);
  for (std::size_t i = 0; i < n; ++i) {
    const Integer& v = out.marked[i];
    out.doubled.push_back(i == 0 ? v : Integer(2) * v);
    acc1 += v;
    acc2 += out.doubled.back();
    out.partial1.push_back(acc1);
    out.partial2.push_back(acc2);
  }
  return out;
}

std::vector<Integer> motzkin_terms(std::size_t n) {
  if (n == 0) throw Error(Errc::TooSmall, "need N >= 1");
  return motzkin_series(n).coeffs();
}

Integer count_nonsquashing_distinct(unsigned n) {
  // memo[(rem, lo)]: ways to finish with parts >= lo summing to rem, where the
  // running total is n - rem; each new part must be at least that total.
  std::map<std::pair<unsigned, unsigned>, Integer> memo;
  std::function<Integer(unsigned, unsigned)> go = [&](unsigned rem, unsigned lo) -> Integer {
    if (rem == 0) return Integer(1);
    const auto key = std::make_pair(rem, lo);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Integer total(0);
    for (unsigned p = lo; p <= rem; ++p) {
      const unsigned sum = n - rem + p;
      total += go(rem - p, std::max(sum, p + 1));
    }
    memo.emplace(key, total);
    return total;
  };
  return go(n, 1);
}

namespace {

std::uint64_t floor_pow2(std::uint64_t v) { return std::uint64_t(1) << (63 - std::countl_zero(v)); }

}  // namespace

Integer a062050_closed_form(std::uint64_t k) { return Integer(long(2 + k - floor_pow2(k + 1))); }
Integer a006257_closed_form(std::uint64_t k) { return Integer(3 + 2 * (long(k) - long(floor_pow2(k + 1)))); }

std::optional<std::size_t> calibrate_shift(std::span<const Integer> values, std::span<const Integer> prefix,
                                           std::size_t max_shift) {
  for (std::size_t s = 0; s <= max_shift; ++s) {
    if (s + prefix.size() > values.size()) break;
    bool ok = true;
    for (std::size_t i = 0; i < prefix.size() && ok; ++i) ok = values[s + i] == prefix[i];
    if (ok) return s;
  }
  return std::nullopt;
}

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

template <typename F>
std::vector<Integer> tabulate(std::size_t n, long start, F&& f) {
  std::vector<Integer> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(Integer(long(f(std::uint64_t(start + long(i))))));
  return out;
}

// Terms of the series beyond what is needed are discarded.
std::vector<Integer> head(const Series<Integer>& s, std::size_t n) { return s.truncated(n).coeffs(); }

std::vector<Integer> catalan_binomial(std::size_t n) {
  std::vector<Integer> out;
  for (std::size_t k = 0; k < n; ++k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), 2 * k, k);
    out.push_back(exact_div(Integer(b), Integer(long(k + 1))));
  }
  return out;
}

std::vector<Integer> a088567_gf(std::size_t n) {
  // The printed generating function yields A088567(n+2); a(0) = a(1) = 1.
  std::vector<Integer> out = {Integer(1), Integer(1)};
  if (n <= 2) return {out.begin(), out.begin() + long(n)};
  const std::size_t m = n - 2;
  Series<Integer> sum = recip(Series<Integer>::one(m) - Series<Integer>::x(m));
  for (std::size_t k = 1;; ++k) {
    const std::size_t e = 3 * (std::size_t(1) << (k - 1)) - 2;
    if (e >= m) break;
    Series<Integer> denom = Series<Integer>::one(m);
    for (std::size_t j = 0; j <= k; ++j) {
      denom = denom * (Series<Integer>::one(m) - Series<Integer>::monomial(Integer(1), std::size_t(1) << j, m));
    }
    sum = sum + Series<Integer>::monomial(Integer(1), e, m) * recip(denom);
  }
  for (const auto& v : sum.coeffs()) out.push_back(v);
  return out;
}

std::vector<Integer> a110036_jacobi(std::size_t n) {
  const auto j = jacobi_expand(rueppel_series(2 * n + 1), n);
  std::vector<Integer> out;
  for (const auto& a : j.alphas) out.push_back(-to_integer(a));
  return out;
}

// Convolution recurrence for A = 1/(1 + x B): a_n = -sum_k b_k a_{n-1-k}.
std::vector<Integer> inverse_by_recurrence(const std::vector<Integer>& b, std::size_t n) {
  std::vector<Integer> a(n, Integer(0));
  if (n == 0) return a;
  a[0] = Integer(1);
  for (std::size_t i = 1; i < n; ++i) {
    Integer acc(0);
    for (std::size_t k = 0; k < i; ++k) acc += b[k] * a[i - 1 - k];
    a[i] = -acc;
  }
  return a;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> c;
  auto add = [&](CatalogEntry e) { c.push_back(std::move(e)); };

  add({"A000108", 0, GeneratorKind::gf_derived, "Catalan numbers, c = 1 + x c^2", ints({1, 1, 2, 5, 14, 42}), 0,
       [](std::size_t n) { return head(catalan_series(n), n); }, catalan_binomial, false,
       "binomial(2n, n)/(n + 1)"});

  add({"A005811", 0, GeneratorKind::direct_rule, "number of runs in the binary expansion of n",
       ints({0, 1, 2, 1, 2, 3, 2, 1, 2, 3, 4, 3, 2}), 0,
       [](std::size_t n) { return tabulate(n, 0, [](std::uint64_t k) { return binary_runs(k).total_runs; }); },
       [](std::size_t n) { return tabulate(n, 0, [](std::uint64_t k) { return std::popcount(k ^ (k >> 1)); }); },
       false, "number of 1's in the Gray code of n"});

  add({"A006257", 0, GeneratorKind::direct_rule, "Josephus problem, every second element",
       ints({1, 1, 3, 1, 3, 5, 7, 1, 3, 5, 7, 9, 11, 13, 15, 1, 3}), 1,
       [](std::size_t n) {
         std::vector<Integer> a;
         for (std::size_t k = 0; k < n; ++k) {
           if (k == 0) a.push_back(Integer(0));
           else a.push_back(Integer(2) * a[k / 2] + Integer(k % 2 == 0 ? -1 : 1));
         }
         return a;
       },
       [](std::size_t n) {
         std::vector<Integer> a = {Integer(0)};
         if (n > 1) {
           const auto p = josephus_pipeline(std::max<std::size_t>(n - 1, 4)).partial2;
           a.insert(a.end(), p.begin(), p.begin() + long(n - 1));
         }
         a.resize(n);
         return a;
       },
       false, "partial sums of the doubled Josephus pipeline"});

  add({"A014577", 0, GeneratorKind::direct_rule, "regular paper-folding sequence", {}, 0,
       [](std::size_t n) { return tabulate(n, 0, paperfold); },
       [](std::size_t n) {
         std::vector<Integer> p;
         for (std::size_t k = 0; k < n; ++k) {
           p.push_back(k % 2 == 0 ? Integer((k / 2) % 2 == 0 ? 1 : 0) : p[k / 2]);
         }
         return p;
       },
       false, "self-similarity P(2j) = [j even], P(2j+1) = P(j)"});

  add({"A036563", 0, GeneratorKind::direct_rule, "2^n - 3",
       ints({1, 5, 13, 29, 61, 125, 253, 509, 1021, 2045, 4093}), 2,
       [](std::size_t n) {
         std::vector<Integer> a;
         for (std::size_t k = 0; k < n; ++k) a.push_back(Integer(2).pow(k) - Integer(3));
         return a;
       },
       [](std::size_t n) {
         // (1 + 2x)/((1 - x)(1 - 2x)) gives a(n+2); run a(n) = 3a(n-1) - 2a(n-2) backwards for a(0), a(1).
         const std::size_t m = n + 2;
         const auto x = Series<Integer>::x(m);
         const auto one = Series<Integer>::one(m);
         const auto g = (one + Integer(2) * x) *
                        recip((one - x) * (one - Integer(2) * x));
         const Integer a1 = exact_div(Integer(3) * g[0] - g[1], Integer(2));
         const Integer a0 = exact_div(Integer(3) * a1 - g[0], Integer(2));
         std::vector<Integer> a = {a0, a1};
         for (std::size_t k = 0; a.size() < n; ++k) a.push_back(g[k]);
         a.resize(n);
         return a;
       },
       false, "generating function (1+2x)/((1-x)(1-2x)) extended backwards"});

  add({"A036987", 0, GeneratorKind::direct_rule, "Rueppel sequence, 1 iff n+1 is a power of 2",
       ints({1, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0}), 0,
       [](std::size_t n) { return head(rueppel_series(n), n); },
       [](std::size_t n) {
         std::vector<Integer> a;
         const auto cat = catalan_series(n);
         for (const auto& v : cat.coeffs()) a.push_back(mod_floor(v, Integer(2)));
         return a;
       },
       false, "Catalan numbers mod 2"});

  add({"A037834", 1, GeneratorKind::direct_rule, "number of i with |d(i) - d(i-1)| = 1 in base 2", {}, 1,
       [](std::size_t n) {
         return tabulate(n, 1, [](std::uint64_t k) { return binary_runs(k).digit_alternations; });
       },
       [](std::size_t n) { return tabulate(n, 1, [](std::uint64_t k) { return std::popcount(k ^ (k >> 1)) - 1; }); },
       false, "Gray-code weight minus one"});

  add({"A043545", 0, GeneratorKind::direct_rule, "1 - r_n", ints({0, 0, 1, 0, 1, 1, 1, 0, 1, 1, 1}), 0,
       [](std::size_t n) { return tabulate(n, 0, [](std::uint64_t k) { return is_power_of_two(k + 1) ? 0 : 1; }); },
       [](std::size_t n) {
         std::vector<Integer> a;
         const auto cat = catalan_series(n);
         for (const auto& v : cat.coeffs()) a.push_back(Integer(1) - mod_floor(v, Integer(2)));
         return a;
       },
       false, "1 - (Catalan mod 2)"});

  add({"A043725", 1, GeneratorKind::direct_rule, "numbers whose base-2 run count is 1 mod 4", {}, 1,
       [](std::size_t n) {
         std::vector<Integer> a;
         for (std::uint64_t k = 1; a.size() < n; ++k) {
           if (binary_runs(k).total_runs % 4 == 1) a.push_back(Integer(long(k)));
         }
         return a;
       },
       [](std::size_t n) {
         std::vector<Integer> a;
         for (std::uint64_t k = 1; a.size() < n; ++k) {
           if (std::popcount(k ^ (k >> 1)) % 4 == 1) a.push_back(Integer(long(k)));
         }
         return a;
       },
       false, "Gray-code weight 1 mod 4"});

  add({"A062050", 1, GeneratorKind::direct_rule, "n - 2^floor(log2 n) + 1",
       ints({1, 1, 2, 1, 2, 3, 4, 1, 2, 3, 4, 5, 6, 7, 8, 1, 2}), 1,
       [](std::size_t n) {
         return tabulate(n, 1, [](std::uint64_t k) { return long(k - floor_pow2(k)) + 1; });
       },
       [](std::size_t n) {
         auto p = josephus_pipeline(std::max<std::size_t>(n, 4)).partial1;
         p.resize(n);
         return p;
       },
       false, "partial sums of the marked Josephus sequence"});

  add({"A088567", 0, GeneratorKind::gf_derived, "non-squashing partitions of n into distinct parts",
       ints({1, 1, 1, 2, 2, 3, 4, 5, 6, 7, 9, 10, 13, 14, 18}), 0, a088567_gf,
       [](std::size_t n) {
         std::vector<Integer> a;
         for (unsigned k = 0; k < n; ++k) a.push_back(count_nonsquashing_distinct(k));
         return a;
       },
       false, "exhaustive partition count"});

  add({"A088748", 0, GeneratorKind::direct_rule, "1 + partial sums of 2P(k) - 1",
       ints({1, 2, 3, 2, 3, 4, 3, 2, 3, 4, 5, 4, 3, 4, 3, 2, 3}), 0,
       [](std::size_t n) {
         std::vector<Integer> a;
         long acc = 1;
         for (std::size_t k = 0; k < n; ++k) {
           a.push_back(Integer(acc));
           acc += 2 * paperfold(k) - 1;
         }
         return a;
       },
       {}, false, ""});

  add({"A110036", 1, GeneratorKind::relation_derived, "negated J-fraction alphas of r(x)",
       ints({-1, 2, 0, 0, -2, 0, 2, 0, -2, 2, 0}), 1, a110036_jacobi,
       [](std::size_t n) {
         // |A110036(m)| = 2 (A088567(m) mod 2) for m >= 2; the first alpha is r_1.
         const auto p = a088567_gf(n + 1);
         std::vector<Integer> a;
         for (std::size_t m = 1; m <= n; ++m) {
           a.push_back(m == 1 ? Integer(1) : Integer(2) * mod_floor(p[m], Integer(2)));
         }
         return a;
       },
       true, "2 (A088567 mod 2)"});

  add({"A126983", 0, GeneratorKind::gf_derived, "expansion of 1/(1 + x c(x))",
       ints({1, -1, 0, -1, -2, -6, -18, -57, -186, -622, -2120}), 0,
       [](std::size_t n) {
         return head(recip(Series<Integer>::one(n) + Series<Integer>::x(n) * catalan_series(n)), n);
       },
       [](std::size_t n) { return inverse_by_recurrence(catalan_binomial(n), n); }, false,
       "convolution recurrence with binomial Catalan numbers"});

  add({"A268411", 0, GeneratorKind::direct_rule, "parity of the number of runs of 1's in base 2", {}, 0,
       [](std::size_t n) { return tabulate(n, 0, [](std::uint64_t k) { return binary_runs(k).runs_of_ones % 2; }); },
       [](std::size_t n) {
         return tabulate(n, 0, [](std::uint64_t k) { return std::popcount(k & ~(k >> 1)) % 2; });
       },
       false, "run ends counted by bit masks"});

  add({"A339422", 0, GeneratorKind::gf_derived, "expansion of 1/(1 + x r(x))",
       ints({1, -1, 0, 1, -2, 2, 0, -3, 4, -2, -2, 6, -6, 0, 8, -11}), 0,
       [](std::size_t n) {
         return head(recip(Series<Integer>::one(n) + Series<Integer>::x(n) * rueppel_series(n)), n);
       },
       [](std::size_t n) {
         return inverse_by_recurrence(tabulate(n, 0, [](std::uint64_t k) { return is_power_of_two(k + 1) ? 1 : 0; }),
                                      n);
       },
       false, "convolution recurrence"});
  return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(std::string_view id) {
  for (const auto& e : catalog()) {
    if (e.id == id) return e;
  }
  throw Error(Errc::UnknownSequence, "unknown sequence " + std::string(id));
}

Sequence<Integer> catalog_terms(std::string_view id, std::size_t n) {
  const auto& e = catalog_entry(id);
  return Sequence<Integer>{e.generate(n), e.offset};
}

}  // namespace rueppel
