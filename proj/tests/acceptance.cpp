// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "rueppel/catalog.hpp"
#include "rueppel/cfrac.hpp"
#include "rueppel/error.hpp"
#include "rueppel/expr.hpp"
#include "rueppel/hankel.hpp"
#include "rueppel/oeis.hpp"
#include "rueppel/verify.hpp"

using namespace rueppel;
namespace fs = std::filesystem;
using ZS = Series<Integer>;
using QS = Series<Rational>;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int failures = 0;

void criterion(int n, const std::string& title, double limit, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (o.ok && secs >= limit) o.fail("took " + std::to_string(secs) + "s, limit " + std::to_string(limit) + "s");
  if (!o.ok) ++failures;
  std::ostringstream line;
  line.precision(2);
  line << std::fixed << (o.ok ? "PASS" : "FAIL") << " criterion " << n << ": " << title << " (" << secs << "s)";
  if (!o.detail.empty()) line << ": " << o.detail;
  std::cout << line.str() << std::endl;
}

std::string describe(const CheckReport& r) {
  std::string s = r.check_id + " " + to_string(r.status);
  if (r.first_counterexample) {
    const auto& c = *r.first_counterexample;
    s += " [" + c.part + " at " + std::to_string(c.index) + ": expected " + c.expected + ", got " + c.actual + "]";
  }
  return s;
}

bool is_printed_part(const std::string& part) {
  return part.find("printed") != std::string::npos && part.find("closed form") == std::string::npos;
}

Outcome printed_prefixes() {
  Outcome o;
  DepthProfile profile;
  profile.kind = DepthProfile::Kind::printed;
  std::size_t parts_failed = 0;
  for (const auto& r : run_all(profile)) {
    if (r.status == CheckStatus::inconclusive) o.fail(r.check_id + " inconclusive");
    std::vector<std::string> bad;
    if (r.first_counterexample && is_printed_part(r.first_counterexample->part)) bad.push_back(describe(r));
    for (const auto& n : r.notes) {
      if (n.rfind("also fails: ", 0) == 0 && is_printed_part(n.substr(12))) bad.push_back(r.check_id + " " + n);
    }
    for (const auto& b : bad) {
      ++parts_failed;
      o.fail(b);
    }
  }
  if (parts_failed > 1) o.detail += " (+" + std::to_string(parts_failed - 1) + " more)";
  return o;
}

Outcome hankel_closed_forms() {
  Outcome o;
  const auto hr = hankel_transform(rueppel_series(81), 40).terms;
  for (std::size_t n = 0; n <= 40; ++n) {
    const long e = long(n) * long(n + 1) / 2;
    if (hr[n] != Integer(e % 2 ? -1 : 1)) o.fail("Hankel(r) at " + std::to_string(n));
  }
  const auto hc = hankel_transform(catalan_series(81), 40).terms;
  for (std::size_t n = 0; n <= 40; ++n) {
    if (hc[n] != Integer(1)) o.fail("Hankel(c) at " + std::to_string(n));
  }
  const ZS s = ZS::one(61) - ZS::x(61) * catalan_series(61);
  const auto hs = hankel_transform(s, 30).terms;
  for (std::size_t n = 0; n <= 30; ++n) {
    const long v = long(n + 1) * (n % 2 ? -1 : 1);
    if (hs[n] != Integer(v)) o.fail("Hankel(1 - x c) at " + std::to_string(n));
  }
  return o;
}

Outcome jacobi_product_formula() {
  Outcome o;
  std::mt19937 rng(2024);
  const long a0s[] = {1, -1, 2, -2};
  for (int trial = 0; trial < 50; ++trial) {
    JFraction<Integer> j;
    j.a0 = Integer(a0s[trial % 4]);
    for (int k = 0; k < 12; ++k) {
      j.alphas.push_back(oracle::random_int(rng, -3, 3));
      Integer beta(0);
      while (beta.is_zero()) beta = oracle::random_int(rng, -3, 3);
      j.betas.push_back(beta);
    }
    const ZS s = jacobi_eval(j, 25);
    const auto direct = hankel_transform(s, 12).terms;
    const auto product = hankel_from_jacobi(j.a0, std::span<const Integer>(j.betas), 12).terms;
    if (direct != product) o.fail("trial " + std::to_string(trial));
  }
  return o;
}

Outcome round_trips() {
  Outcome o;
  std::size_t s_done = 0, j_done = 0, s_none = 0, j_none = 0;
  auto trip = [&](const QS& s, const std::string& name, std::size_t order) {
    try {
      const auto sf = stieltjes_expand(s, order - 1);
      if (stieltjes_eval(sf, order) != s) o.fail("S round trip of " + name);
      ++s_done;
    } catch (const Error& e) {
      if (e.code() != Errc::SFractionBreakdown) throw;
      ++s_none;
    }
    const auto jf = jacobi_expand(s, (order - 1) / 2);
    if (jf.terminated_at && !jf.finite) {
      ++j_none;
    } else {
      if (jacobi_eval(jf, order) != s) o.fail("J round trip of " + name);
      ++j_done;
    }
  };
  for (const char* e : {"c", "r", "1 - x*r", "1 - x*c", "1/c", "1/(1 + x*r)", "1/(1 + x*c)", "motzkin",
                        "1 - x/r(x^2)", "1 - x + x^2*r(x^2)", "1 - x + x^2/r(x^2)", "x + 1/r(x^2)",
                        "1 - x + x^2/(1 + x^2*r(x^2))", "1 + x/(1 + x^2*r(x^2))", "r(x^2)/r"}) {
    trip(convert<Rational>(GfExpr::parse(e).expand<Integer>(25)), e, 25);
  }
  {
    const DegreeBoundScope bound(256);
    const auto s = convert<RatFunc>(rueppel_bc_series(9));
    const auto sf = stieltjes_expand(s, 8);
    if (stieltjes_eval(sf, 9) != s) o.fail("S round trip of r_{b,c}");
    ++s_done;
  }
  std::mt19937 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    trip(convert<Rational>(oracle::random_unit_series(rng, 15)), "random series " + std::to_string(trial), 15);
  }
  o.detail = std::to_string(s_done) + " S and " + std::to_string(j_done) + " J round trips; " +
             std::to_string(s_none) + " S and " + std::to_string(j_none) + " J breakdowns (no fraction exists)" +
             (o.ok ? "" : "; " + o.detail);
  return o;
}

Outcome run_checks(const std::vector<std::pair<std::string, std::size_t>>& plan) {
  Outcome o;
  std::size_t passed = 0;
  for (const auto& [id, depth] : plan) {
    const auto r = run_check(id, depth);
    if (r.status == CheckStatus::pass) {
      ++passed;
    } else {
      o.fail(describe(r));
    }
  }
  const std::string tally = std::to_string(passed) + "/" + std::to_string(plan.size()) + " checks pass";
  o.detail = o.ok ? tally : tally + "; " + o.detail;
  return o;
}

Outcome sequence_checks() {
  std::vector<std::pair<std::string, std::size_t>> plan;
  for (const auto& c : check_registry()) {
    if (c.id.rfind("C", 0) == 0 && c.id.rfind("C9", 0) != 0 && c.id.rfind("CAT", 0) != 0) {
      plan.emplace_back(c.id, std::min<std::size_t>(32, c.max_depth));
    }
  }
  return run_checks(plan);
}

Outcome determinant_oracle() {
  Outcome o;
  std::mt19937 rng(42);
  for (int t = 0; t < 200; ++t) {
    const auto m = oracle::random_int_matrix(rng, std::size_t(1 + t % 6));
    if (det_fraction_free(m) != oracle::cofactor_det(m)) o.fail("integer matrix " + std::to_string(t));
  }
  for (int t = 0; t < 50; ++t) {
    const auto m = oracle::random_poly2_matrix(rng, std::size_t(1 + t % 4));
    if (det_fraction_free(m) != oracle::cofactor_det(m)) o.fail("Poly2 matrix " + std::to_string(t));
  }
  return o;
}

Outcome offline_catalog() {
  Outcome o;
  ::setenv("OEIS_OFFLINE", "1", 1);
  std::size_t fetcher_calls = 0;
  const OeisClient client(OeisConfig::from_env(), [&](const std::string&) -> std::optional<std::string> {
    ++fetcher_calls;
    return std::nullopt;
  });
  std::size_t min_compared = SIZE_MAX;
  for (const auto& e : catalog()) {
    const BFile b = client.fetch_bfile(e.id, FetchMode::network_with_cache);
    const auto remote = b.to_sequence();
    const auto local = catalog_terms(e.id, remote.terms.size());
    const auto diff = compare(local, b);
    if (!diff.equal()) o.fail(e.id + " differs from its fixture");
    min_compared = std::min(min_compared, diff.compared);
    if (diff.compared < 64) o.fail(e.id + " compared only " + std::to_string(diff.compared) + " terms");
  }
  if (client.network_calls() != 0 || fetcher_calls != 0) o.fail("network was used");
  if (o.ok) o.detail = std::to_string(catalog().size()) + " sequences, at least " + std::to_string(min_compared) +
                       " terms each, 0 network calls";
  return o;
}

fs::path fresh_dir() {
  std::random_device rd;
  const fs::path p = fs::temp_directory_path() / ("rueppel-fault-" + std::to_string(rd()));
  fs::create_directories(p);
  return p;
}

// Adds one to the value at index k; returns false when k is not in the file.
bool corrupt(const fs::path& file, long k) {
  std::ifstream in(file);
  std::ostringstream out;
  std::string line;
  bool done = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    long idx;
    std::string value;
    if (!line.empty() && line[0] != '#' && (ls >> idx >> value) && idx == k) {
      line = std::to_string(idx) + " " + (Integer(value) + Integer(1)).str();
      done = true;
    }
    out << line << '\n';
  }
  in.close();
  std::ofstream(file) << out.str();
  return done;
}

// Index of the corrupted term per sequence; offset + 3 unless a dependent
// check first reads the sequence later than that.
long fault_index(const CatalogEntry& e) {
  static const std::map<std::string, long> later{{"A110036", 4}, {"A037834", 4}, {"A062050", 4}};
  const auto it = later.find(e.id);
  return it != later.end() ? it->second : e.offset + 3;
}

Outcome fault_injection() {
  Outcome o;
  const fs::path source = OeisConfig::from_env().fixture_dir;
  const DepthProfile profile;
  const auto baseline = run_all(profile, FixtureReference(source));
  std::size_t caught = 0;
  for (const auto& e : catalog()) {
    const fs::path dir = fresh_dir();
    for (const auto& f : fs::directory_iterator(source)) fs::copy_file(f.path(), dir / f.path().filename());
    const long k = fault_index(e);
    if (!corrupt(dir / (e.id + ".txt"), k)) {
      o.fail(e.id + ": index " + std::to_string(k) + " missing from fixture");
      fs::remove_all(dir);
      continue;
    }
    const auto after = run_all(profile, FixtureReference(dir));
    fs::remove_all(dir);
    std::map<std::string, long> expected;
    for (const auto& [check, use] : dependents(e.id)) {
      const auto idx = use.check_index(k);
      const auto it = expected.find(check);
      if (it == expected.end() || idx < it->second) expected[check] = idx;
    }
    for (std::size_t i = 0; i < after.size(); ++i) {
      const auto& before = baseline[i];
      const auto& now = after[i];
      const auto it = expected.find(now.check_id);
      if (before.status != CheckStatus::pass) {
        if (it == expected.end() && before.first_counterexample && now.first_counterexample &&
            before.first_counterexample->index != now.first_counterexample->index) {
          o.fail(e.id + ": red check " + now.check_id + " moved its counterexample");
        }
        continue;
      }
      if (it == expected.end()) {
        if (now.status != before.status) o.fail(e.id + ": unrelated " + describe(now));
        continue;
      }
      if (now.status != CheckStatus::fail) {
        o.fail(e.id + ": " + now.check_id + " did not notice the fault");
      } else if (now.first_counterexample->index != it->second) {
        o.fail(e.id + ": " + now.check_id + " reported index " + std::to_string(now.first_counterexample->index) +
               ", expected " + std::to_string(it->second));
      } else {
        ++caught;
      }
    }
  }
  if (o.ok) o.detail = std::to_string(caught) + " dependent checks caught their fault at the mapped index";
  return o;
}

}  // namespace

int main() {
  criterion(1, "printed prefixes reproduce", 10, printed_prefixes);
  criterion(2, "Hankel closed forms of r, c and 1 - x c", 30, hankel_closed_forms);
  criterion(3, "J-fraction product formula on 50 random fractions", 20, jacobi_product_formula);
  criterion(4, "S and J expand/eval round trips", 10, round_trips);
  criterion(5, "sign alternation and Riordan arrays", 20, [] {
    return run_checks({{"P1-sign-alternation", 12}, {"P2-riordan-rb", 24}, {"P3-riordan-stretched", 24}});
  });
  criterion(6, "two-parameter S-parameters, closed form and Hankel", 60, [] {
    return run_checks({{"C9-sbc", 64}, {"C9-sbc-closed-form", 64}, {"C9-hankel", 12}});
  });
  criterion(7, "sequence claims at depth 32", 120, sequence_checks);
  criterion(8, "fraction-free determinants match cofactor expansion", 10, determinant_oracle);
  criterion(9, "offline catalog agrees with fixtures", 30, offline_catalog);
  criterion(10, "fixture fault injection is localized", 300, fault_injection);
  return failures == 0 ? 0 : 1;
}
