#include <omp.h>

#include <algorithm>
#include <chrono>
#include <charconv>
#include <exception>

#include "checks.hpp"
#include "rueppel/catalog.hpp"
#include "rueppel/error.hpp"
#include "rueppel/oeis.hpp"

namespace rueppel {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

// ---------------------------------------------------------------- references

namespace {

Error short_reference(std::string_view id, long index) {
  return Error(Errc::InsufficientTerms, std::string(id) + " has no term at index " + std::to_string(index), index);
}

}  // namespace

std::vector<Integer> CatalogReference::terms(std::string_view id, long first, std::size_t count) const {
  const CatalogEntry& e = catalog_entry(id);
  if (first < e.offset) throw short_reference(id, first);
  const auto all = e.generate(std::size_t(first - e.offset) + count);
  return {all.begin() + (first - e.offset), all.end()};
}

FixtureReference::FixtureReference(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::vector<Integer> FixtureReference::terms(std::string_view id, long first, std::size_t count) const {
  std::lock_guard lock(mutex_);
  auto it = cache_.find(id);
  if (it == cache_.end()) {
    OeisConfig cfg;
    cfg.fixture_dir = dir_;
    cfg.offline = true;
    const BFile b = OeisClient(cfg).fetch_bfile(id, FetchMode::fixture_only);
    std::map<long, Integer> values;
    for (const auto& e : b.entries) values.emplace(e.index, e.value);
    it = cache_.emplace(std::string(id), std::move(values)).first;
  }
  std::vector<Integer> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const long k = first + long(i);
    const auto v = it->second.find(k);
    if (v == it->second.end()) throw short_reference(id, k);
    out.push_back(v->second);
  }
  return out;
}

const ReferenceSource& default_reference() {
  static const FixtureReference ref(OeisConfig::from_env().fixture_dir);
  return ref;
}

// ------------------------------------------------------------------ context

CheckContext::CheckContext(const CheckInfo& info, std::size_t depth, const ReferenceSource& ref, CheckReport& report)
    : info_(info), depth_(depth), ref_(ref), report_(report) {}

bool CheckContext::expect(std::string_view part, long index, bool ok, const std::string& expected,
                          const std::string& actual) {
  if (ok) return true;
  const std::string key(part);
  if (!failed_parts_.insert(key).second) return false;
  if (!report_.first_counterexample) {
    report_.first_counterexample = Counterexample{key, index, expected, actual};
    report_.status = CheckStatus::fail;
  } else {
    report_.notes.push_back("also fails: " + key + " at index " + std::to_string(index) + ": expected " + expected +
                            ", got " + actual);
  }
  return false;
}

void CheckContext::note(std::string text) { report_.notes.push_back(std::move(text)); }

void CheckContext::inconclusive(std::string why) {
  if (report_.status != CheckStatus::fail) report_.status = CheckStatus::inconclusive;
  report_.notes.push_back("inconclusive: " + why);
}

void CheckContext::signs(SignProfile profile) { report_.sign_profile = std::move(profile); }

// ----------------------------------------------------------------- registry

const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> registry = [] {
    std::vector<CheckInfo> out;
    checks::add_hankel_checks(out);
    checks::add_polynomial_checks(out);
    checks::add_sequence_checks(out);
    return out;
  }();
  return registry;
}

const CheckInfo& check_info(std::string_view id) {
  for (const auto& c : check_registry()) {
    if (c.id == id) return c;
  }
  throw Error(Errc::UnknownCheck, "no check named " + std::string(id));
}

CheckReport run_check(std::string_view id, std::size_t depth, const ReferenceSource& ref) {
  const CheckInfo& info = check_info(id);
  if (depth < info.min_depth || depth > info.max_depth) {
    throw Error(Errc::DepthInfeasible,
                info.id + " runs at depth " + std::to_string(info.min_depth) + ".." + std::to_string(info.max_depth),
                long(depth));
  }
  CheckReport report;
  report.check_id = info.id;
  report.depth_requested = depth;
  const auto t0 = std::chrono::steady_clock::now();
  CheckContext ctx(info, depth, ref, report);
  try {
    info.body(ctx);
  } catch (const Error& e) {
    ctx.inconclusive(e.what());
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (report.first_counterexample) {
    const long idx = report.first_counterexample->index;
    report.depth_reached = idx <= 0 ? 0 : std::min<std::size_t>(std::size_t(idx - 1), depth);
  } else {
    report.depth_reached = report.status == CheckStatus::pass ? depth : 0;
  }
  return report;
}

// ------------------------------------------------------------------ profiles

std::size_t DepthProfile::depth_for(const CheckInfo& info) const {
  if (auto it = overrides.find(info.id); it != overrides.end()) return it->second;
  const auto clamp = [&](std::size_t d) { return std::clamp(d, info.min_depth, info.max_depth); };
  switch (kind) {
    case Kind::defaults: return info.default_depth;
    case Kind::printed: return clamp(info.printed_depth);
    case Kind::extended: return info.max_depth;
    case Kind::uniform: return clamp(uniform);
  }
  return info.default_depth;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

std::size_t parse_size(std::string_view text) {
  std::size_t v = 0;
  const auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || p != text.data() + text.size()) {
    throw Error(Errc::Usage, "not a depth: '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

DepthProfile DepthProfile::parse(std::string_view text) {
  DepthProfile p;
  while (!text.empty()) {
    const std::size_t comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) continue;
    if (item == "default") {
      p.kind = Kind::defaults;
    } else if (item == "printed") {
      p.kind = Kind::printed;
    } else if (item == "extended") {
      p.kind = Kind::extended;
    } else if (const std::size_t eq = item.find('='); eq != std::string_view::npos) {
      const std::string id(trim(item.substr(0, eq)));
      check_info(id);
      p.overrides[id] = parse_size(trim(item.substr(eq + 1)));
    } else {
      p.kind = Kind::uniform;
      p.uniform = parse_size(item);
    }
  }
  return p;
}

std::string DepthProfile::str() const {
  std::string out;
  switch (kind) {
    case Kind::defaults: out = "default"; break;
    case Kind::printed: out = "printed"; break;
    case Kind::extended: out = "extended"; break;
    case Kind::uniform: out = std::to_string(uniform); break;
  }
  for (const auto& [id, d] : overrides) out += "," + id + "=" + std::to_string(d);
  return out;
}

std::vector<CheckReport> run_all(const DepthProfile& profile, const ReferenceSource& ref, int jobs) {
  const auto& reg = check_registry();
  std::vector<CheckReport> reports(reg.size());
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (long i = 0; i < long(reg.size()); ++i) {
    const CheckInfo& info = reg[std::size_t(i)];
    const std::size_t depth = profile.depth_for(info);
    try {
      reports[std::size_t(i)] = run_check(info.id, depth, ref);
    } catch (const std::exception& e) {
      CheckReport r;
      r.check_id = info.id;
      r.depth_requested = depth;
      r.status = CheckStatus::inconclusive;
      r.notes.push_back(std::string("inconclusive: ") + e.what());
      reports[std::size_t(i)] = std::move(r);
    }
  }
  return reports;
}

std::vector<std::pair<std::string, ReferenceUse>> dependents(std::string_view id) {
  std::vector<std::pair<std::string, ReferenceUse>> out;
  for (const auto& c : check_registry()) {
    for (const auto& u : c.references) {
      if (u.id == id) out.emplace_back(c.id, u);
    }
  }
  return out;
}

RunSummary summarize(const std::vector<CheckReport>& reports) {
  RunSummary s;
  for (const auto& r : reports) {
    switch (r.status) {
      case CheckStatus::pass: ++s.passed; break;
      case CheckStatus::fail: ++s.failed; break;
      case CheckStatus::inconclusive: ++s.inconclusive; break;
    }
    s.seconds += r.seconds;
  }
  return s;
}

// ------------------------------------------------------------------ helpers

namespace checks {

Ints ints(std::initializer_list<long> v) { return Ints(v.begin(), v.end()); }

Rats rats(std::initializer_list<std::string_view> v) {
  Rats out;
  for (auto s : v) out.emplace_back(s);
  return out;
}

ZS at_xk(const ZS& s, std::size_t k, std::size_t n) {
  const ZS src = s.truncated((n + k - 1) / k);
  const ZS out = compose_xk(src, k);
  if (out.order() < n) {
    throw Error(Errc::InsufficientTruncation, "substitution needs more terms", long(out.order()));
  }
  return out.truncated(n);
}

Ints coeffs(const ZS& s, std::size_t n) {
  const auto& c = s.coeffs();
  return Ints(c.begin(), c.begin() + long(std::min(n, c.size())));
}

Ints hankel(const ZS& s, std::size_t n_max) { return hankel_transform(s.truncated(2 * n_max + 1), n_max).terms; }

Ints hankel(const Ints& a, std::size_t n_max) {
  return hankel_transform(std::span<const Integer>(a.data(), std::min(a.size(), 2 * n_max + 1)), n_max).terms;
}

std::string join(const Ints& v, std::size_t limit) {
  std::string out;
  for (std::size_t i = 0; i < std::min(v.size(), limit); ++i) {
    if (i) out += ", ";
    out += v[i].str();
  }
  if (v.size() > limit) out += ", ...";
  return out;
}

SignProfile sign_profile(std::string target, long first_index, const Ints& values, const Ints& target_values) {
  SignProfile p;
  p.target_id = std::move(target);
  p.first_index = first_index;
  for (std::size_t i = 0; i < values.size(); ++i) {
    p.signs.push_back(values[i].sign());
    if (i >= target_values.size() || !(values[i].abs() == target_values[i].abs())) p.abs_match = false;
  }
  return p;
}

}  // namespace checks

}  // namespace rueppel
