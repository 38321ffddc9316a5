#ifndef RUEPPEL_VERIFY_HPP
#define RUEPPEL_VERIFY_HPP

#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "rueppel/integer.hpp"

namespace rueppel {

enum class CheckStatus { pass, fail, inconclusive };
const char* to_string(CheckStatus s);

struct Counterexample {
  std::string part;  // which sub-claim of the check
  long index = 0;
  std::string expected;
  std::string actual;
};

/// "Signed version of X": |observed_n| = X_n; the signs are data.
struct SignProfile {
  std::string target_id;
  long first_index = 0;
  std::vector<int> signs;
  bool abs_match = true;
};

struct CheckReport {
  std::string check_id;
  std::size_t depth_requested = 0;
  std::size_t depth_reached = 0;
  CheckStatus status = CheckStatus::pass;
  std::optional<Counterexample> first_counterexample;  // present iff status == fail
  std::vector<std::string> notes;
  std::optional<SignProfile> sign_profile;
  double seconds = 0;
};

/// Reference values for OEIS sequences, indexed as in the OEIS.
class ReferenceSource {
 public:
  virtual ~ReferenceSource() = default;
  /// Terms first, first+1, ..., first+count-1; InsufficientTerms if not covered.
  virtual std::vector<Integer> terms(std::string_view id, long first, std::size_t count) const = 0;
  virtual std::string name() const = 0;
};

/// Catalog generators as the reference (no files involved).
class CatalogReference final : public ReferenceSource {
 public:
  std::vector<Integer> terms(std::string_view id, long first, std::size_t count) const override;
  std::string name() const override { return "catalog"; }
};

/// b-file fixtures from a directory, parsed once per sequence.
class FixtureReference final : public ReferenceSource {
 public:
  explicit FixtureReference(std::filesystem::path dir);
  std::vector<Integer> terms(std::string_view id, long first, std::size_t count) const override;
  std::string name() const override { return "fixtures:" + dir_.string(); }

 private:
  std::filesystem::path dir_;
  mutable std::mutex mutex_;
  mutable std::map<std::string, std::map<long, Integer>, std::less<>> cache_;
};

/// Fixtures from the configured fixture directory (RUEPPEL_FIXTURE_DIR).
const ReferenceSource& default_reference();

enum class CheckDomain { integer, polynomial, catalog };

/// A check reads fixture `id`; its value at OEIS index k is first compared at
/// check index scale*k + shift.
struct ReferenceUse {
  std::string id;
  long scale = 1;
  long shift = 0;
  long check_index(long k) const { return scale * k + shift; }
};

class CheckContext;

struct CheckInfo {
  std::string id;
  std::string claim;
  CheckDomain domain = CheckDomain::integer;
  std::string depth_unit;
  std::size_t printed_depth = 0;
  std::size_t default_depth = 0;
  std::size_t min_depth = 0;
  std::size_t max_depth = 0;
  std::vector<ReferenceUse> references;
  std::function<void(CheckContext&)> body;
};

/// Collects comparisons for one run. Parts are evaluated in order; the first
/// mismatch overall becomes the counterexample, later parts still run and
/// their first mismatches are listed in the notes.
class CheckContext {
 public:
  CheckContext(const CheckInfo& info, std::size_t depth, const ReferenceSource& ref, CheckReport& report);

  std::size_t depth() const noexcept { return depth_; }
  const ReferenceSource& ref() const noexcept { return ref_; }
  std::vector<Integer> ref_terms(std::string_view id, long first, std::size_t count) const {
    return ref_.terms(id, first, count);
  }

  /// False (and recorded) when ok is false; no-op once `part` has failed.
  bool expect(std::string_view part, long index, bool ok, const std::string& expected, const std::string& actual);
  template <typename T>
  bool same(std::string_view part, long index, const T& expected, const T& actual) {
    if (part_failed(part)) return false;
    const bool ok = expected == actual;
    return ok || expect(part, index, false, to_text(expected), to_text(actual));
  }
  /// Compares printed[i] with computed[i] for i < min(printed, limit).
  template <typename T>
  bool prefix(std::string_view part, const std::vector<T>& printed, const std::vector<T>& computed,
              std::size_t limit, long first_index = 0) {
    const std::size_t n = std::min(printed.size(), limit);
    for (std::size_t i = 0; i < n; ++i) {
      if (i >= computed.size()) {
        return expect(part, first_index + long(i), false, to_text(printed[i]), "<not computed>");
      }
      if (!same(part, first_index + long(i), printed[i], computed[i])) return false;
    }
    return true;
  }

  bool part_failed(std::string_view part) const { return failed_parts_.count(std::string(part)) != 0; }
  bool failed() const noexcept { return !failed_parts_.empty(); }
  void note(std::string text);
  void inconclusive(std::string why);
  void signs(SignProfile profile);

  template <typename T>
  static std::string to_text(const T& v) {
    if constexpr (std::is_arithmetic_v<T>) {
      return std::to_string(v);
    } else if constexpr (std::is_same_v<T, std::string>) {
      return v;
    } else {
      return to_string(v);
    }
  }

 private:
  const CheckInfo& info_;
  std::size_t depth_;
  const ReferenceSource& ref_;
  CheckReport& report_;
  std::set<std::string> failed_parts_;
};

/// Every registered check, in a fixed order.
const std::vector<CheckInfo>& check_registry();
/// UnknownCheck when absent.
const CheckInfo& check_info(std::string_view id);

/// Deterministic; DepthInfeasible outside [min_depth, max_depth].
CheckReport run_check(std::string_view id, std::size_t depth, const ReferenceSource& ref = default_reference());

/// How run_all picks depths: "default", "printed", "extended" (each check's
/// maximum), a number applied to every check (clamped into range), plus
/// per-check overrides "ID=n".
struct DepthProfile {
  enum class Kind { defaults, printed, extended, uniform } kind = Kind::defaults;
  std::size_t uniform = 0;
  std::map<std::string, std::size_t, std::less<>> overrides;

  std::size_t depth_for(const CheckInfo& info) const;
  /// Comma-separated items such as "extended", "24" or "C9-sbc=32".
  static DepthProfile parse(std::string_view text);
  std::string str() const;
};

/// Runs every check, concurrently up to `jobs` threads (0 = OpenMP default).
/// Reports come back in registry order.
std::vector<CheckReport> run_all(const DepthProfile& profile, const ReferenceSource& ref = default_reference(),
                                 int jobs = 0);

/// Checks whose outcome depends on fixture `id`, with the index mapping.
std::vector<std::pair<std::string, ReferenceUse>> dependents(std::string_view id);

struct RunSummary {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t inconclusive = 0;
  double seconds = 0;
};
RunSummary summarize(const std::vector<CheckReport>& reports);

/// Readings chosen by prefix calibration for generating functions the text
/// prints ambiguously. Each entry names the reading that matched.
struct Calibration {
  std::string c3b;
  std::string c4;
  std::string c6;
  std::string c8;
};
const Calibration& calibrated_readings();

}  // namespace rueppel

#endif  // RUEPPEL_VERIFY_HPP
