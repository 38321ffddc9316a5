#ifndef RUEPPEL_OEIS_HPP
#define RUEPPEL_OEIS_HPP

#include <atomic>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rueppel/integer.hpp"
#include "rueppel/series.hpp"

namespace rueppel {

enum class BFileSource { network, cache, fixture, text };
const char* to_string(BFileSource s);

struct BFileEntry {
  long index = 0;
  Integer value;
  friend bool operator==(const BFileEntry&, const BFileEntry&) = default;
};

struct BFile {
  std::string id;
  std::vector<BFileEntry> entries;
  BFileSource source = BFileSource::text;
  std::vector<std::string> comments;

  /// Contiguous run of values starting at the first index.
  Sequence<Integer> to_sequence() const;
};

/// "index value" lines; blank lines and '#' comments are skipped. Indices must
/// increase strictly. ParseError carries the 1-based line number.
BFile parse_bfile(std::string_view id, std::string_view text, BFileSource source = BFileSource::text);

/// One "index value" line per term, preceded by '# ' comment lines.
std::string format_bfile(const Sequence<Integer>& seq, const std::vector<std::string>& comments = {});

enum class FetchMode { fixture_only, network_with_cache };

struct OeisConfig {
  std::string base_url = "https://oeis.org";
  std::filesystem::path cache_dir;
  std::filesystem::path fixture_dir;
  bool offline = false;

  /// Defaults overridden by OEIS_BASE_URL, OEIS_CACHE_DIR, OEIS_OFFLINE=1 and
  /// RUEPPEL_FIXTURE_DIR.
  static OeisConfig from_env();
};

/// Returns the body for a URL, or nullopt when the network is unreachable.
using Fetcher = std::function<std::optional<std::string>(const std::string& url)>;
/// Live OEIS access (cpp-httplib over OpenSSL); lives in rueppel_net.
Fetcher https_fetcher();

/// Validates "A" followed by six digits; UnknownSequence otherwise.
void check_anumber(std::string_view id);

class OeisClient {
 public:
  /// Without a fetcher every network attempt is NetworkUnavailable.
  explicit OeisClient(OeisConfig config, Fetcher fetcher = {});

  /// OEIS_OFFLINE forces fixture-only. Network mode reads the cache first,
  /// then fetches and writes the cache atomically under an exclusive lock.
  BFile fetch_bfile(std::string_view id, FetchMode mode) const;

  std::size_t network_calls() const noexcept { return calls_.load(); }
  const OeisConfig& config() const noexcept { return config_; }

 private:
  BFile from_fixture(const std::string& id) const;
  OeisConfig config_;
  Fetcher fetcher_;
  mutable std::atomic<std::size_t> calls_{0};
};

/// Writes `body` to `path` through a temporary file and rename, holding an
/// flock on `path`.lock.
void write_atomically(const std::filesystem::path& path, std::string_view body);

struct Mismatch {
  long index = 0;
  Integer local;
  Integer remote;
};

struct DiffReport {
  long first_index = 0;
  long last_index = -1;
  std::size_t compared = 0;
  std::optional<Mismatch> first_mismatch;
  bool equal() const noexcept { return !first_mismatch.has_value(); }
};

/// Compares local term n with b-file index n + offset_shift over the overlap.
/// Reported indices are local indices. EmptyOverlap when nothing lines up.
DiffReport compare(const Sequence<Integer>& local, const BFile& remote, long offset_shift = 0);

}  // namespace rueppel

#endif  // RUEPPEL_OEIS_HPP
