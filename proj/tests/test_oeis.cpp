#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "rueppel/catalog.hpp"
#include "rueppel/oeis.hpp"
#include "rueppel/series.hpp"

using namespace rueppel;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("rueppel-test-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

OeisConfig fixture_config() {
  OeisConfig c = OeisConfig::from_env();
  c.offline = false;
  return c;
}

}  // namespace

TEST_CASE("b-file parsing") {
  const BFile b = parse_bfile("A000108", "# Catalan\n0 1\n1 1\n\n2 2\n");
  REQUIRE(b.entries.size() == 3);
  CHECK(b.entries[2].index == 2);
  CHECK(b.entries[2].value == Integer(2));
  CHECK(b.comments.size() == 1);
}

TEST_CASE("malformed line reports its line number") {
  try {
    parse_bfile("A000108", "1 1\n2 1\n3 x\n");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
    CHECK(e.where() == std::optional<std::int64_t>(3));
  }
  CHECK_THROWS_AS(parse_bfile("A000108", "1 1\n1 2\n"), Error);
}

TEST_CASE("format and parse round trip") {
  const Sequence<Integer> s{{Integer(3), Integer(-4), Integer("99999999999999999999")}, 5};
  const BFile b = parse_bfile("A000001", format_bfile(s, {"provenance"}));
  CHECK(b.to_sequence() == s);
}

TEST_CASE("fixtures carry the printed prefixes") {
  const OeisClient client(fixture_config());
  const BFile cat = client.fetch_bfile("A000108", FetchMode::fixture_only);
  CHECK(cat.source == BFileSource::fixture);
  const std::vector<long> want{1, 1, 2, 5, 14};
  for (std::size_t i = 0; i < want.size(); ++i) {
    CHECK(cat.entries[i].index == long(i));
    CHECK(cat.entries[i].value == Integer(want[i]));
  }
  const BFile nsq = client.fetch_bfile("A088567", FetchMode::fixture_only);
  const std::vector<long> want2{1, 1, 1, 2, 2, 3, 4};
  for (std::size_t i = 0; i < want2.size(); ++i) CHECK(nsq.entries[i].value == Integer(want2[i]));
}

TEST_CASE("fixture-only mode never touches the network") {
  std::atomic<int> calls{0};
  const Fetcher counting = [&](const std::string&) -> std::optional<std::string> {
    ++calls;
    return std::nullopt;
  };
  const OeisClient client(fixture_config(), counting);
  for (const auto& e : catalog()) client.fetch_bfile(e.id, FetchMode::fixture_only);
  CHECK(calls == 0);
  CHECK(client.network_calls() == 0);
}

TEST_CASE("offline flag forces fixtures even in network mode") {
  std::atomic<int> calls{0};
  OeisConfig cfg = fixture_config();
  cfg.offline = true;
  const OeisClient client(cfg, [&](const std::string&) -> std::optional<std::string> {
    ++calls;
    return std::nullopt;
  });
  CHECK(client.fetch_bfile("A005811", FetchMode::network_with_cache).source == BFileSource::fixture);
  CHECK(calls == 0);
}

TEST_CASE("missing fixture") {
  TempDir dir;
  OeisConfig cfg = fixture_config();
  cfg.fixture_dir = dir.path;
  try {
    OeisClient(cfg).fetch_bfile("A000108", FetchMode::fixture_only);
    FAIL("expected FixtureMissing");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::FixtureMissing);
  }
}

TEST_CASE("network mode caches atomically and reuses the cache") {
  TempDir dir;
  OeisConfig cfg = fixture_config();
  cfg.cache_dir = dir.path / "cache";
  cfg.base_url = "https://example.invalid";
  std::string last_url;
  const OeisClient client(cfg, [&](const std::string& url) -> std::optional<std::string> {
    last_url = url;
    return std::string("0 1\n1 1\n2 2\n");
  });
  CHECK(client.fetch_bfile("A000108", FetchMode::network_with_cache).source == BFileSource::network);
  CHECK(last_url == "https://example.invalid/A000108/b000108.txt");
  CHECK(fs::exists(cfg.cache_dir / "A000108.txt"));
  CHECK(client.fetch_bfile("A000108", FetchMode::network_with_cache).source == BFileSource::cache);
  CHECK(client.network_calls() == 1);
  for (const auto& entry : fs::directory_iterator(cfg.cache_dir)) {
    CHECK(entry.path().filename().string().find(".tmp") == std::string::npos);
  }
}

TEST_CASE("a damaged cache entry is never read back as valid") {
  TempDir dir;
  OeisConfig cfg = fixture_config();
  cfg.cache_dir = dir.path;
  {
    std::ofstream(dir.path / "A000108.txt") << "0 1\n1 1\n2 ";  // torn write
  }
  int calls = 0;
  const OeisClient client(cfg, [&](const std::string&) -> std::optional<std::string> {
    ++calls;
    return std::string("0 1\n1 1\n2 2\n");
  });
  const BFile b = client.fetch_bfile("A000108", FetchMode::network_with_cache);
  CHECK(b.source == BFileSource::network);
  CHECK(b.entries.size() == 3);
  CHECK(calls == 1);
}

TEST_CASE("write_atomically replaces the whole file") {
  TempDir dir;
  const fs::path p = dir.path / "x.txt";
  write_atomically(p, "first\n");
  write_atomically(p, "second\n");
  std::ifstream in(p);
  std::string s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(s == "second\n");
}

TEST_CASE("network failure") {
  TempDir dir;
  OeisConfig cfg = fixture_config();
  cfg.cache_dir = dir.path;
  const OeisClient client(cfg, [](const std::string&) { return std::optional<std::string>(); });
  CHECK_THROWS_AS(client.fetch_bfile("A000108", FetchMode::network_with_cache), Error);
}

TEST_CASE("compare against fixtures") {
  const OeisClient client(fixture_config());
  const BFile b = client.fetch_bfile("A005811", FetchMode::fixture_only);
  const auto local = catalog_terms("A005811", 128);
  const DiffReport same = compare(local, b, 0);
  CHECK(same.equal());
  CHECK(same.compared >= 64);
  const DiffReport shifted = compare(local, b, 1);
  REQUIRE_FALSE(shifted.equal());
  CHECK(shifted.first_mismatch->index == 0);
  CHECK_THROWS_AS(compare(Sequence<Integer>{{}, 0}, b, 0), Error);
}

TEST_CASE("Rueppel entry equals Catalan fixture mod 2") {
  const OeisClient client(fixture_config());
  const BFile cat = client.fetch_bfile("A000108", FetchMode::fixture_only);
  const auto r = rueppel_series(64);
  for (std::size_t n = 0; n < 64; ++n) CHECK(r[n] == mod_floor(cat.entries[n].value, Integer(2)));
}
