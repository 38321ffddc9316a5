#include "rueppel/oeis.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "rueppel/error.hpp"

#ifndef RUEPPEL_DEFAULT_FIXTURE_DIR
#define RUEPPEL_DEFAULT_FIXTURE_DIR "fixtures/oeis"
#endif

namespace rueppel {

const char* to_string(BFileSource s) {
  switch (s) {
    case BFileSource::network: return "network";
    case BFileSource::cache: return "cache";
    case BFileSource::fixture: return "fixture";
    case BFileSource::text: return "text";
  }
  return "?";
}

Sequence<Integer> BFile::to_sequence() const {
  Sequence<Integer> s;
  if (entries.empty()) return s;
  s.offset = entries.front().index;
  for (const auto& e : entries) {
    if (e.index != s.offset + long(s.terms.size())) break;
    s.terms.push_back(e.value);
  }
  return s;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_token(std::string_view t) {
  if (!t.empty() && t.front() == '-') t.remove_prefix(1);
  if (t.empty()) return false;
  for (char ch : t) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

Error parse_error(long line, const std::string& why) {
  return Error(Errc::ParseError, "line " + std::to_string(line) + ": " + why, line);
}

}  // namespace

BFile parse_bfile(std::string_view id, std::string_view text, BFileSource source) {
  BFile out;
  out.id = std::string(id);
  out.source = source;
  long line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '#') {
      out.comments.emplace_back(trim(line.substr(1)));
      continue;
    }
    const std::size_t sp = line.find_first_of(" \t");
    if (sp == std::string_view::npos) throw parse_error(line_no, "expected \"index value\"");
    const std::string_view idx = line.substr(0, sp);
    const std::string_view val = trim(line.substr(sp));
    if (!is_integer_token(idx) || !is_integer_token(val)) throw parse_error(line_no, "non-integer field");
    const long index = std::stol(std::string(idx));
    if (!out.entries.empty() && index <= out.entries.back().index) {
      throw parse_error(line_no, "indices must increase");
    }
    out.entries.push_back({index, Integer(val)});
  }
  return out;
}

std::string format_bfile(const Sequence<Integer>& seq, const std::vector<std::string>& comments) {
  std::string out;
  for (const auto& c : comments) out += "# " + c + "\n";
  for (std::size_t i = 0; i < seq.terms.size(); ++i) {
    out += std::to_string(seq.offset + long(i)) + " " + seq.terms[i].str() + "\n";
  }
  return out;
}

OeisConfig OeisConfig::from_env() {
  OeisConfig c;
  if (const char* v = std::getenv("OEIS_BASE_URL"); v && *v) c.base_url = v;
  if (const char* v = std::getenv("OEIS_CACHE_DIR"); v && *v) {
    c.cache_dir = v;
  } else if (const char* home = std::getenv("HOME"); home && *home) {
    c.cache_dir = std::filesystem::path(home) / ".cache" / "rueppel-lab" / "oeis";
  } else {
    c.cache_dir = std::filesystem::temp_directory_path() / "rueppel-lab-oeis";
  }
  if (const char* v = std::getenv("RUEPPEL_FIXTURE_DIR"); v && *v) {
    c.fixture_dir = v;
  } else {
    c.fixture_dir = RUEPPEL_DEFAULT_FIXTURE_DIR;
  }
  if (const char* v = std::getenv("OEIS_OFFLINE"); v && std::string_view(v) == "1") c.offline = true;
  return c;
}

void check_anumber(std::string_view id) {
  bool ok = id.size() == 7 && id.front() == 'A';
  for (std::size_t i = 1; ok && i < id.size(); ++i) ok = std::isdigit(static_cast<unsigned char>(id[i])) != 0;
  if (!ok) throw Error(Errc::UnknownSequence, "not an A-number: " + std::string(id));
}

OeisClient::OeisClient(OeisConfig config, Fetcher fetcher)
    : config_(std::move(config)), fetcher_(std::move(fetcher)) {}

namespace {

std::optional<std::string> slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

BFile OeisClient::from_fixture(const std::string& id) const {
  const auto path = config_.fixture_dir / (id + ".txt");
  const auto body = slurp(path);
  if (!body) throw Error(Errc::FixtureMissing, "no fixture " + path.string());
  return parse_bfile(id, *body, BFileSource::fixture);
}

BFile OeisClient::fetch_bfile(std::string_view id_view, FetchMode mode) const {
  check_anumber(id_view);
  const std::string id(id_view);
  if (mode == FetchMode::fixture_only || config_.offline) return from_fixture(id);

  const auto cache_path = config_.cache_dir / (id + ".txt");
  if (auto cached = slurp(cache_path)) {
    try {
      return parse_bfile(id, *cached, BFileSource::cache);
    } catch (const Error&) {
      // A damaged cache entry is refetched below.
    }
  }
  const std::string url = config_.base_url + "/" + id + "/b" + id.substr(1) + ".txt";
  ++calls_;
  const auto body = fetcher_ ? fetcher_(url) : std::nullopt;
  if (!body) throw Error(Errc::NetworkUnavailable, "cannot reach " + url);
  BFile parsed = parse_bfile(id, *body, BFileSource::network);
  std::filesystem::create_directories(config_.cache_dir);
  write_atomically(cache_path, *body);
  return parsed;
}

void write_atomically(const std::filesystem::path& path, std::string_view body) {
  const std::string lock_path = path.string() + ".lock";
  const int lock_fd = ::open(lock_path.c_str(), O_CREAT | O_RDWR | O_CLOEXEC, 0644);
  if (lock_fd < 0) throw Error(Errc::NetworkUnavailable, "cannot open lock " + lock_path);
  ::flock(lock_fd, LOCK_EX);
  std::random_device rd;
  const auto tmp = std::filesystem::path(path.string() + ".tmp" + std::to_string(rd()));
  try {
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out.write(body.data(), std::streamsize(body.size()));
      out.flush();
      if (!out) throw Error(Errc::NetworkUnavailable, "cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
  } catch (...) {
    std::error_code ec;
    std::filesystem::remove(tmp, ec);
    ::flock(lock_fd, LOCK_UN);
    ::close(lock_fd);
    throw;
  }
  ::flock(lock_fd, LOCK_UN);
  ::close(lock_fd);
}

DiffReport compare(const Sequence<Integer>& local, const BFile& remote, long offset_shift) {
  std::map<long, const Integer*> by_index;
  for (const auto& e : remote.entries) by_index.emplace(e.index, &e.value);
  DiffReport r;
  bool first = true;
  for (std::size_t i = 0; i < local.terms.size(); ++i) {
    const long n = local.offset + long(i);
    const auto it = by_index.find(n + offset_shift);
    if (it == by_index.end()) continue;
    if (first) {
      r.first_index = n;
      first = false;
    }
    r.last_index = n;
    ++r.compared;
    if (!r.first_mismatch && !(local.terms[i] == *it->second)) r.first_mismatch = Mismatch{n, local.terms[i], *it->second};
  }
  if (r.compared == 0) throw Error(Errc::EmptyOverlap, "no overlapping indices for " + remote.id);
  return r;
}

}  // namespace rueppel
