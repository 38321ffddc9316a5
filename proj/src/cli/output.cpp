// Output records, their renderings, and the key/value configuration file.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "rueppel/cli.hpp"
#include "rueppel/error.hpp"
#include "rueppel/oeis.hpp"

namespace rueppel {

using json = nlohmann::ordered_json;

OutputFormat parse_output_format(std::string_view s) {
  if (s == "plain") return OutputFormat::plain;
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  if (s == "bfile") return OutputFormat::bfile;
  throw Error(Errc::Usage, "unknown format '" + std::string(s) + "' (plain, json, csv, bfile)");
}

const char* to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::plain: return "plain";
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    case OutputFormat::bfile: return "bfile";
  }
  return "?";
}

namespace {

bool same_report(const CheckReport& a, const CheckReport& b) {
  const auto ce = [](const std::optional<Counterexample>& x, const std::optional<Counterexample>& y) {
    if (x.has_value() != y.has_value()) return false;
    return !x || (x->part == y->part && x->index == y->index && x->expected == y->expected && x->actual == y->actual);
  };
  const auto sp = [](const std::optional<SignProfile>& x, const std::optional<SignProfile>& y) {
    if (x.has_value() != y.has_value()) return false;
    return !x || (x->target_id == y->target_id && x->first_index == y->first_index && x->signs == y->signs &&
                  x->abs_match == y->abs_match);
  };
  return a.check_id == b.check_id && a.depth_requested == b.depth_requested && a.depth_reached == b.depth_reached &&
         a.status == b.status && ce(a.first_counterexample, b.first_counterexample) && a.notes == b.notes &&
         sp(a.sign_profile, b.sign_profile) && a.seconds == b.seconds;
}

CheckStatus parse_status(const std::string& s) {
  if (s == "pass") return CheckStatus::pass;
  if (s == "fail") return CheckStatus::fail;
  if (s == "inconclusive") return CheckStatus::inconclusive;
  throw Error(Errc::ParseError, "unknown status '" + s + "'");
}

json pairs_to_json(const std::vector<std::pair<std::string, std::string>>& v) {
  json o = json::object();
  for (const auto& [k, val] : v) o[k] = val;
  return o;
}

std::vector<std::pair<std::string, std::string>> pairs_from_json(const json& o) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [k, v] : o.items()) out.emplace_back(k, v.get<std::string>());
  return out;
}

json report_to_json(const CheckReport& r) {
  json j;
  j["check_id"] = r.check_id;
  j["status"] = to_string(r.status);
  j["depth_requested"] = r.depth_requested;
  j["depth_reached"] = r.depth_reached;
  j["seconds"] = r.seconds;
  if (r.first_counterexample) {
    const auto& c = *r.first_counterexample;
    j["first_counterexample"] = {{"part", c.part}, {"index", c.index}, {"expected", c.expected}, {"actual", c.actual}};
  } else {
    j["first_counterexample"] = nullptr;
  }
  j["notes"] = r.notes;
  if (r.sign_profile) {
    const auto& s = *r.sign_profile;
    j["sign_profile"] = {
        {"target_id", s.target_id}, {"first_index", s.first_index}, {"signs", s.signs}, {"abs_match", s.abs_match}};
  } else {
    j["sign_profile"] = nullptr;
  }
  return j;
}

CheckReport report_from_json(const json& j) {
  CheckReport r;
  r.check_id = j.at("check_id").get<std::string>();
  r.status = parse_status(j.at("status").get<std::string>());
  r.depth_requested = j.at("depth_requested").get<std::size_t>();
  r.depth_reached = j.at("depth_reached").get<std::size_t>();
  r.seconds = j.at("seconds").get<double>();
  if (const auto& c = j.at("first_counterexample"); !c.is_null()) {
    r.first_counterexample = Counterexample{c.at("part").get<std::string>(), c.at("index").get<long>(),
                                            c.at("expected").get<std::string>(), c.at("actual").get<std::string>()};
  }
  r.notes = j.at("notes").get<std::vector<std::string>>();
  if (const auto& s = j.at("sign_profile"); !s.is_null()) {
    r.sign_profile = SignProfile{s.at("target_id").get<std::string>(), s.at("first_index").get<long>(),
                                 s.at("signs").get<std::vector<int>>(), s.at("abs_match").get<bool>()};
  }
  return r;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  return out + "\n";
}

std::string join_values(const std::vector<std::string>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i];
  }
  return out;
}

std::string sign_word(const std::vector<int>& signs) {
  std::string out;
  for (int s : signs) out += s > 0 ? '+' : (s < 0 ? '-' : '0');
  return out;
}

std::string render_plain(const OutputRecord& r) {
  std::ostringstream os;
  if (!r.matrix.empty()) {
    std::vector<std::size_t> width;
    const auto widen = [&](const std::vector<std::string>& row) {
      if (width.size() < row.size()) width.resize(row.size(), 0);
      for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
    };
    widen(r.matrix_header);
    for (const auto& row : r.matrix) widen(row);
    const auto line = [&](const std::vector<std::string>& row, bool left) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (j) os << "  ";
        const bool last = j + 1 == row.size();
        if (left) {
          os << (last ? row[j] : row[j] + std::string(width[j] - row[j].size(), ' '));
        } else {
          os << std::setw(int(width[j])) << row[j];
        }
      }
      os << '\n';
    };
    // Tables with a header are textual listings; bare matrices are numeric.
    const bool left = !r.matrix_header.empty();
    if (left) line(r.matrix_header, true);
    for (const auto& row : r.matrix) line(row, left);
  }
  for (const auto& l : r.lists) {
    if (r.lists.size() > 1 || !r.matrix.empty()) os << l.name << ": ";
    os << join_values(l.values) << '\n';
  }
  for (const auto& rep : r.reports) {
    os << rep.check_id << "  " << to_string(rep.status) << "  depth " << rep.depth_reached << "/"
       << rep.depth_requested << "  " << std::fixed << std::setprecision(2) << rep.seconds << "s\n";
    os.unsetf(std::ios::floatfield);
    if (rep.first_counterexample) {
      const auto& c = *rep.first_counterexample;
      os << "  counterexample: " << c.part << " at index " << c.index << ": expected " << c.expected << ", got "
         << c.actual << '\n';
    }
    if (rep.sign_profile) {
      const auto& s = *rep.sign_profile;
      os << "  signs from n=" << s.first_index << ": " << sign_word(s.signs) << " (|values| "
         << (s.abs_match ? "match " : "differ from ") << s.target_id << ")\n";
    }
    for (const auto& n : rep.notes) os << "  note: " << n << '\n';
  }
  for (const auto& [k, v] : r.summary) os << k << ": " << v << '\n';
  return os.str();
}

std::string render_csv(const OutputRecord& r) {
  std::string out;
  if (!r.matrix.empty()) {
    if (!r.matrix_header.empty()) out += csv_row(r.matrix_header);
    for (const auto& row : r.matrix) out += csv_row(row);
  }
  if (!r.lists.empty()) {
    out += "list,index,value\n";
    for (const auto& l : r.lists) {
      for (std::size_t i = 0; i < l.values.size(); ++i) {
        out += csv_row({l.name, std::to_string(l.offset + long(i)), l.values[i]});
      }
    }
  }
  if (!r.reports.empty()) {
    out += "check,status,depth_requested,depth_reached,seconds,part,index,expected,actual\n";
    for (const auto& rep : r.reports) {
      std::vector<std::string> row{rep.check_id, to_string(rep.status), std::to_string(rep.depth_requested),
                                   std::to_string(rep.depth_reached), std::to_string(rep.seconds)};
      if (rep.first_counterexample) {
        const auto& c = *rep.first_counterexample;
        row.insert(row.end(), {c.part, std::to_string(c.index), c.expected, c.actual});
      } else {
        row.insert(row.end(), {"", "", "", ""});
      }
      out += csv_row(row);
    }
  }
  if (!r.summary.empty()) {
    out += "key,value\n";
    for (const auto& [k, v] : r.summary) out += csv_row({k, v});
  }
  return out;
}

std::string render_bfile(const OutputRecord& r) {
  if (r.lists.size() != 1 || !r.lists.front().integral) {
    throw Error(Errc::Usage, "bfile output needs exactly one integer sequence");
  }
  const OutputList& l = r.lists.front();
  Sequence<Integer> seq;
  seq.offset = l.offset;
  for (const auto& v : l.values) seq.terms.emplace_back(v);
  std::string cmd = "rueppel-lab";
  for (const auto& a : r.command) cmd += " " + a;
  return format_bfile(seq, {cmd});
}

}  // namespace

bool operator==(const OutputRecord& a, const OutputRecord& b) {
  if (a.reports.size() != b.reports.size()) return false;
  for (std::size_t i = 0; i < a.reports.size(); ++i) {
    if (!same_report(a.reports[i], b.reports[i])) return false;
  }
  return a.command == b.command && a.parameters == b.parameters && a.lists == b.lists && a.matrix == b.matrix &&
         a.matrix_header == b.matrix_header && a.summary == b.summary;
}

std::string to_json_text(const OutputRecord& r) {
  json j;
  j["schema"] = kOutputSchema;
  j["command"] = r.command;
  j["parameters"] = pairs_to_json(r.parameters);
  json lists = json::array();
  for (const auto& l : r.lists) {
    lists.push_back({{"name", l.name}, {"offset", l.offset}, {"integral", l.integral}, {"values", l.values}});
  }
  j["lists"] = lists;
  j["matrix"] = {{"header", r.matrix_header}, {"rows", r.matrix}};
  json reports = json::array();
  for (const auto& rep : r.reports) reports.push_back(report_to_json(rep));
  j["reports"] = reports;
  j["summary"] = pairs_to_json(r.summary);
  return j.dump(2) + "\n";
}

OutputRecord record_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, e.what(), long(e.byte));
  }
  try {
    if (j.at("schema").get<std::string>() != kOutputSchema) {
      throw Error(Errc::ParseError, "schema is not " + std::string(kOutputSchema));
    }
    OutputRecord r;
    r.command = j.at("command").get<std::vector<std::string>>();
    r.parameters = pairs_from_json(j.at("parameters"));
    for (const auto& l : j.at("lists")) {
      r.lists.push_back(OutputList{l.at("name").get<std::string>(), l.at("offset").get<long>(),
                                   l.at("values").get<std::vector<std::string>>(), l.at("integral").get<bool>()});
    }
    r.matrix_header = j.at("matrix").at("header").get<std::vector<std::string>>();
    r.matrix = j.at("matrix").at("rows").get<std::vector<std::vector<std::string>>>();
    for (const auto& rep : j.at("reports")) r.reports.push_back(report_from_json(rep));
    r.summary = pairs_from_json(j.at("summary"));
    return r;
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

std::string render(const OutputRecord& r, OutputFormat f) {
  switch (f) {
    case OutputFormat::plain: return render_plain(r);
    case OutputFormat::json: return to_json_text(r);
    case OutputFormat::csv: return render_csv(r);
    case OutputFormat::bfile: return render_bfile(r);
  }
  return {};
}

// ------------------------------------------------------------------ config

LabConfig LabConfig::defaults() {
  LabConfig c;
  c.oeis = OeisConfig::from_env();
  return c;
}

void LabConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Usage, "cannot read config " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  apply(ss.str());
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool parse_bool(std::string_view v, long line) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw Error(Errc::Usage, "line " + std::to_string(line) + ": expected true or false", line);
}

std::size_t parse_count(std::string_view v, long line) {
  std::size_t pos = 0;
  try {
    const unsigned long n = std::stoul(std::string(v), &pos);
    if (pos == v.size()) return n;
  } catch (const std::exception&) {
  }
  throw Error(Errc::Usage, "line " + std::to_string(line) + ": expected a nonnegative integer", line);
}

}  // namespace

void LabConfig::apply(std::string_view text) {
  std::string section;
  long line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw Error(Errc::Usage, "line " + std::to_string(line_no) + ": bad section", line_no);
      section = std::string(trim(line.substr(1, line.size() - 2)));
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(Errc::Usage, "line " + std::to_string(line_no) + ": expected key = value", line_no);
    }
    std::string key(trim(line.substr(0, eq)));
    if (!section.empty()) key = section + "." + key;
    std::string_view value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    const std::string v(value);
    if (key == "ring") {
      ring = v;
    } else if (key == "format") {
      format = v;
    } else if (key == "depth_profile") {
      depth_profile = v;
    } else if (key == "jobs") {
      jobs = int(parse_count(v, line_no));
    } else if (key == "truncation") {
      truncation = parse_count(v, line_no);
    } else if (key == "reference") {
      reference = v;
    } else if (key == "oeis.base_url") {
      oeis.base_url = v;
    } else if (key == "oeis.cache_dir") {
      oeis.cache_dir = v;
    } else if (key == "oeis.fixture_dir") {
      oeis.fixture_dir = v;
    } else if (key == "oeis.offline") {
      oeis.offline = parse_bool(v, line_no);
    } else {
      throw Error(Errc::Usage, "line " + std::to_string(line_no) + ": unknown key '" + key + "'", line_no);
    }
  }
}

void LabConfig::apply_env() {
  if (const char* v = std::getenv("OEIS_BASE_URL"); v && *v) oeis.base_url = v;
  if (const char* v = std::getenv("OEIS_CACHE_DIR"); v && *v) oeis.cache_dir = v;
  if (const char* v = std::getenv("RUEPPEL_FIXTURE_DIR"); v && *v) oeis.fixture_dir = v;
  if (const char* v = std::getenv("OEIS_OFFLINE"); v && std::string_view(v) == "1") oeis.offline = true;
}

}  // namespace rueppel
