#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "rueppel/cli.hpp"
#include "rueppel/error.hpp"
#include "rueppel/expr.hpp"
#include "rueppel/oeis.hpp"

using namespace rueppel;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "rueppel-lab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(int(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<Integer> expand(const std::string& e, std::size_t n) {
  return GfExpr::parse(e).expand<Integer>(n).coeffs();
}

}  // namespace

TEST_CASE("expression atoms") {
  CHECK(expand("c", 6) == ints({1, 1, 2, 5, 14, 42}));
  CHECK(expand("r", 8) == ints({1, 1, 0, 1, 0, 0, 0, 1}));
  CHECK(expand("motzkin", 6) == ints({1, 1, 2, 4, 9, 21}));
  CHECK(expand("x", 3) == ints({0, 1, 0}));
  CHECK(GfExpr::parse("rbc").expand<Poly2>(4).coeffs()[1] == Poly2::c());
  CHECK_THROWS_AS(expand("rbc", 4), Error);
}

TEST_CASE("expression operators and precedence") {
  CHECK(expand("1 - x*r", 8) == ints({1, -1, -1, 0, -1, 0, 0, 0}));
  CHECK(expand("-x^2 + 3", 4) == ints({3, 0, -1, 0}));
  CHECK(expand("(1 + x)^3", 5) == ints({1, 3, 3, 1, 0}));
  CHECK(expand("1/c", 5) == ints({1, -1, -1, -2, -5}));
  CHECK(expand("(c - 1)/x", 5) == ints({1, 2, 5, 14, 42}));
  CHECK(expand("2 - 3 - 4", 1) == ints({-5}));
  CHECK(GfExpr::parse("1/2").expand<Rational>(1).coeffs()[0] == Rational(Integer(1), Integer(2)));
  CHECK_THROWS_AS(expand("1/2", 1), Error);
  CHECK_THROWS_AS(expand("1/x", 3), Error);
}

TEST_CASE("substitution and invert") {
  CHECK(expand("c(x^2)", 7) == ints({1, 0, 1, 0, 2, 0, 5}));
  CHECK(expand("r(x)", 5) == expand("r", 5));
  CHECK(expand("c(-x)", 4) == ints({1, -1, 2, -5}));
  CHECK(expand("1 - x/c(x^2)", 12) == ints({1, -1, 0, 1, 0, 1, 0, 2, 0, 5, 0, 14}));
  CHECK(expand("invert(c, 1)", 5) == expand("c/(1 - x*c)", 5));
  CHECK(expand("invert((r - 1)/x, -1)", 8) == expand("r(x^2)/r", 8));
  CHECK_THROWS_AS(expand("c(1 + x)", 3), Error);
}

TEST_CASE("parse errors carry the column") {
  for (const auto& [text, col] : std::vector<std::pair<std::string, long>>{
           {"2 x", 3}, {"c +", 4}, {"foo", 1}, {"(c", 3}, {"x^y", 3}, {"invert(c)", 9}}) {
    CAPTURE(text);
    try {
      GfExpr::parse(text);
      FAIL("expected ParseError");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ParseError);
      CHECK(e.where() == std::optional<std::int64_t>(col));
    }
  }
}

TEST_CASE("working precision is raised for divisions by x") {
  const auto s = GfExpr::parse("((c - 1)/x - 1)/x").expand<Integer>(5, 5);
  CHECK(s.coeffs() == ints({2, 5, 14, 42, 132}));
}

TEST_CASE("cli worked examples") {
  auto r = run({"hankel", "1 - x*r", "-n", "10"});
  CHECK(r.code == 0);
  CHECK(r.out == "1, -2, 3, 2, -3, 4, 3, 2, -3, 4, -5\n");
  r = run({"cfrac", "r", "--kind", "s", "-d", "11"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("1, -1, -1, 1, -1, 1, -1, 1, 1, -1, 1\n", 0) == 0);
  r = run({"verify", "C11-product", "-d", "32"});
  CHECK(r.code == 0);
  CHECK(r.out.find("C11-product  pass") != std::string::npos);
}

TEST_CASE("cli exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"expand", "2 x"}).code == 2);
  CHECK(run({"expand", "c", "--ring", "gaussian"}).code == 2);
  CHECK(run({"verify", "no-such-check"}).code == 2);
  CHECK(run({"verify", "C9-hankel", "-d", "99"}).code == 2);
  CHECK(run({"expand", "1/x"}).code == 1);
  CHECK(run({"expand", "rbc"}).code == 1);
  const auto fail = run({"verify", "C10-sqrt-diff", "-d", "32"});
  CHECK(fail.code == 3);
  CHECK(fail.out.find("counterexample") != std::string::npos);
  CHECK(run({"compare", "A005811", "--shift", "1"}).code == 3);
}

TEST_CASE("structured error in json mode") {
  const auto r = run({"--format", "json", "expand", "2 x"});
  CHECK(r.code == 2);
  CHECK(r.out.find("\"code\": \"ParseError\"") != std::string::npos);
  CHECK(r.out.find("\"where\": 3") != std::string::npos);
}

TEST_CASE("json output round trips") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--format", "json", "expand", "c", "-n", "8"},
           {"--format", "json", "cfrac", "1 - x*c", "--kind", "j", "-d", "4"},
           {"--format", "json", "riordan", "--g", "r", "--f", "x*r", "-n", "5", "--apply", "c"},
           {"--format", "json", "verify", "C2-A268411-runs", "-d", "16"},
           {"--format", "json", "compare", "A000108"}}) {
    const auto r = run(args);
    REQUIRE(r.code == 0);
    const OutputRecord rec = record_from_json(r.out);
    CHECK(to_json_text(rec) == r.out);
    CHECK(record_from_json(to_json_text(rec)) == rec);
  }
  CHECK_THROWS_AS(record_from_json("{\"schema\": \"other/9\"}"), Error);
}

TEST_CASE("bfile output re-parses without loss") {
  const auto r = run({"--format", "bfile", "catalog", "A000108", "-n", "40"});
  REQUIRE(r.code == 0);
  const BFile b = parse_bfile("A000108", r.out);
  REQUIRE(b.entries.size() == 40);
  CHECK(b.to_sequence().terms == catalan_series(40).coeffs());
  const auto h = run({"--format", "bfile", "hankel", "1 - x*c", "-n", "5"});
  CHECK(parse_bfile("A000000", h.out).to_sequence().terms == ints({1, -2, 3, -4, 5, -6}));
  CHECK(run({"--format", "bfile", "cfrac", "1 - x*c", "--kind", "j", "-d", "3"}).code == 2);
}

TEST_CASE("csv output") {
  const auto r = run({"--format", "csv", "expand", "c", "-n", "3"});
  CHECK(r.out == "list,index,value\ncoefficients,0,1\ncoefficients,1,1\ncoefficients,2,2\n");
}

TEST_CASE("riordan subcommand") {
  const auto r = run({"riordan", "--g", "1/(1 - x)", "--f", "x/(1 - x)", "-n", "4", "--apply", "1/(1 - x)"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1  3  3  1") != std::string::npos);
  CHECK(r.out.find("applied: 1, 2, 4, 8") != std::string::npos);
  CHECK(r.out.find("agrees_with_g_h_of_f: yes") != std::string::npos);
  const auto s = run({"riordan", "--g", "r", "--f", "x*r", "-n", "4", "--strip-first-row", "--apply", "c"});
  CHECK(s.out.find("agrees_with_g_h_of_f: yes") != std::string::npos);
}

TEST_CASE("poly-bc ring") {
  const auto r = run({"--ring", "poly-bc", "expand", "rbc", "-n", "8"});
  CHECK(r.out == "1, c, 0, b, 0, 0, 0, b\n");
  const auto s = run({"--ring", "poly-bc", "cfrac", "rbc", "--kind", "s", "-d", "2"});
  CHECK(s.out.rfind("c, -c\n", 0) == 0);
}

TEST_CASE("configuration file") {
  LabConfig cfg = LabConfig::defaults();
  cfg.apply("# comment\nring = rat\nformat = \"csv\"\n[oeis]\noffline = true\nfixture_dir = /tmp/fx\n");
  CHECK(cfg.ring == "rat");
  CHECK(cfg.format == "csv");
  CHECK(cfg.oeis.offline);
  CHECK(cfg.oeis.fixture_dir == "/tmp/fx");
  try {
    cfg.apply("ring = int\nbogus = 1\n");
    FAIL("expected a usage error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Usage);
    CHECK(e.where() == std::optional<std::int64_t>(2));
  }
  CHECK_THROWS_AS(cfg.apply("jobs = many\n"), Error);

  std::random_device rd;
  const auto path = std::filesystem::temp_directory_path() / ("rueppel-cfg-" + std::to_string(rd()) + ".toml");
  std::ofstream(path) << "format = csv\n";
  const auto r = run({"--config", path.string(), "expand", "x", "-n", "2"});
  CHECK(r.out.rfind("list,index,value\n", 0) == 0);
  const auto flag = run({"--config", path.string(), "--format", "plain", "expand", "x", "-n", "2"});
  CHECK(flag.out == "0, 1\n");
  std::filesystem::remove(path);
}

TEST_CASE("catalog and verify listings") {
  const auto c = run({"catalog"});
  CHECK(c.code == 0);
  CHECK(c.out.find("A268411") != std::string::npos);
  const auto v = run({"verify", "--list"});
  CHECK(v.out.find("C9-sbc-closed-form") != std::string::npos);
}
