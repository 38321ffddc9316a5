#include <filesystem>
#include <set>

#include "doctest.h"
#include "rueppel/error.hpp"
#include "rueppel/verify.hpp"

using namespace rueppel;

TEST_CASE("registry ids are unique and depth ranges are sane") {
  std::set<std::string> ids;
  for (const auto& c : check_registry()) {
    CAPTURE(c.id);
    CHECK(ids.insert(c.id).second);
    CHECK(c.min_depth <= c.default_depth);
    CHECK(c.default_depth <= c.max_depth);
    CHECK(bool(c.body));
  }
  CHECK_THROWS_AS(check_info("no-such-check"), Error);
}

TEST_CASE("runs are deterministic") {
  for (const char* id : {"C2-A268411-runs", "P1-sign-alternation", "R-regressions", "C9-sbc-closed-form"}) {
    CAPTURE(id);
    const auto a = run_check(id, check_info(id).default_depth);
    const auto b = run_check(id, check_info(id).default_depth);
    CHECK(a.status == b.status);
    CHECK(a.depth_reached == b.depth_reached);
    CHECK(a.notes == b.notes);
    CHECK(a.first_counterexample.has_value() == b.first_counterexample.has_value());
    if (a.first_counterexample) {
      CHECK(a.first_counterexample->index == b.first_counterexample->index);
      CHECK(a.first_counterexample->part == b.first_counterexample->part);
    }
  }
}

TEST_CASE("passing check reaches its depth") {
  const auto r = run_check("C11-product", 32);
  CHECK(r.status == CheckStatus::pass);
  CHECK(r.depth_reached == 32);
  CHECK_FALSE(r.first_counterexample.has_value());
}

TEST_CASE("failing check carries its first counterexample") {
  const auto r = run_check("C10-sqrt-diff", 32);
  REQUIRE(r.status == CheckStatus::fail);
  REQUIRE(r.first_counterexample.has_value());
  CHECK(r.first_counterexample->index == 2);
  CHECK(r.depth_reached == 1);
}

TEST_CASE("depth outside the feasible range") {
  const auto& info = check_info("C9-hankel");
  CHECK_THROWS_AS(run_check(info.id, info.max_depth + 1), Error);
}

TEST_CASE("depth profiles") {
  const auto p = DepthProfile::parse("24,C9-sbc=32");
  CHECK(p.kind == DepthProfile::Kind::uniform);
  CHECK(p.depth_for(check_info("C9-sbc")) == 32);
  CHECK(p.depth_for(check_info("C11-product")) == 24);
  CHECK(p.depth_for(check_info("C9-hankel")) == check_info("C9-hankel").max_depth);
  CHECK(DepthProfile::parse(p.str()).str() == p.str());
  CHECK(DepthProfile::parse("extended").depth_for(check_info("C11-product")) == check_info("C11-product").max_depth);
  CHECK(DepthProfile::parse("printed").depth_for(check_info("C9-sbc")) == check_info("C9-sbc").printed_depth);
  CHECK_THROWS_AS(DepthProfile::parse("x1"), Error);
  CHECK_THROWS_AS(DepthProfile::parse("nope=3"), Error);
}

TEST_CASE("parallel run matches serial runs") {
  const DepthProfile profile;
  const auto all = run_all(profile, default_reference(), 4);
  REQUIRE(all.size() == check_registry().size());
  for (std::size_t i = 0; i < all.size(); i += 5) {
    const auto& info = check_registry()[i];
    const auto one = run_check(info.id, info.default_depth);
    CHECK(all[i].check_id == info.id);
    CHECK(all[i].status == one.status);
    CHECK(all[i].depth_reached == one.depth_reached);
  }
}

TEST_CASE("catalog and fixture references agree") {
  const CatalogReference cat;
  const auto& fix = default_reference();
  for (const char* id : {"A005811", "A268411", "A110036"}) {
    CHECK(cat.terms(id, 1, 64) == fix.terms(id, 1, 64));
  }
  CHECK_THROWS_AS(fix.terms("A005811", 0, 10000), Error);
}

TEST_CASE("short reference makes a check inconclusive") {
  const FixtureReference empty(std::filesystem::temp_directory_path() / "rueppel-no-fixtures-here");
  const auto r = run_check("C11-product", 32, empty);
  CHECK(r.status == CheckStatus::inconclusive);
}

TEST_CASE("dependents map fixture indices to check indices") {
  const auto deps = dependents("A014577");
  REQUIRE(deps.size() >= 2);
  for (const auto& [check, use] : deps) {
    CHECK((check.rfind("C9-sbc", 0) == 0 || check == "CAT-A014577"));
    CHECK(use.check_index(1) == use.scale + use.shift);
  }
  CHECK(dependents("A999999").empty());
}

TEST_CASE("calibrated readings are recorded") {
  const auto& c = calibrated_readings();
  CHECK(c.c3b == "1 - x - x^2/c(x^2)");
  CHECK(c.c4 == "1 - x - x^2/r(x^2)");
  CHECK_FALSE(c.c6.empty());
  CHECK_FALSE(c.c8.empty());
}
