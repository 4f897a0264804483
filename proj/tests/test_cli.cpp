#include "doctest.h"

#include <algorithm>

#include <json.hpp>

#include "ssc/cli.hpp"
#include "ssc/errors.hpp"

using namespace ssc;
using namespace ssc::cli;

namespace {

RunConfig quick() {
  RunConfig c;
  c.timing = false;
  c.trials = 20;
  c.expansion_points = 2;
  c.matcoeff_points = 1;
  c.atkin_lehner_points = 3;
  return c;
}

}  // namespace

TEST_CASE("exit code contract") {
  CHECK(exit_code({}) == 0);
  CheckReport ok{"dims", {}, "x", "x", true, 0, 1};
  CheckReport bad{"dims", {}, "x", "y", false, 0, 1};
  CHECK(exit_code({ok}) == 0);
  CHECK(exit_code({ok, bad}) == 1);
}

TEST_CASE("check names and unknown checks") {
  const auto& n = check_names();
  CHECK(n.size() == 15);
  CHECK(n.back() == "all");
  CHECK_THROWS_AS(run("nope", quick()), UnknownCheck);
  CHECK_THROWS_AS(run_checks({"dims", "nope"}, quick()), UnknownCheck);
}

TEST_CASE("config validation") {
  auto c = quick();
  c.p = 9;
  CHECK_THROWS_AS(c.validate(), BadConfig);
  c = quick();
  c.t = 3;
  CHECK_THROWS_AS(run("dims", c), BadConfig);
  c = quick();
  c.sign = 0;
  CHECK_THROWS_AS(c.validate(), BadConfig);
  CHECK_THROWS_AS(parse_format("xml"), BadConfig);
  CHECK_THROWS_AS(config_from_json("{\"q\": 3}"), BadConfig);
  CHECK_THROWS_AS(config_from_json("[1]"), BadConfig);
  CHECK_THROWS_AS(config_from_json("{\"p\": \"three\"}"), BadConfig);
  auto j = config_from_json(R"({"p": 5, "sign": -1, "bessel_m0": [2], "timing": false})");
  CHECK(j.p == 5);
  CHECK(j.sign == -1);
  CHECK(j.bessel_m0 == std::vector<int>{2});
  CHECK_FALSE(j.timing);
  CHECK(j.t == 1);
}

TEST_CASE("dimension table through the harness") {
  auto r = run("dims", quick());
  CHECK(r.pass);
  CHECK(r.expected == "0 0 0 0 0 1 2 4 6 9 12 16 20");
  CHECK(r.computed == r.expected);
  CHECK(r.seconds == 0);
}

TEST_CASE("formal degree through the harness") {
  auto r = run("formal-degree", quick());
  CHECK(r.pass);
  CHECK(r.computed == "index=640;degree=320");
}

TEST_CASE("module errors become failed reports") {
  auto c = quick();
  c.p = 5;
  c.bessel_a = 1;  // -1 is a square mod 5
  auto r = run("bessel", c);
  CHECK_FALSE(r.pass);
  CHECK(r.computed.find("BadParameter") != std::string::npos);
  c.p = 11;
  auto f = run("formal-degree", c);
  CHECK_FALSE(f.pass);
}

TEST_CASE("json and csv reports") {
  auto reports = run_checks({"dims", "hecke"}, quick());
  REQUIRE(reports.size() == 2);
  auto j = nlohmann::json::parse(emit(reports, Format::Json));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 2);
  for (const auto& e : j) {
    for (const char* k : {"check", "params", "expected", "computed", "pass", "seconds", "terms"})
      CHECK(e.contains(k));
    CHECK(e["params"]["p"] == "3");
    CHECK(e["pass"] == true);
  }
  CHECK(j[0]["check"] == "dims");
  CHECK(j[1]["expected"] == "A=0;B=0;C=0;D=0");

  auto csv = emit(reports, Format::Csv);
  CHECK(csv.rfind("check,params,expected,computed,pass,seconds,terms\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  auto text = emit(reports, Format::Text);
  CHECK(text.rfind("PASS dims", 0) == 0);
}

TEST_CASE("same config and seed give identical reports") {
  auto c = quick();
  const std::vector<std::string> names{"cosets", "characters", "support-criterion", "atkin-lehner"};
  auto a = emit(run_checks(names, c), Format::Json);
  auto b = emit(run_checks(names, c, 2), Format::Json);
  CHECK(a == b);
  // a check's sampling does not depend on what ran before it
  auto alone = emit(run_checks({"atkin-lehner"}, c), Format::Json);
  CHECK(a.find(alone.substr(4, alone.size() - 8)) != std::string::npos);
  c.seed = 2;
  auto r = run("cosets", c);
  CHECK(r.pass);
}
