#include <doctest.h>

#include <json.hpp>

#include "cartanlab/checks.hpp"
#include "cartanlab/report.hpp"

using namespace cartanlab;

TEST_CASE("full check registry passes on the flat scene") {
  Scene s = load_scene("flat");
  s.points = 4;
  CompiledScene cs = compile_scene(s);
  std::vector<Point> pts = sample_points(s);
  std::vector<CheckRecord> recs = run_checks(cs, pts, "all");
  CHECK(recs.size() > 50);
  for (const CheckRecord& r : recs) {
    INFO(r.id);
    CHECK(r.passed);
  }
}

TEST_CASE("parallel and serial paths produce identical residuals") {
  Scene s = load_scene("bumpy");
  s.points = 3;
  CompiledScene cs = compile_scene(s);
  std::vector<Point> pts = sample_points(s);
  std::vector<CheckRecord> par = run_checks(cs, pts, "all", -1.0, true);
  std::vector<CheckRecord> ser = run_checks(cs, pts, "all", -1.0, false);
  REQUIRE(par.size() == ser.size());
  for (std::size_t i = 0; i < par.size(); ++i) {
    CHECK(par[i].id == ser[i].id);
    CHECK(par[i].max_residual == ser[i].max_residual);
  }
}

TEST_CASE("suite filtering restricts the registry") {
  Scene s = load_scene("flat");
  s.points = 2;
  CompiledScene cs = compile_scene(s);
  std::vector<Point> pts = sample_points(s);
  std::vector<CheckRecord> calc = run_checks(cs, pts, "calculus");
  CHECK(!calc.empty());
  for (const CheckRecord& r : calc) CHECK(r.suite == "calculus");
}

TEST_CASE("json report has the documented shape and key order") {
  Scene s = load_scene("flat");
  s.points = 2;
  CompiledScene cs = compile_scene(s);
  std::vector<Point> pts = sample_points(s);
  std::vector<CheckRecord> recs = run_checks(cs, pts, "calculus");
  std::string text = render_report_json("flat", s.seed, recs);
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(text);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"tool", "version", "scene", "seed", "checks",
                                         "summary"});
  CHECK(j["tool"] == "cartanlab");
  CHECK(j["summary"]["total"] == static_cast<int>(recs.size()));
  CHECK(j["summary"]["failed"] == 0);
  std::vector<std::string> ckeys;
  for (auto it = j["checks"][0].begin(); it != j["checks"][0].end(); ++it)
    ckeys.push_back(it.key());
  CHECK(ckeys == std::vector<std::string>{"id", "suite", "paper_anchor", "max_residual",
                                          "tolerance", "passed"});
}

TEST_CASE("tolerance override can fail a passing scene") {
  Scene s = load_scene("bumpy");
  s.points = 2;
  CompiledScene cs = compile_scene(s);
  std::vector<Point> pts = sample_points(s);
  std::vector<CheckRecord> recs = run_checks(cs, pts, "cartan", 1e-20);
  bool any_failed = false;
  for (const CheckRecord& r : recs) any_failed |= !r.passed;
  CHECK(any_failed);
}
