#include <doctest.h>

#include <cmath>

#include "cartanlab/expr.hpp"
#include "cartanlab/scene.hpp"

using namespace cartanlab;

namespace {
const Point kP{0.12, -0.31, 0.24, 0.08};
constexpr int kOrder = 4;
}  // namespace

TEST_CASE("expression parser evaluates values and derivatives") {
  Jet j = parse_expression("1 + 0.1*x1").at(kP, kOrder);
  CHECK(std::abs(j.value() - cplx(1.0 + 0.1 * kP[1])) < 1e-15);
  CHECK(std::abs(jet_partial(j, 1).value() - cplx(0.1)) < 1e-15);

  Jet k = parse_expression("exp(0.1*x2)^2 / (1 + x0^2)").at(kP, kOrder);
  double expect = std::exp(0.2 * kP[2]) / (1.0 + kP[0] * kP[0]);
  CHECK(std::abs(k.value() - cplx(expect)) < 1e-14);

  Jet m = parse_expression("sin(x0)*cos(x3) - sqrt(2)").at(kP, kOrder);
  CHECK(std::abs(m.value().real() -
                 (std::sin(kP[0]) * std::cos(kP[3]) - std::sqrt(2.0))) < 1e-14);
}

TEST_CASE("parser reports syntax errors with a position") {
  CHECK_THROWS_AS(parse_expression("1 + * x0"), ExprError);
  CHECK_THROWS_AS(parse_expression("exp(x0"), ExprError);
  CHECK_THROWS_AS(parse_expression("x5"), ExprError);
  try {
    parse_expression("1 + * x0");
  } catch (const ExprError& e) {
    CHECK(e.position >= 3);
    CHECK(e.position <= 5);
  }
}

TEST_CASE("domain violations are reported with the offending point") {
  ScalarField f = parse_expression("sqrt(x0)");
  CHECK_THROWS_AS(f.at({-1.0, 0, 0, 0}, 2), DomainError);
  ScalarField g = parse_expression("ln(x1)");
  CHECK_THROWS_AS(g.at({0, -0.5, 0, 0}, 2), DomainError);
}

TEST_CASE("scene text parses with strict key checking") {
  Scene s = parse_scene_text("name = demo\ne00 = 1 + 0.1*x1\npoints = 7\nseed = 9\n");
  CHECK(s.name == "demo");
  CHECK(s.points == 7);
  CHECK(s.seed == 9);
  CHECK_THROWS_AS(parse_scene_text("name = demo\nbogus_key = 1\n"), SceneError);
  try {
    parse_scene_text("name = demo\n\nbogus_key = 1\n");
  } catch (const SceneError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("built-in scenes compile and validate") {
  CHECK(builtin_scene_names().size() == 5);
  for (const std::string& name : builtin_scene_names()) {
    Scene s = load_scene(name);
    CompiledScene cs = compile_scene(s);
    std::vector<Point> pts = sample_points(s);
    CHECK(pts.size() == static_cast<std::size_t>(s.points));
    validate_scene(cs, pts);  // throws on a degenerate frame
  }
}

TEST_CASE("point sampling is deterministic in the seed") {
  Scene s = load_scene("flat");
  std::vector<Point> a = sample_points(s);
  std::vector<Point> b = sample_points(s);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (int mu = 0; mu < 4; ++mu) {
      CHECK(a[i][mu] == b[i][mu]);
      CHECK(a[i][mu] >= s.box_lo);
      CHECK(a[i][mu] <= s.box_hi);
    }
  s.seed = 43;
  std::vector<Point> c = sample_points(s);
  CHECK(c[0] != a[0]);
}
