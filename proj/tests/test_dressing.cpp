#include <doctest.h>

#include "cartanlab/cartan.hpp"
#include "cartanlab/dressing.hpp"
#include "cartanlab/expr.hpp"
#include "cartanlab/scene.hpp"

using namespace cartanlab;

namespace {
const Point kP{0.11, -0.07, 0.23, 0.05};
constexpr int kOrder = 4;

SpinConnection boosted_bumpy() {
  CompiledScene cs = compile_scene(load_scene("bumpy"));
  VierbeinEval ev = cs.vierbein.eval(kP, kOrder);
  GaugeEval g = eval_gauge(SpinGaugeField::boost(cs.r), kP, kOrder);
  return gauge_transform(normal_connection(ev), g);
}

double conn_diff(const SpinConnection& a, const SpinConnection& b) {
  double r = (a.a - b.a).max_abs();
  r = std::max(r, (a.Abar - b.Abar).max_abs());
  r = std::max(r, (a.Pbar - b.Pbar).max_abs());
  r = std::max(r, (a.thbar - b.thbar).max_abs());
  return r;
}
}  // namespace

TEST_CASE("dressing removes the dilation component") {
  SpinConnection conn = boosted_bumpy();
  CHECK(conn.a.max_abs() > 1e-3);  // the boost genuinely turned it on
  DressingField u = extract_dressing(conn);
  SpinConnection dressed = dress(conn, u);
  CHECK(dressed.a.max_abs() < 1e-11);
}

TEST_CASE("dressed connection is insensitive to a prior boost") {
  CompiledScene cs = compile_scene(load_scene("bumpy"));
  VierbeinEval ev = cs.vierbein.eval(kP, kOrder);
  SpinConnection base = normal_connection(ev);
  SpinConnection boosted = boosted_bumpy();
  SpinConnection d1 = dress(base, extract_dressing(base));
  SpinConnection d2 = dress(boosted, extract_dressing(boosted));
  CHECK(conn_diff(d1, d2) < 1e-10);
  // curvature agrees too
  CHECK((curvature(d1).omega - curvature(d2).omega).max_abs() < 1e-10);
}

TEST_CASE("weyl residual transformation: closed blocks match conjugation") {
  SpinConnection conn = boosted_bumpy();
  SpinConnection dressed = dress(conn, extract_dressing(conn));
  Jet z = parse_expression("1 + 0.1*x1").at(kP, kOrder);
  WeylCocycle c = weyl_cocycle(z, dressed.einv);
  CHECK(conn_diff(residual_weyl(dressed, c), residual_weyl_closed(dressed, c)) < 1e-10);
  SpinCurvature cv = curvature(dressed);
  CHECK((residual_weyl_curvature(cv.omega, c) - residual_weyl_curvature_closed(cv, c))
            .max_abs() < 1e-10);
}

TEST_CASE("weyl cocycle law holds, plain group law fails") {
  SpinConnection conn = boosted_bumpy();
  SpinConnection dressed = dress(conn, extract_dressing(conn));
  Jet z = parse_expression("1 + 0.1*x1").at(kP, kOrder);
  Jet zp = parse_expression("exp(0.07*x3 + 0.1)").at(kP, kOrder);
  CHECK(cocycle_residual(z, zp, dressed.einv) < 1e-11);
  CHECK(cocycle_group_law_violation(z, zp, dressed.einv) > 1e-3);
}
