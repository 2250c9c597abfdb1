#include <doctest.h>

#include "cartanlab/cartan.hpp"
#include "cartanlab/expr.hpp"
#include "cartanlab/metric_oracle.hpp"
#include "cartanlab/scene.hpp"

using namespace cartanlab;

namespace {
const Point kP{0.11, -0.07, 0.23, 0.05};
constexpr int kOrder = 4;

VierbeinEval bumpy_eval() {
  CompiledScene cs = compile_scene(load_scene("bumpy"));
  return cs.vierbein.eval(kP, kOrder);
}

double conn_diff(const SpinConnection& a, const SpinConnection& b) {
  double r = (a.a - b.a).max_abs();
  r = std::max(r, (a.Abar - b.Abar).max_abs());
  r = std::max(r, (a.Pbar - b.Pbar).max_abs());
  r = std::max(r, (a.thbar - b.thbar).max_abs());
  return r;
}
}  // namespace

TEST_CASE("flat frame gives a flat normal connection") {
  VierbeinEval ev = Vierbein::identity().eval(kP, kOrder);
  SpinConnection conn = normal_connection(ev);
  SpinCurvature c = curvature(conn);
  CHECK(c.omega.max_abs() < 1e-13);
  CHECK(conn.algebra_residual() < 1e-13);
}

TEST_CASE("normal connection satisfies its defining constraints") {
  VierbeinEval ev = bumpy_eval();
  SpinConnection conn = normal_connection(ev);
  SpinCurvature c = curvature(conn);
  CHECK(conn.a.max_abs() < 1e-12);          // no dilation part
  CHECK(c.Thetabar.max_abs() < 1e-10);      // torsion-free
  CHECK(c.f.max_abs() < 1e-10);             // trace part vanishes
  CHECK(conn.algebra_residual() < 1e-11);
  CHECK(weyl_ricci_trace_residual(conn, c) < 1e-9);
}

TEST_CASE("structure equation and Bianchi identity") {
  SpinConnection conn = normal_connection(bumpy_eval());
  MatrixForm varpi = conn.assembled();
  SpinCurvature c = curvature(conn);
  // structure equation is the definition; verify Bianchi d Omega = [Omega, varpi]
  MatrixForm lhs = ext_d(c.omega);
  MatrixForm rhs = c.omega * varpi - varpi * c.omega;
  CHECK((lhs - rhs).max_abs() < 1e-10);
}

TEST_CASE("levi-civita connection of the bumpy frame is torsion-free") {
  VierbeinEval ev = bumpy_eval();
  LeviCivitaFrame lc = levi_civita_connection(ev);
  CHECK((ext_d(ev.theta) + lc.A * ev.theta).max_abs() < 1e-10);
}

TEST_CASE("jet-route schouten tensor matches the finite-difference oracle") {
  VierbeinEval ev = bumpy_eval();
  MetricCurvature mc = metric_curvature(ev.g);
  CompiledScene cs = compile_scene(load_scene("bumpy"));
  auto gfun = [&](const Point& q) {
    VierbeinEval e2 = cs.vierbein.eval(q, 0);
    Eigen::Matrix4d g;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) g(i, j) = e2.g.at(i, j).component(0).value().real();
    return g;
  };
  Eigen::Matrix4d p_fd = schouten_fd(gfun, kP, 1e-2);
  double worst = 0;
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      worst = std::max(worst, std::abs(mc.schouten[m][n].value().real() - p_fd(m, n)));
  CHECK(worst < 1e-6);
}

TEST_CASE("closed-form gauge transformations match generic conjugation") {
  SpinConnection conn = normal_connection(bumpy_eval());
  SUBCASE("Weyl rescaling") {
    GaugeEval g = eval_gauge(SpinGaugeField::weyl(parse_expression("1 + 0.1*x1")), kP, kOrder);
    CHECK(conn_diff(gauge_transform(conn, g), gauge_transform_k0_closed(conn, g)) < 1e-11);
  }
  SUBCASE("Lorentz rotation") {
    std::array<ScalarField, 6> s{parse_expression("0.04*x0"), parse_expression("0.05*x1"),
                                 parse_expression("0.06*x2"), parse_expression("0.03*x3"),
                                 parse_expression("0.02*x0"), parse_expression("0.01*x1")};
    GaugeEval g = eval_gauge(SpinGaugeField::lorentz_exp(s), kP, kOrder);
    CHECK(conn_diff(gauge_transform(conn, g), gauge_transform_k0_closed(conn, g)) < 1e-11);
  }
  SUBCASE("boost") {
    std::array<ScalarField, 4> r{parse_expression("0.05*x1"), parse_expression("0.06*x2"),
                                 parse_expression("0.07*x3"), parse_expression("0.08*x0")};
    GaugeEval g = eval_gauge(SpinGaugeField::boost(r), kP, kOrder);
    CHECK(conn_diff(gauge_transform(conn, g), gauge_transform_k1_closed(conn, g)) < 1e-11);
  }
}

TEST_CASE("gauge action composes as a right action") {
  SpinConnection conn = normal_connection(bumpy_eval());
  GaugeEval g1 = eval_gauge(SpinGaugeField::weyl(parse_expression("1 + 0.1*x1")), kP, kOrder);
  std::array<ScalarField, 4> r{parse_expression("0.05*x1"), parse_expression("0.06*x2"),
                               parse_expression("0.07*x3"), parse_expression("0.08*x0")};
  GaugeEval g2 = eval_gauge(SpinGaugeField::boost(r), kP, kOrder);
  GaugeEval g12 = g1;
  g12.gamma = g1.gamma * g2.gamma;
  SpinConnection lhs = gauge_transform(gauge_transform(conn, g1), g2);
  SpinConnection rhs = gauge_transform(conn, g12);
  CHECK(conn_diff(lhs, rhs) < 1e-11);
}

TEST_CASE("weyl block is trace-adjusted and cotton block is hermitian") {
  SpinConnection conn = normal_connection(bumpy_eval());
  CottonWeyl cw = cotton_and_weyl(conn);
  CHECK(cw.Wbar.trace().max_abs() < 1e-11);
  CHECK((cw.Cbar - cw.Cbar.adjoint()).max_abs() < 1e-10);
}
