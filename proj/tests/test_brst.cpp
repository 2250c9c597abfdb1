#include <doctest.h>

#include "cartanlab/brst.hpp"
#include "cartanlab/cartan.hpp"
#include "cartanlab/dressing.hpp"
#include "cartanlab/expr.hpp"
#include "cartanlab/scene.hpp"
#include "cartanlab/twistor.hpp"

using namespace cartanlab;

namespace {
const Point kP{0.11, -0.07, 0.23, 0.05};
constexpr int kOrder = 4;

GhostEval full_ghost() {
  GhostField g;
  g.eps = parse_expression("0.1*x0 + 0.05*x2");
  g.has_eps = true;
  g.s = {parse_expression("0.04*x0"), parse_expression("0.05*x1"),
         parse_expression("0.06*x2"), parse_expression("0.03*x3"),
         parse_expression("0.02*x0"), parse_expression("0.01*x1")};
  g.has_s = true;
  g.rho = {parse_expression("0.05*x1"), parse_expression("0.06*x2"),
           parse_expression("0.07*x3"), parse_expression("0.08*x0")};
  g.has_rho = true;
  return eval_ghost(g, kP, kOrder);
}

SpinConnection bumpy_conn() {
  CompiledScene cs = compile_scene(load_scene("bumpy"));
  return normal_connection(cs.vierbein.eval(kP, kOrder));
}
}  // namespace

TEST_CASE("brst operator is nilpotent on every field") {
  SpinConnection conn = bumpy_conn();
  GrassmannElement v = full_ghost().vbar;
  MatrixForm varpi = conn.assembled();
  MatrixForm omega = curvature(conn).omega;
  std::array<Jet, 2> pi{Jet::constant(cplx(0.3, -0.2), kOrder, kP),
                        Jet::constant(cplx(-0.1, 0.4), kOrder, kP)};
  std::array<Jet, 2> om{Jet::constant(cplx(0.5, 0.1), kOrder, kP),
                        Jet::constant(cplx(0.2, -0.3), kOrder, kP)};
  MatrixForm psi = twistor_section(pi, om);
  CHECK(brst_nilpotency_connection(varpi, v) < 1e-11);
  CHECK(brst_nilpotency_curvature(omega, v) < 1e-11);
  CHECK(brst_nilpotency_section(psi, v) < 1e-11);
  CHECK(brst_nilpotency_ghost(v) < 1e-12);
}

TEST_CASE("algebraic curvature variation matches the geometric one") {
  SpinConnection conn = bumpy_conn();
  GrassmannElement v = full_ghost().vbar;
  CHECK(russian_formula_residual(conn.assembled(), curvature(conn).omega, v) < 1e-11);
  CHECK(brst_bianchi_residual(conn.assembled(), curvature(conn).omega, v) < 1e-11);
}

TEST_CASE("dressed ghost is rho-independent and matches its closed form") {
  CompiledScene cs = compile_scene(load_scene("bumpy"));
  VierbeinEval ev = cs.vierbein.eval(kP, kOrder);
  SpinConnection conn = normal_connection(ev);
  GaugeEval g = eval_gauge(SpinGaugeField::boost(cs.r), kP, kOrder);
  SpinConnection boosted = gauge_transform(conn, g);
  DressingField u = extract_dressing(boosted);
  DressedGhost dg = dressed_ghost(full_ghost(), u, ev.einv);
  CHECK(dg.residual < 1e-11);
  CHECK(dg.rho_dependence < 1e-12);
}

TEST_CASE("ghost variations linearize the finite residual actions") {
  SpinConnection conn = bumpy_conn();
  SpinConnection dressed = dress(conn, extract_dressing(conn));
  double t = 1e-4;
  CHECK(weyl_linearization_residual(dressed, parse_expression("0.1*x0 + 0.05*x2"), t) < 1e-3);
  std::array<ScalarField, 6> s{parse_expression("0.04*x0"), parse_expression("0.05*x1"),
                               parse_expression("0.06*x2"), parse_expression("0.03*x3"),
                               parse_expression("0.02*x0"), parse_expression("0.01*x1")};
  CHECK(lorentz_linearization_residual(dressed, s, t) < 1e-3);
}
