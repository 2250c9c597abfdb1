#include <doctest.h>

#include "cartanlab/cartan.hpp"
#include "cartanlab/scene.hpp"
#include "cartanlab/spin_iso.hpp"
#include "cartanlab/yang_mills.hpp"

using namespace cartanlab;

namespace {
const Point kP{0.11, -0.07, 0.23, 0.05};
constexpr int kOrder = 4;

VierbeinEval scene_eval(const char* name) {
  return compile_scene(load_scene(name)).vierbein.eval(kP, kOrder);
}
}  // namespace

TEST_CASE("the three density routes agree on every built-in frame") {
  for (const char* name : {"flat", "conformally-flat", "exp-conformal", "bumpy"}) {
    LagrangianRoutes r = ym_lagrangian(normal_connection(scene_eval(name)));
    CHECK(r.residual < 1e-12);
  }
}

TEST_CASE("the density is exactly conformally invariant") {
  CompiledScene cs = compile_scene(load_scene("bumpy"));
  VierbeinEval ev = cs.vierbein.eval(kP, kOrder);
  VierbeinEval ev2 = cs.vierbein.scaled(cs.z).eval(kP, kOrder);
  CHECK((weyl_lagrangian(ev) - weyl_lagrangian(ev2)).max_abs() < 1e-12);
}

TEST_CASE("killing form: normalization and the low-dimensional coincidence") {
  // the hyperbolic rotation generator in the 03-plane has self-pairing 2
  Mat4d m03 = Mat4d::Zero();
  m03(0, 3) = 1.0;
  m03(3, 0) = 1.0;
  MatrixForm a = MatrixForm::zero(4, 4, 0, kOrder, kP);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      a.at(i, j) = Form::from_jet(Jet::constant(m03(i, j), kOrder, kP));
  Form b = killing(Algebra::so13, a, a);
  CHECK(std::abs(b.component(0).value() - cplx(2.0)) < 1e-13);

  // spin form of the same element pairs identically
  Mat2c sb = sl2_of_so13(m03);
  MatrixForm as = MatrixForm::zero(2, 2, 0, kOrder, kP);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      as.at(i, j) = Form::from_jet(Jet::constant(sb(i, j), kOrder, kP));
  Form bs = killing(Algebra::sl2, as, as);
  CHECK((b - bs).max_abs() < 1e-13);
}

TEST_CASE("antisymmetric schouten addition decomposes the density") {
  for (const char* name : {"flat", "bumpy"}) {
    CompiledScene cs = compile_scene(load_scene("bumpy+f"));
    VierbeinEval ev = compile_scene(load_scene(name)).vierbein.eval(kP, kOrder);
    MerkulovLagrangian ml = merkulov_lagrangian(ev, cs.f_form(kP, kOrder));
    CHECK(ml.residual < 1e-12);
  }
}

TEST_CASE("flat frame with a closed addition has vanishing density") {
  // on a flat frame the Weyl term cancels the trace term exactly
  CompiledScene cs = compile_scene(load_scene("bumpy+f"));
  VierbeinEval ev = Vierbein::identity().eval(kP, kOrder);
  MerkulovLagrangian ml = merkulov_lagrangian(ev, cs.f_form(kP, kOrder));
  CHECK(ml.assembled_route.max_abs() < 1e-12);
}

TEST_CASE("the obstruction forces the addition to vanish") {
  MerkulovObstruction ob = merkulov_obstruction(scene_eval("bumpy"));
  CHECK(ob.identity_residual < 1e-12);
  CHECK(ob.rank == 6);
  CHECK(ob.forced_f_norm < 1e-10);
}
