#include <doctest.h>

#include "cartanlab/cartan.hpp"
#include "cartanlab/scene.hpp"
#include "cartanlab/twistor.hpp"

using namespace cartanlab;

namespace {
const Point kP{0.11, -0.07, 0.23, 0.05};
constexpr int kOrder = 4;

MatrixForm sample_twistor() {
  auto j = [&](double re, double im) {
    return Jet::constant(cplx(re, im), kOrder, kP) +
           Jet::coordinate(1, kOrder, kP) * cplx(0.2, 0.1);
  };
  std::array<Jet, 2> pi{j(0.3, -0.2), j(-0.1, 0.4)};
  std::array<Jet, 2> om{j(0.5, 0.1), j(0.2, -0.3)};
  return twistor_section(pi, om);
}
}  // namespace

TEST_CASE("helicity of the unit reference twistor") {
  std::array<Jet, 2> pi{Jet::constant(1.0, kOrder, kP), Jet::constant(0.0, kOrder, kP)};
  std::array<Jet, 2> om{Jet::constant(1.0, kOrder, kP), Jet::constant(0.0, kOrder, kP)};
  CHECK(helicity(twistor_section(pi, om)) == doctest::Approx(1.0).epsilon(1e-12));
  // pi orthogonal to omega gives a null twistor
  std::array<Jet, 2> om2{Jet::constant(0.0, kOrder, kP), Jet::constant(1.0, kOrder, kP)};
  CHECK(std::abs(helicity(twistor_section(pi, om2))) < 1e-13);
}

TEST_CASE("pairing is hermitian and the norm real") {
  MatrixForm psi = sample_twistor();
  Form n = bilinear(psi, psi);
  double im = 0;
  for (int i = 0; i < n.n_components(); ++i)
    im = std::max(im, std::abs(n.component(i).value().imag()));
  CHECK(im < 1e-13);
}

TEST_CASE("connection is compatible with the pairing") {
  CompiledScene cs = compile_scene(load_scene("bumpy"));
  SpinConnection conn = normal_connection(cs.vierbein.eval(kP, kOrder));
  CHECK(metric_compatibility(conn) < 1e-11);
  MatrixForm psi = sample_twistor();
  CHECK(pairing_leibniz_residual(psi, psi, conn) < 1e-11);
}

TEST_CASE("second covariant derivative is curvature") {
  CompiledScene cs = compile_scene(load_scene("bumpy"));
  SpinConnection conn = normal_connection(cs.vierbein.eval(kP, kOrder));
  CHECK(curvature_operator_residual(sample_twistor(), conn) < 1e-10);
}

TEST_CASE("twistor curvature vanishes exactly for conformally flat frames") {
  for (const char* name : {"flat", "conformally-flat", "exp-conformal"}) {
    CompiledScene cs = compile_scene(load_scene(name));
    SpinConnection conn = normal_connection(cs.vierbein.eval(kP, kOrder));
    CHECK(twistor_curvature(conn).Omega.max_abs() < 1e-9);
  }
  CompiledScene bumpy = compile_scene(load_scene("bumpy"));
  SpinConnection conn = normal_connection(bumpy.vierbein.eval(kP, kOrder));
  CHECK(twistor_curvature(conn).Omega.max_abs() > 1e-3);
}

TEST_CASE("metric-route prolongation matches the connection derivative") {
  CompiledScene cs = compile_scene(load_scene("bumpy"));
  VierbeinEval ev = cs.vierbein.eval(kP, kOrder);
  MatrixForm psi = sample_twistor();
  ProlongationDeriv pd = prolongation_deriv(psi, ev);
  CHECK((pd.stacked - twistor_deriv(psi, normal_connection(ev))).max_abs() < 1e-6);
}

TEST_CASE("flat global solutions are covariantly constant") {
  VierbeinEval ev = Vierbein::identity().eval(kP, kOrder);
  SpinConnection conn = normal_connection(ev);
  MatrixForm psi = flat_global_twistor({cplx(0.4, 0.1), cplx(-0.2, 0.3)},
                                       {cplx(0.7, -0.5), cplx(0.1, 0.2)}, kP, kOrder);
  CHECK(twistor_deriv(psi, conn).max_abs() < 1e-12);
}

TEST_CASE("weyl rescaling laws close") {
  CompiledScene cs = compile_scene(load_scene("bumpy"));
  VierbeinEval ev = cs.vierbein.eval(kP, kOrder);
  Jet z = cs.z.at(kP, kOrder);
  MatrixForm psi = sample_twistor();
  WeylLawResiduals r = weyl_transformation_laws(ev.e, z, psi, psi);
  CHECK(r.schouten < 1e-10);
  CHECK(r.connection < 1e-10);
  CHECK(r.twistor_component < 1e-10);
  CHECK(r.bilinear_invariance < 1e-10);
}
