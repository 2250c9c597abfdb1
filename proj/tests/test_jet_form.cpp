#include <doctest.h>

#include <cmath>

#include "cartanlab/form.hpp"
#include "cartanlab/jet.hpp"
#include "cartanlab/vierbein.hpp"

using namespace cartanlab;

namespace {
const Point kP{0.12, -0.31, 0.24, 0.08};
constexpr int kOrder = 4;

Jet coord(int mu) { return Jet::coordinate(mu, kOrder, kP); }
}  // namespace

TEST_CASE("jet arithmetic reproduces Taylor coefficients") {
  // f = exp(x0*x3): d/dx0 d/dx3 f at the base equals (1 + x0*x3) exp(x0*x3).
  Jet f = jet_exp(coord(0) * coord(3));
  Jet d03 = jet_partial(jet_partial(f, 0), 3);
  double expect = (1.0 + kP[0] * kP[3]) * std::exp(kP[0] * kP[3]);
  CHECK(std::abs(d03.value() - cplx(expect)) < 1e-14);

  // polynomial: (1 + 0.1 x1)^2 has second x1-derivative 0.02.
  Jet g = (Jet::constant(1.0, kOrder, kP) + coord(1) * cplx(0.1)).pow_int(2);
  CHECK(std::abs(jet_partial(jet_partial(g, 1), 1).value() - cplx(0.02)) < 1e-14);
}

TEST_CASE("jet elementary functions invert each other") {
  Jet u = Jet::constant(0.7, kOrder, kP) + coord(2) * cplx(0.3);
  CHECK((jet_exp(jet_log(u)) - u).max_abs() < 1e-13);
  CHECK((jet_sqrt(u) * jet_sqrt(u) - u).max_abs() < 1e-13);
  Jet s = jet_sin(u), c = jet_cos(u);
  CHECK((s * s + c * c - Jet::constant(1.0, kOrder, kP)).max_abs() < 1e-13);
}

TEST_CASE("binary operations truncate to the smaller order") {
  Jet a = Jet::coordinate(0, 4, kP);
  Jet b = Jet::coordinate(1, 2, kP);
  CHECK((a * b).order() == 2);
  CHECK((a + b).order() == 2);
}

TEST_CASE("exterior derivative squares to zero") {
  Form alpha = Form::dx(0, kOrder, kP) * (coord(1) * coord(2)) +
               Form::dx(3, kOrder, kP) * jet_exp(coord(0) * cplx(0.2));
  CHECK(ext_d(ext_d(alpha)).max_abs() < 1e-14);
}

TEST_CASE("wedge is graded antisymmetric and d is a graded derivation") {
  Form a = Form::dx(0, kOrder, kP) * coord(1) + Form::dx(2, kOrder, kP) * coord(3);
  Form b = Form::dx(1, kOrder, kP) * jet_cos(coord(0)) + Form::dx(3, kOrder, kP);
  CHECK((wedge(a, b) + wedge(b, a)).max_abs() < 1e-14);

  Form lhs = ext_d(wedge(a, b));
  Form rhs = wedge(ext_d(a), b) - wedge(a, ext_d(b));
  CHECK((lhs - rhs).max_abs() < 1e-13);
}

TEST_CASE("mixed partial derivatives commute") {
  Jet f = jet_exp(coord(0) * coord(3)) * jet_sin(coord(1) + coord(2));
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu) {
      Jet d1 = jet_partial(jet_partial(f, mu), nu);
      Jet d2 = jet_partial(jet_partial(f, nu), mu);
      CHECK((d1 - d2).max_abs() < 1e-13);
    }
}

TEST_CASE("hodge star squares to minus one on two-forms") {
  VierbeinEval ev = Vierbein::identity().eval(kP, kOrder);
  Form w = wedge(Form::dx(0, kOrder, kP), Form::dx(1, kOrder, kP)) * coord(2) +
           wedge(Form::dx(1, kOrder, kP), Form::dx(3, kOrder, kP));
  CHECK((hodge_star(hodge_star(w, ev), ev) + w).max_abs() < 1e-13);
}
