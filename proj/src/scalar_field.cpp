#include "cartanlab/scalar_field.hpp"

namespace cartanlab {

ScalarField ScalarField::constant(cplx v) {
  return ScalarField([v](const Point& p, int k) { return Jet::constant(v, k, p); });
}

ScalarField ScalarField::coordinate(int mu) {
  return ScalarField([mu](const Point& p, int k) { return Jet::coordinate(mu, k, p); });
}

ScalarField ScalarField::operator-() const {
  auto f = f_;
  return ScalarField([f](const Point& p, int k) { return -f(p, k); });
}

ScalarField ScalarField::operator+(const ScalarField& o) const {
  auto f = f_, g = o.f_;
  return ScalarField([f, g](const Point& p, int k) { return f(p, k) + g(p, k); });
}

ScalarField ScalarField::operator-(const ScalarField& o) const {
  auto f = f_, g = o.f_;
  return ScalarField([f, g](const Point& p, int k) { return f(p, k) - g(p, k); });
}

ScalarField ScalarField::operator*(const ScalarField& o) const {
  auto f = f_, g = o.f_;
  return ScalarField([f, g](const Point& p, int k) { return f(p, k) * g(p, k); });
}

ScalarField ScalarField::operator/(const ScalarField& o) const {
  auto f = f_, g = o.f_;
  return ScalarField([f, g](const Point& p, int k) { return f(p, k) / g(p, k); });
}

ScalarField operator*(cplx s, const ScalarField& f) {
  auto g = f.f_;
  return ScalarField([s, g](const Point& p, int k) { return g(p, k) * s; });
}

ScalarField operator+(cplx s, const ScalarField& f) {
  auto g = f.f_;
  return ScalarField([s, g](const Point& p, int k) { return g(p, k) + s; });
}

ScalarField field_exp(const ScalarField& f) {
  return ScalarField([f](const Point& p, int k) { return jet_exp(f.at(p, k)); });
}
ScalarField field_log(const ScalarField& f) {
  return ScalarField([f](const Point& p, int k) { return jet_log(f.at(p, k)); });
}
ScalarField field_sqrt(const ScalarField& f) {
  return ScalarField([f](const Point& p, int k) { return jet_sqrt(f.at(p, k)); });
}
ScalarField field_sin(const ScalarField& f) {
  return ScalarField([f](const Point& p, int k) { return jet_sin(f.at(p, k)); });
}
ScalarField field_cos(const ScalarField& f) {
  return ScalarField([f](const Point& p, int k) { return jet_cos(f.at(p, k)); });
}
ScalarField field_pow(const ScalarField& f, int n) {
  return ScalarField([f, n](const Point& p, int k) { return f.at(p, k).pow_int(n); });
}

}  // namespace cartanlab
