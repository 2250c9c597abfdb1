#include "cartanlab/vierbein.hpp"

#include <cmath>

namespace cartanlab {

namespace {
const cplx I(0, 1);

// Levi-Civita symbol on 4 indices, eps_0123 = +1
int eps4(int a, int b, int c, int d) {
  int idx[4] = {a, b, c, d};
  int sign = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (idx[i] == idx[j]) return 0;
      if (idx[i] > idx[j]) sign = -sign;
    }
  // bubble parity above counts inversions, equivalent to permutation sign
  return sign;
}

double eta_d(int a) { return a == 0 ? 1.0 : -1.0; }
}  // namespace

Vierbein Vierbein::identity() {
  Vierbein v;
  for (int a = 0; a < 4; ++a)
    for (int mu = 0; mu < 4; ++mu)
      v.entries[a * 4 + mu] = ScalarField::constant(a == mu ? 1.0 : 0.0);
  return v;
}

Vierbein Vierbein::scaled(const ScalarField& z) const {
  Vierbein v;
  for (int i = 0; i < 16; ++i) v.entries[i] = z * entries[i];
  return v;
}

VierbeinEval Vierbein::eval(const Point& p, int order) const {
  VierbeinEval ev;
  ev.x = p;
  ev.order = order;
  ev.e = MatrixForm(4, 4, 0, order, p);
  for (int a = 0; a < 4; ++a)
    for (int mu = 0; mu < 4; ++mu)
      ev.e.at(a, mu) = Form::from_jet(entries[a * 4 + mu].at(p, order));
  if (std::abs(ev.e.value().determinant()) < 1e-10)
    throw std::domain_error("degenerate frame");
  ev.einv = ev.e.inverse();
  ev.theta = MatrixForm(4, 1, 1, order, p);
  for (int a = 0; a < 4; ++a)
    for (int mu = 0; mu < 4; ++mu)
      ev.theta.at(a, 0).component(mu) = ev.e.at(a, mu).component(0);
  ev.theta_bar = MatrixForm(2, 2, 1, order, p);
  const auto& sg = sigma_basis();
  for (int a = 0; a < 4; ++a) {
    Mat2c half_sigma = 0.5 * sg[a];
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        ev.theta_bar.at(i, j) += ev.theta.at(a, 0) * half_sigma(i, j);
  }
  MatrixForm eta = MatrixForm::from_constant(minkowski_eta().cast<cplx>(), order, p);
  ev.g = ev.e.transpose() * eta * ev.e;
  return ev;
}

std::array<Jet, 4> VierbeinEval::frame_components_1form(const Form& f) const {
  if (f.degree() != 1) throw std::invalid_argument("expected a 1-form");
  std::array<Jet, 4> out;
  for (int a = 0; a < 4; ++a) {
    Jet s = Jet::constant(0.0, f.order(), f.base());
    for (int mu = 0; mu < 4; ++mu)
      s += einv.at(mu, a).component(0).truncated(f.order()) * f.component(mu);
    out[a] = s;
  }
  return out;
}

std::array<std::array<Jet, 4>, 4> VierbeinEval::frame_components_2form(const Form& f) const {
  if (f.degree() != 2) throw std::invalid_argument("expected a 2-form");
  int ord = f.order();
  // expand to full antisymmetric coordinate array
  std::array<std::array<Jet, 4>, 4> Fmu;
  for (auto& row : Fmu)
    for (auto& j : row) j = Jet::constant(0.0, ord, f.base());
  const auto& basis = form_basis(2);
  for (int k = 0; k < 6; ++k) {
    int mu = basis[k][0], nu = basis[k][1];
    Fmu[mu][nu] = f.component(k);
    Fmu[nu][mu] = -f.component(k);
  }
  std::array<std::array<Jet, 4>, 4> Fab;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      Jet s = Jet::constant(0.0, ord, f.base());
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
          Jet em = einv.at(mu, a).component(0).truncated(ord);
          Jet en = einv.at(nu, b).component(0).truncated(ord);
          s += em * en * Fmu[mu][nu];
        }
      Fab[a][b] = s;
    }
  return Fab;
}

Form VierbeinEval::form_from_frame_2form(const std::array<std::array<Jet, 4>, 4>& F) const {
  int ord = F[0][1].order();
  Form out(2, ord, x);
  // F = (1/2) F_ab theta^a theta^b; coordinate components via e^a_mu
  const auto& basis = form_basis(2);
  for (int k = 0; k < 6; ++k) {
    int mu = basis[k][0], nu = basis[k][1];
    Jet s = Jet::constant(0.0, ord, x);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        Jet ea = e.at(a, mu).component(0).truncated(ord);
        Jet eb = e.at(b, nu).component(0).truncated(ord);
        s += ea * eb * F[a][b];
      }
    out.component(k) = s;
  }
  return out;
}

Form hodge_star(const Form& alpha, const VierbeinEval& ev) {
  if (alpha.degree() != 2) throw std::invalid_argument("hodge_star implemented on 2-forms");
  auto Fab = ev.frame_components_2form(alpha);
  // (*F)_cd = (1/2) eps^{ab}_{cd} F_ab, eps^{ab}_{cd} = eta^{ae} eta^{bf} eps_{efcd}
  int ord = alpha.order();
  std::array<std::array<Jet, 4>, 4> S;
  for (int c = 0; c < 4; ++c)
    for (int d = 0; d < 4; ++d) {
      Jet s = Jet::constant(0.0, ord, alpha.base());
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          int sign = eps4(a, b, c, d);
          if (sign == 0) continue;
          double coef = 0.5 * sign * eta_d(a) * eta_d(b);
          s += coef * Fab[a][b];
        }
      S[c][d] = s;
    }
  return ev.form_from_frame_2form(S);
}

MatrixForm hodge_star(const MatrixForm& alpha, const VierbeinEval& ev) {
  MatrixForm r(alpha.rows(), alpha.cols(), 2, alpha.order(), alpha.base());
  for (int i = 0; i < alpha.rows(); ++i)
    for (int j = 0; j < alpha.cols(); ++j) r.at(i, j) = hodge_star(alpha.at(i, j), ev);
  return r;
}

}  // namespace cartanlab
