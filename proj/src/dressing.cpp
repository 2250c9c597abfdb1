#include "cartanlab/dressing.hpp"

namespace cartanlab {

namespace {
const cplx I(0, 1);

MatrixForm boost_matrix(const MatrixForm& qbar, cplx sign) {
  MatrixForm u = MatrixForm::identity(4, qbar.order(), qbar.base());
  u.set_block(0, 2, qbar * (sign * -I));
  return u;
}
}  // namespace

MatrixForm DressingField::u1_inverse() const { return boost_matrix(qbar, -1.0); }

DressingField extract_dressing(const SpinConnection& conn) {
  DressingField d;
  int ord = conn.a.order();
  for (int a = 0; a < 4; ++a) {
    Jet s = Jet::constant(0.0, ord, conn.a.base());
    for (int mu = 0; mu < 4; ++mu)
      s += conn.a.component(mu) * conn.einv.at(mu, a).component(0).truncated(ord);
    d.q[a] = s;
  }
  d.qbar = herm_of_covec_jets(d.q, ord, conn.a.base());
  d.u1 = boost_matrix(d.qbar, 1.0);
  return d;
}

SpinConnection dress(const SpinConnection& conn, const DressingField& u) {
  MatrixForm m = conn.assembled();
  MatrixForm ui = u.u1_inverse();
  return SpinConnection::from_matrix(ui * m * u.u1 + ui * ext_d(u.u1));
}

MatrixForm dress_matrix(const MatrixForm& chi, const DressingField& u) {
  return u.u1_inverse() * chi * u.u1;
}

MatrixForm dress_section(const MatrixForm& psi, const DressingField& u) {
  return u.u1_inverse() * psi;
}

MatrixForm WeylCocycle::C_inverse() const {
  // [[z^-1/2, i z^1/2 ... ]]: invert the triangular block form directly
  int ord = Upsbar.order();
  const Point& p = Upsbar.base();
  Jet sqz = jet_sqrt(z);
  MatrixForm m(4, 4, 0, ord, p);
  MatrixForm i2 = MatrixForm::identity(2, ord, p);
  m.set_block(0, 0, i2 * sqz.reciprocal());
  m.set_block(0, 2, Upsbar * (I * sqz.reciprocal()));
  m.set_block(2, 2, i2 * sqz);
  return m;
}

WeylCocycle weyl_cocycle(const Jet& z, const MatrixForm& einv) {
  WeylCocycle c;
  c.z = z;
  int ord = z.order();
  const Point& p = z.base();
  Jet zi = z.reciprocal();
  for (int a = 0; a < 4; ++a) {
    Jet s = Jet::constant(0.0, ord, p);
    for (int mu = 0; mu < 4; ++mu)
      s += zi * jet_partial(z, mu) * einv.at(mu, a).component(0);
    c.Upsilon[a] = s;
  }
  c.Upsbar = herm_of_covec_jets(c.Upsilon, c.Upsilon[0].order(), p);
  Jet sqz = jet_sqrt(z).truncated(c.Upsilon[0].order());
  MatrixForm i2 = MatrixForm::identity(2, c.Upsilon[0].order(), p);
  c.C = MatrixForm(4, 4, 0, c.Upsilon[0].order(), p);
  c.C.set_block(0, 0, i2 * sqz);
  c.C.set_block(0, 2, c.Upsbar * (-I * sqz.reciprocal()));
  c.C.set_block(2, 2, i2 * sqz.reciprocal());
  return c;
}

SpinConnection residual_weyl(const SpinConnection& conn1, const WeylCocycle& c) {
  MatrixForm m = conn1.assembled();
  MatrixForm ci = c.C_inverse();
  return SpinConnection::from_matrix(ci * m * c.C + ci * ext_d(c.C));
}

SpinConnection residual_weyl_closed(const SpinConnection& conn1, const WeylCocycle& c) {
  SpinConnection out;
  const MatrixForm& U = c.Upsbar;
  out.a = Form::zero(1, conn1.a.order(), conn1.a.base());
  out.Abar = conn1.Abar + (conn1.thbar * U).traceless();
  out.Pbar = (conn1.Pbar + ext_d(U) - U * conn1.Abar - conn1.Abar.adjoint() * U -
              U * conn1.thbar * U) *
             c.z.reciprocal();
  out.thbar = conn1.thbar * c.z;
  MatrixForm th = vec_of_herm_form(out.thbar);
  MatrixForm e(4, 4, 0, th.order(), th.base());
  for (int a = 0; a < 4; ++a)
    for (int mu = 0; mu < 4; ++mu)
      e.at(a, mu) = Form::from_jet(th.at(a, 0).component(mu));
  VierbeinEval ev = eval_of_e(e);
  out.e = ev.e;
  out.einv = ev.einv;
  return out;
}

MatrixForm residual_weyl_curvature(const MatrixForm& omega1, const WeylCocycle& c) {
  return c.C_inverse() * omega1 * c.C;
}

MatrixForm residual_weyl_curvature_closed(const SpinCurvature& curv1, const WeylCocycle& c) {
  const MatrixForm& U = c.Upsbar;
  const MatrixForm& W = curv1.Wbar;
  const MatrixForm& Th = curv1.Thetabar;
  const Form& f = curv1.f;
  int ord = W.order();
  const Point& p = W.base();
  Form half_f = f * cplx(0.5);
  MatrixForm ul = -W.adjoint() - U * Th;
  MatrixForm lr = W + Th * U;
  for (int i = 0; i < 2; ++i) {
    ul.at(i, i) += half_f;
    lr.at(i, i) -= half_f;
  }
  MatrixForm ur = (curv1.Cbar - U * W - W.adjoint() * U + U * f - U * Th * U) *
                  (-I * c.z.reciprocal());
  MatrixForm m(4, 4, 2, ord, p);
  m.set_block(0, 0, ul);
  m.set_block(0, 2, ur);
  m.set_block(2, 0, Th * (I * c.z));
  m.set_block(2, 2, lr);
  return m;
}

MatrixForm residual_weyl_section(const MatrixForm& psi1, const WeylCocycle& c) {
  return c.C_inverse() * psi1;
}

double cocycle_residual(const Jet& z, const Jet& zp, const MatrixForm& einv) {
  WeylCocycle czz = weyl_cocycle(z * zp, einv);
  WeylCocycle cz = weyl_cocycle(z, einv);
  WeylCocycle czp = weyl_cocycle(zp, einv);
  int ord = czz.C.order();
  const Point& p = z.base();
  Jet sqzp = jet_sqrt(zp).truncated(ord);
  MatrixForm Zp(4, 4, 0, ord, p);
  MatrixForm i2 = MatrixForm::identity(2, ord, p);
  Zp.set_block(0, 0, i2 * sqzp);
  Zp.set_block(2, 2, i2 * sqzp.reciprocal());
  MatrixForm conj = Zp.inverse() * cz.C * Zp;
  double res = (czz.C - czp.C * conj).max_abs();
  // the alpha-twist: C(z) recomputed in the z'-rescaled frame equals Z'^-1 C(z) Z'
  MatrixForm einv_scaled = einv * zp.reciprocal().truncated(einv.order());
  WeylCocycle cz_scaled = weyl_cocycle(z, einv_scaled);
  res = std::max(res, (cz_scaled.C - conj).max_abs());
  return res;
}

double cocycle_group_law_violation(const Jet& z, const Jet& zp, const MatrixForm& einv) {
  WeylCocycle czz = weyl_cocycle(z * zp, einv);
  WeylCocycle cz = weyl_cocycle(z, einv);
  WeylCocycle czp = weyl_cocycle(zp, einv);
  return (cz.C * czp.C - czz.C).max_abs();
}

}  // namespace cartanlab
