#include "cartanlab/cartan.hpp"

#include <mutex>

namespace cartanlab {

namespace {
const cplx I(0, 1);

double eta_d(int a) { return a == 0 ? 1.0 : -1.0; }
}  // namespace

MatrixForm herm_of_vec_form(const MatrixForm& v) {
  MatrixForm m(2, 2, v.degree(), v.order(), v.base());
  const auto& sg = sigma_basis();
  for (int a = 0; a < 4; ++a)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        m.at(i, j) += v.at(a, 0) * cplx(0.5 * sg[a](i, j));
  return m;
}

// 2x2 hermitian-valued form -> 4x1 vector-valued form, x^a = tr(sigma_a m)
MatrixForm vec_of_herm_form(const MatrixForm& m) {
  MatrixForm v(4, 1, m.degree(), m.order(), m.base());
  const auto& sg = sigma_basis();
  for (int a = 0; a < 4; ++a)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        v.at(a, 0) += m.at(j, i) * cplx(sg[a](i, j));
  return v;
}

// covector components r_a = (1/2) tr(sigma_a m)
std::array<Form, 4> covec_of_herm_form(const MatrixForm& m) {
  MatrixForm v = vec_of_herm_form(m);
  std::array<Form, 4> r;
  for (int a = 0; a < 4; ++a) r[a] = v.at(a, 0) * cplx(0.5);
  return r;
}

// jets r_a -> 2x2 hermitian-valued 0-form
MatrixForm herm_of_covec_jets(const std::array<Jet, 4>& r, int order, const Point& base) {
  MatrixForm m(2, 2, 0, order, base);
  for (int a = 0; a < 4; ++a) {
    Covec4 unit = Covec4::Zero();
    unit[a] = 1;
    Mat2c H = covec_to_herm(unit);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        m.at(i, j) += Form::from_jet(r[a]) * cplx(H(i, j));
  }
  return m;
}

// rebuild the full frame data from a 4x4 matrix of vierbein jets
VierbeinEval eval_of_e(const MatrixForm& e) {
  VierbeinEval ev;
  ev.x = e.base();
  ev.order = e.order();
  ev.e = e;
  if (std::abs(ev.e.value().determinant()) < 1e-10)
    throw std::domain_error("degenerate frame");
  ev.einv = ev.e.inverse();
  ev.theta = MatrixForm(4, 1, 1, ev.order, ev.x);
  for (int a = 0; a < 4; ++a)
    for (int mu = 0; mu < 4; ++mu)
      ev.theta.at(a, 0).component(mu) = ev.e.at(a, mu).component(0);
  ev.theta_bar = MatrixForm(2, 2, 1, ev.order, ev.x);
  const auto& sg = sigma_basis();
  for (int a = 0; a < 4; ++a)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        ev.theta_bar.at(i, j) += ev.theta.at(a, 0) * cplx(0.5 * sg[a](i, j));
  MatrixForm eta = MatrixForm::from_constant(minkowski_eta().cast<cplx>(), ev.order, ev.x);
  ev.g = ev.e.transpose() * eta * ev.e;
  return ev;
}

namespace {
void attach_frame(SpinConnection& c) {
  MatrixForm th = vec_of_herm_form(c.thbar);
  int ord = c.thbar.order();
  MatrixForm e(4, 4, 0, ord, c.thbar.base());
  for (int a = 0; a < 4; ++a)
    for (int mu = 0; mu < 4; ++mu)
      e.at(a, mu) = Form::from_jet(th.at(a, 0).component(mu));
  VierbeinEval ev = eval_of_e(e);
  c.e = ev.e;
  c.einv = ev.einv;
}

// matrix exponential of a 0-form matrix by plain series; arguments stay
// O(1) in practice
MatrixForm mat_exp0(const MatrixForm& m) {
  MatrixForm r = MatrixForm::identity(m.rows(), m.order(), m.base());
  MatrixForm t = r;
  for (int k = 1; k <= 24; ++k) {
    t = t * m * cplx(1.0 / k);
    r += t;
  }
  return r;
}

Jet jet_re(const Jet& j) { return (j + j.conj()) * cplx(0.5); }
Jet jet_im(const Jet& j) { return (j - j.conj()) * cplx(0, -0.5); }

// sl(2,C) basis paired with lorentz_exp coefficient ordering
std::array<Mat2c, 6> sl2_basis() {
  std::array<Mat2c, 6> b;
  const auto& sg = sigma_basis();
  for (int k = 0; k < 3; ++k) {
    b[k] = sg[k + 1];
    b[k + 3] = I * sg[k + 1];
  }
  return b;
}

// so(1,3) generators M_ab, a<b pairs in form_basis(2) order
const std::array<Mat4d, 6>& so13_generators() {
  static const std::array<Mat4d, 6> gens = [] {
    std::array<Mat4d, 6> g;
    const auto& pairs = form_basis(2);
    for (int p = 0; p < 6; ++p) {
      int a = pairs[p][0], b = pairs[p][1];
      Mat4d m = Mat4d::Zero();
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d)
          m(c, d) = (c == a ? 1.0 : 0.0) * (d == b ? eta_d(b) : 0.0) -
                    (c == b ? 1.0 : 0.0) * (d == a ? eta_d(a) : 0.0);
      g[p] = m;
    }
    return g;
  }();
  return gens;
}

const std::array<Mat2c, 6>& so13_generator_lifts() {
  static const std::array<Mat2c, 6> lifts = [] {
    std::array<Mat2c, 6> l;
    const auto& gens = so13_generators();
    for (int p = 0; p < 6; ++p) l[p] = sl2_of_so13(gens[p]);
    return l;
  }();
  return lifts;
}

// constant coefficient matrix of the torsion-free frame equations
// (d theta^a)_{cd} + w^a_{d,c} - w^a_{c,d} = 0, unknowns w_{(ab),c}
const Eigen::Matrix<double, 24, 24>& levi_civita_inverse() {
  static const Eigen::Matrix<double, 24, 24> minv = [] {
    const auto& pairs = form_basis(2);
    auto omega_coef = [&](int a, int b, int c, int p, int cp) -> double {
      // coefficient of the unknown w_{pairs[p], cp} in w^a_{b,c}
      if (c != cp) return 0;
      int pa = pairs[p][0], pb = pairs[p][1];
      double sign;
      if (a == pa && b == pb) sign = 1;
      else if (a == pb && b == pa) sign = -1;
      else return 0;
      return eta_d(a) * sign;  // raise the first index
    };
    Eigen::Matrix<double, 24, 24> m;
    for (int a = 0; a < 4; ++a)
      for (int k = 0; k < 6; ++k) {
        int c = pairs[k][0], d = pairs[k][1];
        int row = a * 6 + k;
        for (int p = 0; p < 6; ++p)
          for (int cp = 0; cp < 4; ++cp)
            m(row, p * 4 + cp) =
                omega_coef(a, d, c, p, cp) - omega_coef(a, c, d, p, cp);
      }
    return Eigen::Matrix<double, 24, 24>(m.inverse());
  }();
  return minv;
}
}  // namespace

MatrixForm SpinConnection::assembled() const {
  int ord = thbar.order();
  const Point& x = thbar.base();
  MatrixForm m(4, 4, 1, ord, x);
  MatrixForm ul = -Abar.adjoint();
  MatrixForm lr = Abar;
  Form half_a = a * cplx(0.5);
  for (int i = 0; i < 2; ++i) {
    ul.at(i, i) += half_a;
    lr.at(i, i) -= half_a;
  }
  m.set_block(0, 0, ul);
  m.set_block(0, 2, Pbar * (-I));
  m.set_block(2, 0, thbar * I);
  m.set_block(2, 2, lr);
  return m;
}

SpinConnection SpinConnection::from_matrix(const MatrixForm& m) {
  SpinConnection c;
  MatrixForm lr = m.block(2, 2, 2, 2);
  c.a = -lr.trace();
  c.Abar = lr;
  Form half_a = c.a * cplx(0.5);
  for (int i = 0; i < 2; ++i) c.Abar.at(i, i) += half_a;
  c.Pbar = m.block(0, 2, 2, 2) * I;
  c.thbar = m.block(2, 0, 2, 2) * (-I);
  attach_frame(c);
  return c;
}

double SpinConnection::algebra_residual() const {
  MatrixForm m = assembled();
  MatrixForm sb = MatrixForm::from_constant(spin_sigma(), m.order(), m.base());
  return (m.adjoint() * sb + sb * m).max_abs();
}

VierbeinEval SpinConnection::frame_eval() const { return eval_of_e(e); }

SpinCurvature SpinCurvature::from_matrix(const MatrixForm& m) {
  SpinCurvature c;
  c.omega = m;
  MatrixForm lr = m.block(2, 2, 2, 2);
  c.f = -lr.trace();
  c.Wbar = lr;
  Form half_f = c.f * cplx(0.5);
  for (int i = 0; i < 2; ++i) c.Wbar.at(i, i) += half_f;
  c.Cbar = m.block(0, 2, 2, 2) * I;
  c.Thetabar = m.block(2, 0, 2, 2) * (-I);
  return c;
}

SpinCurvature curvature(const SpinConnection& conn) {
  MatrixForm m = conn.assembled();
  return SpinCurvature::from_matrix(ext_d(m) + m * m);
}

SpinGaugeField SpinGaugeField::weyl(const ScalarField& z) {
  SpinGaugeField g;
  g.z = z;
  g.has_z = true;
  return g;
}

SpinGaugeField SpinGaugeField::lorentz(const std::array<ScalarField, 8>& Sbar) {
  SpinGaugeField g;
  g.Sbar = Sbar;
  g.has_S = true;
  return g;
}

SpinGaugeField SpinGaugeField::lorentz_exp(const std::array<ScalarField, 6>& coeffs) {
  std::array<ScalarField, 8> entries;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int part = 0; part < 2; ++part)
        entries[2 * (2 * i + j) + part] = ScalarField(
            [coeffs, i, j, part](const Point& p, int order) -> Jet {
              MatrixForm m(2, 2, 0, order, p);
              auto basis = sl2_basis();
              for (int k = 0; k < 6; ++k) {
                Jet ck = coeffs[k].at(p, order);
                for (int r = 0; r < 2; ++r)
                  for (int c = 0; c < 2; ++c)
                    m.at(r, c) += Form::from_jet(ck * cplx(basis[k](r, c)));
              }
              Jet entry = mat_exp0(m).at(i, j).component(0);
              return part == 0 ? jet_re(entry) : jet_im(entry);
            });
  return lorentz(entries);
}

SpinGaugeField SpinGaugeField::boost(const std::array<ScalarField, 4>& r) {
  SpinGaugeField g;
  g.r = r;
  g.has_r = true;
  return g;
}

GaugeEval eval_gauge(const SpinGaugeField& g, const Point& p, int order) {
  GaugeEval ge;
  ge.has_z = g.has_z;
  ge.has_S = g.has_S;
  ge.has_r = g.has_r;
  ge.z = g.has_z ? g.z.at(p, order) : Jet::constant(1.0, order, p);
  ge.Sbar = MatrixForm::identity(2, order, p);
  if (g.has_S)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        Jet re = g.Sbar[2 * (2 * i + j)].at(p, order);
        Jet im = g.Sbar[2 * (2 * i + j) + 1].at(p, order);
        ge.Sbar.at(i, j) = Form::from_jet(re + I * im);
      }
  ge.rbar = MatrixForm::zero(2, 2, 0, order, p);
  if (g.has_r) {
    std::array<Jet, 4> rj;
    for (int a = 0; a < 4; ++a)
      rj[a] = g.r[a].valid() ? g.r[a].at(p, order) : Jet::constant(0.0, order, p);
    ge.rbar = herm_of_covec_jets(rj, order, p);
  }
  Jet sqz = jet_sqrt(ge.z);
  MatrixForm k0(4, 4, 0, order, p);
  k0.set_block(0, 0, ge.Sbar.inverse().adjoint() * sqz);
  k0.set_block(2, 2, ge.Sbar * sqz.reciprocal());
  MatrixForm k1 = MatrixForm::identity(4, order, p);
  k1.set_block(0, 2, ge.rbar * (-I));
  ge.gamma = k0 * k1;
  return ge;
}

SpinConnection gauge_transform(const SpinConnection& conn, const GaugeEval& g) {
  MatrixForm m = conn.assembled();
  MatrixForm gi = g.gamma.inverse();
  return SpinConnection::from_matrix(gi * m * g.gamma + gi * ext_d(g.gamma));
}

MatrixForm gauge_transform_curvature(const MatrixForm& omega, const GaugeEval& g) {
  return g.gamma.inverse() * omega * g.gamma;
}

MatrixForm gauge_transform_section(const MatrixForm& psi, const GaugeEval& g) {
  return g.gamma.inverse() * psi;
}

SpinConnection gauge_transform_k0_closed(const SpinConnection& conn, const GaugeEval& g) {
  SpinConnection c;
  Form dz = ext_d(Form::from_jet(g.z));
  c.a = conn.a + dz * g.z.reciprocal();
  MatrixForm si = g.Sbar.inverse();
  c.Abar = si * conn.Abar * g.Sbar + si * ext_d(g.Sbar);
  c.Pbar = (g.Sbar.adjoint() * conn.Pbar * g.Sbar) * g.z.reciprocal();
  c.thbar = (si * conn.thbar * si.adjoint()) * g.z;
  attach_frame(c);
  return c;
}

SpinConnection gauge_transform_k1_closed(const SpinConnection& conn, const GaugeEval& g) {
  SpinConnection c;
  auto r = covec_of_herm_form(g.rbar);
  MatrixForm th = vec_of_herm_form(conn.thbar);
  Form rth = Form::zero(1, conn.thbar.order(), conn.thbar.base());
  for (int a = 0; a < 4; ++a) rth += wedge(r[a], th.at(a, 0));
  c.a = conn.a - rth;
  c.Abar = conn.Abar + (conn.thbar * g.rbar).traceless();
  c.Pbar = conn.Pbar + ext_d(g.rbar) - g.rbar * conn.Abar -
           conn.Abar.adjoint() * g.rbar + g.rbar * conn.a -
           g.rbar * conn.thbar * g.rbar;
  c.thbar = conn.thbar;
  c.e = conn.e;
  c.einv = conn.einv;
  return c;
}

LeviCivitaFrame levi_civita_connection(const VierbeinEval& ev) {
  const auto& pairs = form_basis(2);
  int ord = ev.order - 1;
  // right-hand sides -(d theta^a)_{cd} in frame components
  std::vector<Jet> rhs(24, Jet::constant(0.0, ord, ev.x));
  for (int a = 0; a < 4; ++a) {
    auto C = ev.frame_components_2form(ext_d(ev.theta.at(a, 0)));
    for (int k = 0; k < 6; ++k)
      rhs[a * 6 + k] = -C[pairs[k][0]][pairs[k][1]];
  }
  const auto& minv = levi_civita_inverse();
  // w[p][c] with omega_{ab} = w_{(ab)} on increasing pairs
  std::array<std::array<Jet, 4>, 6> w;
  for (int p = 0; p < 6; ++p)
    for (int cp = 0; cp < 4; ++cp) {
      Jet s = Jet::constant(0.0, ord, ev.x);
      for (int row = 0; row < 24; ++row) {
        double coef = minv(p * 4 + cp, row);
        if (coef != 0.0) s += rhs[row] * cplx(coef);
      }
      w[p][cp] = s;
    }
  LeviCivitaFrame lc;
  lc.A = MatrixForm(4, 4, 1, ord, ev.x);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      // omega^a_{b,c} = eta^{aa} omega_{ab,c}
      for (int p = 0; p < 6; ++p) {
        double sign;
        if (pairs[p][0] == a && pairs[p][1] == b) sign = 1;
        else if (pairs[p][0] == b && pairs[p][1] == a) sign = -1;
        else continue;
        for (int cc = 0; cc < 4; ++cc)
          lc.A.at(a, b) += ev.theta.at(cc, 0) * (w[p][cc] * cplx(eta_d(a) * sign));
      }
    }
  lc.Abar = spin_lift(lc.A);
  return lc;
}

MatrixForm spin_lift(const MatrixForm& A) {
  const auto& pairs = form_basis(2);
  const auto& lifts = so13_generator_lifts();
  MatrixForm out(2, 2, A.degree(), A.order(), A.base());
  for (int p = 0; p < 6; ++p) {
    int a = pairs[p][0], b = pairs[p][1];
    // A = sum_{a<b} alpha^{ab} M_ab with alpha^{ab} = eta^{bb} A^a_b
    Form alpha = A.at(a, b) * cplx(eta_d(b));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        out.at(i, j) += alpha * cplx(lifts[p](i, j));
  }
  return out;
}

MatrixForm spin_unlift(const MatrixForm& Abar) {
  int ord = Abar.order();
  int nc = form_dim(Abar.degree());
  const auto& table = MultiIndexTable::get(ord);
  MatrixForm out(4, 4, Abar.degree(), ord, Abar.base());
  for (int k = 0; k < nc; ++k)
    for (std::size_t t = 0; t < table.size(); ++t) {
      const MultiIndex& alpha = table.indices[t];
      Mat2c m;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          m(i, j) = Abar.at(i, j).component(k).coeff(alpha);
      if (m.cwiseAbs().maxCoeff() == 0.0) continue;
      Mat4d s = so13_of_sl2(m);
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
          out.at(a, b).component(k).coeff_ref(alpha) = s(a, b);
    }
  return out;
}

Eigen::Matrix4d schouten_from_frame(const VierbeinEval& ev, const LeviCivitaFrame& lc,
                                    std::array<std::array<Jet, 4>, 4>* out_jets) {
  MatrixForm R = ext_d(lc.A) + lc.A * lc.A;
  int ord = R.order();
  std::array<std::array<std::array<std::array<Jet, 4>, 4>, 4>, 4> Rf;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      auto F = ev.frame_components_2form(R.at(a, b));
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) Rf[a][b][c][d] = F[c][d];
    }
  std::array<std::array<Jet, 4>, 4> ric;
  for (int b = 0; b < 4; ++b)
    for (int d = 0; d < 4; ++d) {
      Jet s = Jet::constant(0.0, ord, ev.x);
      for (int a = 0; a < 4; ++a) s += Rf[a][b][a][d];
      ric[b][d] = s;
    }
  Jet rscal = Jet::constant(0.0, ord, ev.x);
  for (int b = 0; b < 4; ++b) rscal += ric[b][b] * cplx(eta_d(b));
  std::array<std::array<Jet, 4>, 4> P;
  Eigen::Matrix4d Pval;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      Jet etaab = Jet::constant(a == b ? eta_d(a) : 0.0, ord, ev.x);
      P[a][b] = (ric[a][b] - rscal * etaab * cplx(1.0 / 6.0)) * cplx(-0.5);
      Pval(a, b) = P[a][b].value().real();
    }
  if (out_jets) *out_jets = P;
  return Pval;
}

SpinConnection normal_connection(const VierbeinEval& ev) {
  LeviCivitaFrame lc = levi_civita_connection(ev);
  std::array<std::array<Jet, 4>, 4> P;
  schouten_from_frame(ev, lc, &P);
  SpinConnection c;
  c.a = Form::zero(1, ev.order, ev.x);
  c.Abar = lc.Abar;
  c.thbar = ev.theta_bar;
  c.e = ev.e;
  c.einv = ev.einv;
  c.Pbar = MatrixForm(2, 2, 1, P[0][0].order(), ev.x);
  for (int b = 0; b < 4; ++b) {
    Covec4 unit = Covec4::Zero();
    unit[b] = 1;
    Mat2c H = covec_to_herm(unit);
    for (int a = 0; a < 4; ++a) {
      Form pa = ev.theta.at(a, 0) * P[a][b];
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) c.Pbar.at(i, j) += pa * cplx(H(i, j));
    }
  }
  return c;
}

CottonWeyl cotton_and_weyl(const SpinConnection& normal_conn) {
  SpinCurvature curv = curvature(normal_conn);
  if (curv.Thetabar.max_abs() > 1e-8)
    throw std::invalid_argument("connection carries torsion");
  CottonWeyl cw;
  cw.Cbar = curv.Cbar;
  cw.Wbar = curv.Wbar;
  return cw;
}

double weyl_ricci_trace_residual(const SpinConnection& normal_conn,
                                 const SpinCurvature& curv) {
  MatrixForm W = spin_unlift(curv.Wbar);
  VierbeinEval ev = normal_conn.frame_eval();
  double res = 0;
  std::array<std::array<std::array<std::array<Jet, 4>, 4>, 4>, 4> Wf;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      auto F = ev.frame_components_2form(W.at(a, b));
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) Wf[a][b][c][d] = F[c][d];
    }
  for (int b = 0; b < 4; ++b)
    for (int d = 0; d < 4; ++d) {
      Jet s = Jet::constant(0.0, W.order(), W.base());
      for (int a = 0; a < 4; ++a) s += Wf[a][b][a][d];
      res = std::max(res, s.max_abs());
    }
  return res;
}

}  // namespace cartanlab
