#include "cartanlab/twistor.hpp"

#include <stdexcept>

namespace cartanlab {

namespace {
constexpr double kBlockTol = 1e-8;
}

MatrixForm twistor_section(const std::array<Jet, 2>& pi, const std::array<Jet, 2>& omega) {
  const int order = pi[0].order();
  const Point base = pi[0].base();
  MatrixForm psi(4, 1, 0, order, base);
  psi.at(0, 0) = Form::from_jet(pi[0]);
  psi.at(1, 0) = Form::from_jet(pi[1]);
  psi.at(2, 0) = Form::from_jet(omega[0]);
  psi.at(3, 0) = Form::from_jet(omega[1]);
  return psi;
}

MatrixForm spin_sigma_form(int order, const Point& base) {
  return MatrixForm::from_constant(spin_sigma(), order, base);
}

MatrixForm twistor_deriv(const MatrixForm& psi, const SpinConnection& conn) {
  if (conn.a.max_abs() > 1e-10)
    throw std::invalid_argument(
        "twistor derivative needs a dressed connection (nonzero a-block)");
  return ext_d(psi) + conn.assembled() * psi;
}

ProlongationDeriv prolongation_deriv(const MatrixForm& psi, const VierbeinEval& ev) {
  const int order = ev.order;
  const Point& base = ev.x;
  const LeviCivitaFrame lc = levi_civita_connection(ev);
  const MetricCurvature mc = metric_curvature(ev.g);

  // Schouten 1-form P-bar = dx^mu P_{mu nu} e^nu_b H^b, with H^b the
  // unnormalized covector matrices.
  MatrixForm Pbar = MatrixForm::zero(2, 2, 1, order, base);
  for (int mu = 0; mu < 4; ++mu) {
    std::array<Jet, 4> row;
    for (int b = 0; b < 4; ++b) {
      Jet acc(order, base);
      for (int nu = 0; nu < 4; ++nu)
        acc += mc.schouten[mu][nu] * ev.einv.at(nu, b).component(0);
      row[b] = acc;
    }
    Pbar += herm_of_covec_jets(row, order, base) * Form::dx(mu, order, base);
  }

  const MatrixForm pi = psi.block(0, 0, 2, 1);
  const MatrixForm omega = psi.block(2, 0, 2, 1);
  const cplx iu(0, 1);

  ProlongationDeriv out;
  out.Pbar = Pbar;
  out.comp_pi = ext_d(pi) - lc.Abar.adjoint() * pi - iu * (Pbar * omega);
  out.comp_omega = ext_d(omega) + lc.Abar * omega + iu * (ev.theta_bar * pi);
  out.stacked = MatrixForm::zero(4, 1, 1, order, base);
  out.stacked.set_block(0, 0, out.comp_pi);
  out.stacked.set_block(2, 0, out.comp_omega);
  return out;
}

Form bilinear(const MatrixForm& psi, const MatrixForm& psi2) {
  MatrixForm sig = spin_sigma_form(psi2.order(), psi2.base());
  return (psi.adjoint() * sig * psi2).at(0, 0);
}

double helicity(const MatrixForm& psi) {
  return 0.5 * bilinear(psi, psi).component(0).value().real();
}

double metric_compatibility(const SpinConnection& conn) {
  const MatrixForm m = conn.assembled();
  const MatrixForm sig = spin_sigma_form(m.order(), m.base());
  return (m.adjoint() * sig + sig * m).max_abs();
}

double pairing_leibniz_residual(const MatrixForm& psi, const MatrixForm& psi2,
                                const SpinConnection& conn) {
  const MatrixForm d1 = twistor_deriv(psi, conn);
  const MatrixForm d2 = twistor_deriv(psi2, conn);
  const Form lhs = ext_d(bilinear(psi, psi2));
  const Form rhs = bilinear(d1, psi2) + bilinear(psi, d2);
  return (lhs - rhs).max_abs();
}

TwistorCurvature twistor_curvature(const SpinConnection& conn) {
  const SpinCurvature curv = curvature(conn);
  if (conn.a.max_abs() > kBlockTol || curv.Thetabar.max_abs() > kBlockTol ||
      curv.f.max_abs() > kBlockTol)
    throw std::invalid_argument("twistor curvature needs a normal connection");

  const int order = curv.Wbar.order();
  const Point base = curv.Wbar.base();
  const cplx iu(0, 1);
  TwistorCurvature out;
  out.Wbar = curv.Wbar;
  out.Cbar = curv.Cbar;
  out.Omega = MatrixForm::zero(4, 4, 2, order, base);
  out.Omega.set_block(0, 0, -curv.Wbar.adjoint());
  out.Omega.set_block(0, 2, (-iu) * curv.Cbar);
  out.Omega.set_block(2, 2, curv.Wbar);
  return out;
}

double curvature_operator_residual(const MatrixForm& psi, const SpinConnection& conn) {
  const MatrixForm alpha = twistor_deriv(psi, conn);
  const MatrixForm d2 = ext_d(alpha) + conn.assembled() * alpha;
  const MatrixForm target = curvature(conn).omega * psi;
  return (d2 - target).max_abs();
}

MatrixForm flat_global_twistor(const Eigen::Vector2cd& omega0,
                               const Eigen::Vector2cd& pi0,
                               const Point& p, int order) {
  const auto& sig = sigma_basis();
  // x-bar = (1/2) x^a sigma_a as a 2x2 matrix of jets
  std::array<std::array<Jet, 2>, 2> xbar;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Jet acc(order, p);
      for (int a = 0; a < 4; ++a)
        acc += Jet::coordinate(a, order, p) * (0.5 * sig[a](i, j));
      xbar[i][j] = acc;
    }
  const cplx iu(0, 1);
  std::array<Jet, 2> pi, omega;
  for (int i = 0; i < 2; ++i) {
    pi[i] = Jet::constant(pi0(i), order, p);
    omega[i] = Jet::constant(omega0(i), order, p) -
               iu * (xbar[i][0] * pi0(0) + xbar[i][1] * pi0(1));
  }
  return twistor_section(pi, omega);
}

WeylLawResiduals weyl_transformation_laws(const MatrixForm& e, const Jet& z,
                                          const MatrixForm& psi,
                                          const MatrixForm& psi2) {
  const VierbeinEval ev = eval_of_e(e);
  const SpinConnection conn = normal_connection(ev);
  const WeylCocycle c = weyl_cocycle(z, ev.einv);

  const VierbeinEval ev_hat = eval_of_e(e * z);
  const SpinConnection direct = normal_connection(ev_hat);
  const SpinConnection law = residual_weyl_closed(conn, c);

  WeylLawResiduals out;
  out.schouten = (direct.Pbar - law.Pbar).max_abs();
  out.connection = (direct.Abar - law.Abar).max_abs();

  // strip the z^{-1/2} / z^{+1/2} weights off the cocycle-transformed section
  const MatrixForm psi_hat = residual_weyl_section(psi, c);
  const Jet sz = jet_sqrt(z);
  MatrixForm stripped = psi_hat;
  for (int i = 0; i < 2; ++i) {
    stripped.at(i, 0) = psi_hat.at(i, 0) * sz;
    stripped.at(i + 2, 0) = psi_hat.at(i + 2, 0) * sz.reciprocal();
  }
  const cplx iu(0, 1);
  const MatrixForm pi = psi.block(0, 0, 2, 1);
  const MatrixForm omega = psi.block(2, 0, 2, 1);
  MatrixForm gt = psi;
  gt.set_block(0, 0, pi + iu * (c.Upsbar * omega));
  gt.set_block(2, 0, omega);
  out.twistor_component = (stripped - gt).max_abs();

  const MatrixForm psi2_hat = residual_weyl_section(psi2, c);
  out.bilinear_invariance = (bilinear(psi_hat, psi2_hat) - bilinear(psi, psi2)).max_abs();
  return out;
}

}  // namespace cartanlab
