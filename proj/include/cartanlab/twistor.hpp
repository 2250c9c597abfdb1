#ifndef CARTANLAB_TWISTOR_HPP
#define CARTANLAB_TWISTOR_HPP

#include "cartanlab/cartan.hpp"
#include "cartanlab/dressing.hpp"
#include "cartanlab/metric_oracle.hpp"

namespace cartanlab {

/// Twistor sections are 4x1 matrices of 0-forms, (pi, omega) stacked with pi
/// in the top two rows.
MatrixForm twistor_section(const std::array<Jet, 2>& pi, const std::array<Jet, 2>& omega);

/// The su(2,2) group metric Sigma-bar = [[0,1],[1,0]] as a constant 0-form.
MatrixForm spin_sigma_form(int order, const Point& base);

/// Covariant derivative D psi = d psi + varpi psi; requires a dressed
/// connection (vanishing a-block).
MatrixForm twistor_deriv(const MatrixForm& psi, const SpinConnection& conn);

/// The prolongation route: the same component pair assembled directly from
/// the Levi-Civita spin connection and the coordinate Schouten tensor,
/// without touching the Cartan connection blocks.
struct ProlongationDeriv {
  MatrixForm Pbar;     // Schouten 1-form from the coordinate-metric route
  MatrixForm comp_pi;     // nabla pi - i Pbar omega  (2x1 1-forms)
  MatrixForm comp_omega;  // nabla omega + i theta-bar pi
  MatrixForm stacked;     // 4x1 1-form, (comp_pi, comp_omega)
};
ProlongationDeriv prolongation_deriv(const MatrixForm& psi, const VierbeinEval& ev);

/// Invariant pairing <psi, psi'> = pi* omega' + omega* pi'; the first slot
/// may carry higher form degree (entries are conjugated entrywise).
Form bilinear(const MatrixForm& psi, const MatrixForm& psi2);
/// Half the norm <psi,psi> at the base point.
double helicity(const MatrixForm& psi);

/// Max residual of D Sigma-bar = d Sigma-bar + varpi* Sigma-bar + Sigma-bar varpi.
double metric_compatibility(const SpinConnection& conn);
/// Max residual of d<psi,psi'> = <D psi, psi'> + <psi, D psi'>.
double pairing_leibniz_residual(const MatrixForm& psi, const MatrixForm& psi2,
                                const SpinConnection& conn);

/// Curvature blocks of a normal connection in the twistor block display
/// Omega = [[-W*, -iC],[0, W]]; errors when the input is not normal.
struct TwistorCurvature {
  MatrixForm Wbar;   // sl(2,C)-valued 2-form
  MatrixForm Cbar;   // hermitian-valued 2-form (Cotton)
  MatrixForm Omega;  // the 4x4 block 2-form
};
TwistorCurvature twistor_curvature(const SpinConnection& conn);

/// Residual of the operator identity D(D psi) = Omega psi.
double curvature_operator_residual(const MatrixForm& psi, const SpinConnection& conn);

/// The flat global solution family omega(x) = omega0 - i x-bar pi0, pi = pi0.
MatrixForm flat_global_twistor(const Eigen::Vector2cd& omega0,
                               const Eigen::Vector2cd& pi0,
                               const Point& p, int order);

/// Residuals of the Weyl rescaling laws, comparing direct recomputation from
/// the rescaled vierbein z*e against the closed transformation formulas.
struct WeylLawResiduals {
  double schouten;           // Schouten block law
  double connection;         // spin-connection block law
  double twistor_component;  // (pi, omega) -> (pi + i Ups omega, omega) after
                             // stripping the z^{+-1/2} weights
  double bilinear_invariance;
};
WeylLawResiduals weyl_transformation_laws(const MatrixForm& e, const Jet& z,
                                          const MatrixForm& psi,
                                          const MatrixForm& psi2);

}  // namespace cartanlab

#endif
