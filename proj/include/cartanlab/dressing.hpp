#ifndef CARTANLAB_DRESSING_HPP
#define CARTANLAB_DRESSING_HPP

#include "cartanlab/cartan.hpp"

namespace cartanlab {

/// The conformal-boost dressing field read off a connection: q_a = a_mu e^mu_a.
struct DressingField {
  std::array<Jet, 4> q;  // covector components
  MatrixForm qbar;       // Herm(2,C)-valued 0-form
  MatrixForm u1;         // [[1, -i qbar],[0, 1]]

  MatrixForm u1_inverse() const;  // [[1, +i qbar],[0, 1]]
};

DressingField extract_dressing(const SpinConnection& conn);

/// composite connection u^-1 varpi u + u^-1 du; the a-block vanishes
SpinConnection dress(const SpinConnection& conn, const DressingField& u);
/// composite curvature / section
MatrixForm dress_matrix(const MatrixForm& chi, const DressingField& u);
MatrixForm dress_section(const MatrixForm& psi, const DressingField& u);

/// Residual Weyl transformations act through the 1-alpha-cocycle
/// C(z) = [[z^1/2, -i z^-1/2 Upsilon-bar],[0, z^-1/2]], Upsilon_a = z^-1 dz . e^-1.
struct WeylCocycle {
  Jet z;
  std::array<Jet, 4> Upsilon;
  MatrixForm Upsbar;  // Herm-valued 0-form
  MatrixForm C;       // 4x4 0-form

  MatrixForm C_inverse() const;
};

WeylCocycle weyl_cocycle(const Jet& z, const MatrixForm& einv);

/// generic conjugation C(z)^-1 varpi_1 C(z) + C(z)^-1 dC(z)
SpinConnection residual_weyl(const SpinConnection& conn1, const WeylCocycle& c);
/// the displayed closed-form blocks of the same transformation
SpinConnection residual_weyl_closed(const SpinConnection& conn1, const WeylCocycle& c);
/// curvature: generic C^-1 Omega C and the displayed closed form
MatrixForm residual_weyl_curvature(const MatrixForm& omega1, const WeylCocycle& c);
MatrixForm residual_weyl_curvature_closed(const SpinCurvature& curv1, const WeylCocycle& c);
/// section: psi_1 -> C(z)^-1 psi_1
MatrixForm residual_weyl_section(const MatrixForm& psi1, const WeylCocycle& c);

/// max residual of the abelian 1-alpha-cocycle law
/// C(zz') = C(z') Z'^-1 C(z) Z' and of C(z)^{Z'} = Z'^-1 C(z) Z'
double cocycle_residual(const Jet& z, const Jet& zp, const MatrixForm& einv);
/// violation of the plain group law C(z)C(z') - C(zz'), expected nonzero for
/// non-constant factors
double cocycle_group_law_violation(const Jet& z, const Jet& zp, const MatrixForm& einv);

}  // namespace cartanlab

#endif
