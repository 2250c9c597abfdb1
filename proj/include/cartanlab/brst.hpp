#ifndef CARTANLAB_BRST_HPP
#define CARTANLAB_BRST_HPP

#include "cartanlab/dressing.hpp"
#include "cartanlab/grassmann.hpp"

namespace cartanlab {

/// Generator layout inside the Grassmann bitmask: bit 0 the Weyl ghost
/// epsilon, bits 1..6 the sl(2,C) ghost on the basis
/// {sigma_1, sigma_2, sigma_3, i sigma_1, i sigma_2, i sigma_3}, bits 7..10
/// the boost ghost on the covector components rho_a.
constexpr std::uint16_t kMaskEps = 1u << 0;
constexpr std::uint16_t kMaskS = 0x7Eu;    // bits 1..6
constexpr std::uint16_t kMaskRho = 0x780u; // bits 7..10

const std::array<Mat2c, 6>& sl2_ghost_basis();

/// Ghost coefficient fields; real-valued chart functions.
struct GhostField {
  ScalarField eps;
  std::array<ScalarField, 6> s;
  std::array<ScalarField, 4> rho;
  bool has_eps = false, has_s = false, has_rho = false;
};

/// The ghost evaluated at a point: v = v_eps + v_s + v_rho with
/// v_eps = diag(eps/2, -eps/2), v_s = diag(-s*, s), v_rho = [[0,-i rho],[0,0]].
struct GhostEval {
  Point x;
  int order;
  GrassmannElement vbar;  // 4x4, ghost degree 1
  GrassmannElement v_eps, v_s, v_rho;
  Jet eps;                 // generator-0 coefficient
  std::array<Jet, 6> s;    // generator-1..6 coefficients
  std::array<Jet, 4> rho;  // generator-7..10 coefficients
  bool has_eps, has_s, has_rho;
};

GhostEval eval_ghost(const GhostField& g, const Point& p, int order);

/// Defining BRST relations.
GrassmannElement brst_connection(const MatrixForm& varpi, const GrassmannElement& vbar);
GrassmannElement brst_curvature(const MatrixForm& omega, const GrassmannElement& vbar);
GrassmannElement brst_section(const MatrixForm& psi, const GrassmannElement& vbar);
GrassmannElement brst_ghost(const GrassmannElement& vbar);  // -v^2

/// s^2 residuals obtained by expanding s twice through the defining relations.
double brst_nilpotency_connection(const MatrixForm& varpi, const GrassmannElement& v);
double brst_nilpotency_curvature(const MatrixForm& omega, const GrassmannElement& v);
double brst_nilpotency_section(const MatrixForm& psi, const GrassmannElement& v);
double brst_nilpotency_ghost(const GrassmannElement& v);

/// (d+s)(varpi + v) + (varpi + v)^2 - Omega
double russian_formula_residual(const MatrixForm& varpi, const MatrixForm& omega,
                                const GrassmannElement& v);
/// s Omega - s(d varpi + varpi^2) consistency
double brst_bianchi_residual(const MatrixForm& varpi, const MatrixForm& omega,
                             const GrassmannElement& v);

/// Dressed ghost v_1 = u^-1 v u + u^-1 s u with the boost sector removed.
struct DressedGhost {
  GrassmannElement generic;  // conjugation route
  GrassmannElement closed;   // [[-(s* - eps/2), -i d-eps],[0, s - eps/2]]
  MatrixForm depsbar;        // Herm form of the frame gradient of eps
  double residual;           // generic vs closed
  double rho_dependence;     // mass on masks touching the rho generators
};

DressedGhost dressed_ghost(const GhostEval& v, const DressingField& u,
                           const MatrixForm& einv);

/// Finite-vs-infinitesimal consistency of the residual Weyl action:
/// compares (varpi_1^{C(1+t*eps)} - varpi_1)/t with the epsilon coefficient
/// of s varpi_1. Returns the max residual (expected O(t)).
double weyl_linearization_residual(const SpinConnection& conn1,
                                   const ScalarField& epshat, double t);
/// Same for the residual Lorentz action with S = exp(t s-hat).
double lorentz_linearization_residual(const SpinConnection& conn1,
                                      const std::array<ScalarField, 6>& shat,
                                      double t);

}  // namespace cartanlab

#endif
