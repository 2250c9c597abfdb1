#ifndef CARTANLAB_CARTAN_HPP
#define CARTANLAB_CARTAN_HPP

#include "cartanlab/vierbein.hpp"

namespace cartanlab {

/// conversions between vector/covector-valued forms and Herm(2,C)-valued ones
MatrixForm herm_of_vec_form(const MatrixForm& v);      // 4x1 -> 2x2, half-sigma map
MatrixForm vec_of_herm_form(const MatrixForm& m);      // 2x2 -> 4x1, x^a = tr(sigma_a m)
MatrixForm herm_of_covec_jets(const std::array<Jet, 4>& r, int order, const Point& base);
std::array<Form, 4> covec_of_herm_form(const MatrixForm& m);
/// rebuild full frame data (inverse, soldering forms, metric) from vierbein jets
VierbeinEval eval_of_e(const MatrixForm& e);

/// Spin conformal Cartan connection evaluated at a chart point, stored
/// blockwise: varpi = [[-(A* - a/2), -iP],[i theta, A - a/2]] with A traceless
/// and the scalar a carrying the gl(2) trace.
struct SpinConnection {
  Form a;            // real scalar 1-form
  MatrixForm Abar;   // 2x2 sl(2,C)-valued 1-form
  MatrixForm Pbar;   // 2x2 hermitian-valued 1-form
  MatrixForm thbar;  // 2x2 hermitian-valued 1-form (soldering)
  MatrixForm e;      // 4x4 jets of the vierbein inducing thbar
  MatrixForm einv;

  MatrixForm assembled() const;  // the 4x4 1-form matrix
  /// extract blocks from a 4x4 1-form matrix; the vierbein is read off the
  /// soldering block
  static SpinConnection from_matrix(const MatrixForm& m);
  /// su(2,2)-valuedness residual: m* Sigma-bar + Sigma-bar m
  double algebra_residual() const;
  VierbeinEval frame_eval() const;
};

struct SpinCurvature {
  MatrixForm omega;     // full 4x4 2-form
  Form f;               // scalar 2-form
  MatrixForm Wbar;      // sl(2,C)-valued 2-form
  MatrixForm Cbar;      // hermitian-valued 2-form
  MatrixForm Thetabar;  // torsion block

  static SpinCurvature from_matrix(const MatrixForm& m);
};

/// Omega = d varpi + varpi^2
SpinCurvature curvature(const SpinConnection& conn);

/// Gauge parameter fields (z, Sbar, r); any may be trivial.
struct SpinGaugeField {
  ScalarField z;                       // positive; default constant 1
  std::array<ScalarField, 8> Sbar;     // 2x2 complex entries, (re, im) packed:
                                       // entry (i,j) = Sbar[2*(2i+j)] + i*Sbar[2*(2i+j)+1]
  std::array<ScalarField, 4> r;        // covector components r_a
  bool has_z = false, has_S = false, has_r = false;

  static SpinGaugeField weyl(const ScalarField& z);
  static SpinGaugeField lorentz(const std::array<ScalarField, 8>& Sbar);
  /// Sbar = exp(M) for M an sl(2,C)-valued field given by 6 real coefficient
  /// fields on the basis {sigma_k, i sigma_k}
  static SpinGaugeField lorentz_exp(const std::array<ScalarField, 6>& coeffs);
  static SpinGaugeField boost(const std::array<ScalarField, 4>& r);
};

/// one gauge field evaluated at a point: the 4x4 matrix gamma = k0 k1 plus pieces
struct GaugeEval {
  MatrixForm gamma;   // 4x4 0-form
  Jet z;
  MatrixForm Sbar;    // 2x2 0-form
  MatrixForm rbar;    // 2x2 0-form
  bool has_z, has_S, has_r;
};

GaugeEval eval_gauge(const SpinGaugeField& g, const Point& p, int order);

/// generic finite gauge transformation gamma^-1 varpi gamma + gamma^-1 d gamma
SpinConnection gauge_transform(const SpinConnection& conn, const GaugeEval& g);
/// action on curvature / sections
MatrixForm gauge_transform_curvature(const MatrixForm& omega, const GaugeEval& g);
MatrixForm gauge_transform_section(const MatrixForm& psi, const GaugeEval& g);

/// closed-form blocks of the K0-bar transformation law
SpinConnection gauge_transform_k0_closed(const SpinConnection& conn, const GaugeEval& g);
/// closed-form blocks of the K1-bar transformation law
SpinConnection gauge_transform_k1_closed(const SpinConnection& conn, const GaugeEval& g);

/// Frame data for the Levi-Civita solve, shared with the metric oracle.
struct LeviCivitaFrame {
  MatrixForm A;      // 4x4 so(1,3)-valued 1-form, d theta + A ^ theta = 0
  MatrixForm Abar;   // its sl(2,C) lift
};
LeviCivitaFrame levi_civita_connection(const VierbeinEval& ev);

/// lift an so(1,3)-valued form to sl(2,C) entrywise in the frame basis
MatrixForm spin_lift(const MatrixForm& A);
/// inverse of spin_lift on sl(2,C)-valued forms
MatrixForm spin_unlift(const MatrixForm& Abar);

/// the dressed/normal representative (a = 0, torsion free, Ricci-trace-free
/// Weyl block, symmetric Schouten block)
SpinConnection normal_connection(const VierbeinEval& ev);

/// Schouten tensor in frame indices computed from the frame curvature
/// R = dA + A^2 of the Levi-Civita connection.
Eigen::Matrix4d schouten_from_frame(const VierbeinEval& ev, const LeviCivitaFrame& lc,
                                    std::array<std::array<Jet, 4>, 4>* out_jets = nullptr);

/// Cotton and Weyl blocks of a normal connection; errors when the input
/// carries torsion beyond tolerance.
struct CottonWeyl {
  MatrixForm Cbar;  // hermitian 2-form
  MatrixForm Wbar;  // sl(2,C) 2-form
};
CottonWeyl cotton_and_weyl(const SpinConnection& normal_conn);

/// Ricci contraction residual of the Weyl block in the vector representation
double weyl_ricci_trace_residual(const SpinConnection& normal_conn,
                                 const SpinCurvature& curv);

}  // namespace cartanlab

#endif
