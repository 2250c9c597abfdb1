#ifndef CARTANLAB_VIERBEIN_HPP
#define CARTANLAB_VIERBEIN_HPP

#include <array>

#include "cartanlab/matrix_form.hpp"
#include "cartanlab/scalar_field.hpp"
#include "cartanlab/spin_iso.hpp"

namespace cartanlab {

/// Vierbein data evaluated at one chart point.
struct VierbeinEval {
  Point x;
  int order;
  MatrixForm e;         // 4x4 jets, e^a_mu
  MatrixForm einv;      // 4x4 jets, e^mu_a
  MatrixForm theta;     // 4x1 vector-valued 1-form, theta^a = e^a_mu dx^mu
  MatrixForm theta_bar; // 2x2 hermitian-valued 1-form
  MatrixForm g;         // 4x4 jets, g = e^T eta e

  /// frame components of a scalar 2-form: F_ab with F = (1/2) F_ab theta^a theta^b
  std::array<std::array<Jet, 4>, 4> frame_components_2form(const Form& f) const;
  /// rebuild a coordinate 2-form from antisymmetric frame components
  Form form_from_frame_2form(const std::array<std::array<Jet, 4>, 4>& F) const;
  /// frame components of a 1-form: f = f_a theta^a
  std::array<Jet, 4> frame_components_1form(const Form& f) const;
};

/// e^a_mu as scalar fields; row-major storage e[a*4+mu].
struct Vierbein {
  std::array<ScalarField, 16> entries;

  static Vierbein identity();
  /// conformally rescaled vierbein z*e
  Vierbein scaled(const ScalarField& z) const;

  VierbeinEval eval(const Point& p, int order) const;
};

/// Hodge star of a scalar 2-form in the metric of e; errors on a degenerate
/// frame. Convention: *(theta^a ^ theta^b) = (1/2) eps^{ab}_{cd} theta^c ^ theta^d,
/// eps_0123 = +1, indices raised with eta.
Form hodge_star(const Form& alpha, const VierbeinEval& e);
/// entrywise star of a matrix of 2-forms
MatrixForm hodge_star(const MatrixForm& alpha, const VierbeinEval& e);

}  // namespace cartanlab

#endif
