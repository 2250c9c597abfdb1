#ifndef CARTANLAB_FORM_HPP
#define CARTANLAB_FORM_HPP

#include <vector>

#include "cartanlab/jet.hpp"

namespace cartanlab {

/// Number of independent components of a p-form in 4 dimensions.
int form_dim(int degree);

/// Increasing index tuples for each degree, e.g. degree 2: 01,02,03,12,13,23.
const std::vector<std::vector<int>>& form_basis(int degree);

/// Position of a sorted increasing tuple in form_basis(degree).
int form_component_index(int degree, const std::vector<int>& idx);

/// Merge two increasing tuples; returns 0 on repeated index, else the
/// permutation sign, writing the sorted union into out.
int merge_indices(const std::vector<int>& a, const std::vector<int>& b,
                  std::vector<int>& out);

/// Antisymmetric p-form with jet coefficients in the coordinate coframe.
class Form {
public:
  Form() : degree_(0) { comp_.push_back(Jet()); }
  Form(int degree, int order, const Point& base);

  static Form zero(int degree, int order, const Point& base);
  static Form from_jet(const Jet& j) {
    Form f;
    f.comp_[0] = j;
    return f;
  }
  /// the coordinate 1-form dx^mu
  static Form dx(int mu, int order, const Point& base);

  int degree() const { return degree_; }
  int order() const { return comp_[0].order(); }
  const Point& base() const { return comp_[0].base(); }

  const Jet& component(int i) const { return comp_[i]; }
  Jet& component(int i) { return comp_[i]; }
  int n_components() const { return static_cast<int>(comp_.size()); }

  Form operator-() const;
  Form operator+(const Form& o) const;
  Form operator-(const Form& o) const;
  Form operator*(cplx s) const;
  Form operator*(const Jet& s) const;  // scalar 0-form coefficient
  Form& operator+=(const Form& o) { return *this = *this + o; }
  Form& operator-=(const Form& o) { return *this = *this - o; }

  Form conj() const;
  Form truncated(int new_order) const;

  double max_abs() const;    // sup over components and jet coefficients
  double max_value() const;  // sup over component values at the base point

  friend Form operator*(cplx s, const Form& f) { return f * s; }
  friend Form operator*(const Jet& s, const Form& f) { return f * s; }

private:
  int degree_;
  std::vector<Jet> comp_;
};

/// de Rham differential; errors on top degree.
Form ext_d(const Form& a);

/// Graded wedge product.
Form wedge(const Form& a, const Form& b);

}  // namespace cartanlab

#endif
