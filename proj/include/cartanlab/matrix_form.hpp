#ifndef CARTANLAB_MATRIX_FORM_HPP
#define CARTANLAB_MATRIX_FORM_HPP

#include <Eigen/Dense>

#include "cartanlab/form.hpp"

namespace cartanlab {

/// Matrix of forms of equal degree; the block substrate for Cartan
/// connections, curvatures, gauge elements and ghosts.
class MatrixForm {
public:
  MatrixForm() : rows_(0), cols_(0), degree_(0) {}
  MatrixForm(int rows, int cols, int degree, int order, const Point& base);

  static MatrixForm zero(int rows, int cols, int degree, int order, const Point& base);
  static MatrixForm identity(int n, int order, const Point& base);
  /// constant numeric matrix as a 0-form matrix
  static MatrixForm from_constant(const Eigen::MatrixXcd& m, int order, const Point& base);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int degree() const { return degree_; }
  int order() const { return entries_[0].order(); }
  const Point& base() const { return entries_[0].base(); }

  const Form& at(int r, int c) const { return entries_[r * cols_ + c]; }
  Form& at(int r, int c) { return entries_[r * cols_ + c]; }

  MatrixForm operator-() const;
  MatrixForm operator+(const MatrixForm& o) const;
  MatrixForm operator-(const MatrixForm& o) const;
  MatrixForm operator*(const MatrixForm& o) const;  // matrix-wedge product
  MatrixForm operator*(cplx s) const;
  MatrixForm operator*(const Jet& s) const;
  MatrixForm operator*(const Form& s) const;  // scalar form times matrix
  MatrixForm& operator+=(const MatrixForm& o) { return *this = *this + o; }
  MatrixForm& operator-=(const MatrixForm& o) { return *this = *this - o; }

  MatrixForm adjoint() const;    // entrywise conjugate transpose
  MatrixForm transpose() const;
  MatrixForm conj() const;
  Form trace() const;
  /// trace-free part X - tr(X)/n
  MatrixForm traceless() const;

  MatrixForm block(int r0, int c0, int nr, int nc) const;
  void set_block(int r0, int c0, const MatrixForm& b);

  /// inverse of a degree-0 matrix of jets (Gauss-Jordan with pivoting)
  MatrixForm inverse() const;

  /// matrix of the constant jet terms
  Eigen::MatrixXcd value() const;

  double max_abs() const;
  double max_value() const;

  friend MatrixForm operator*(cplx s, const MatrixForm& m) { return m * s; }
  friend MatrixForm operator*(const Form& s, const MatrixForm& m);

private:
  int rows_, cols_, degree_;
  std::vector<Form> entries_;
};

/// entrywise de Rham differential
MatrixForm ext_d(const MatrixForm& m);

/// graded commutator [A,B] = AB - (-1)^{pq} BA on form degrees
MatrixForm graded_comm(const MatrixForm& a, const MatrixForm& b);

}  // namespace cartanlab

#endif
