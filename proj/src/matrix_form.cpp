#include "cartanlab/matrix_form.hpp"

#include <cmath>

namespace cartanlab {

MatrixForm::MatrixForm(int rows, int cols, int degree, int order, const Point& base)
    : rows_(rows), cols_(cols), degree_(degree) {
  entries_.assign(static_cast<std::size_t>(rows) * cols, Form(degree, order, base));
}

MatrixForm MatrixForm::zero(int rows, int cols, int degree, int order, const Point& base) {
  return MatrixForm(rows, cols, degree, order, base);
}

MatrixForm MatrixForm::identity(int n, int order, const Point& base) {
  MatrixForm m(n, n, 0, order, base);
  for (int i = 0; i < n; ++i)
    m.at(i, i) = Form::from_jet(Jet::constant(1.0, order, base));
  return m;
}

MatrixForm MatrixForm::from_constant(const Eigen::MatrixXcd& c, int order, const Point& base) {
  MatrixForm m(static_cast<int>(c.rows()), static_cast<int>(c.cols()), 0, order, base);
  for (int r = 0; r < m.rows_; ++r)
    for (int j = 0; j < m.cols_; ++j)
      m.at(r, j) = Form::from_jet(Jet::constant(c(r, j), order, base));
  return m;
}

MatrixForm MatrixForm::operator-() const {
  MatrixForm r = *this;
  for (auto& e : r.entries_) e = -e;
  return r;
}

MatrixForm MatrixForm::operator+(const MatrixForm& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || degree_ != o.degree_)
    throw std::invalid_argument("matrix form shape mismatch in +");
  MatrixForm r = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] + o.entries_[i];
  return r;
}

MatrixForm MatrixForm::operator-(const MatrixForm& o) const { return *this + (-o); }

MatrixForm MatrixForm::operator*(const MatrixForm& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix form dimension mismatch");
  int order = std::min(this->order(), o.order());
  MatrixForm r(rows_, o.cols_, degree_ + o.degree_, order, base());
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < o.cols_; ++j)
      for (int k = 0; k < cols_; ++k)
        r.at(i, j) += wedge(at(i, k), o.at(k, j));
  return r;
}

MatrixForm MatrixForm::operator*(cplx s) const {
  MatrixForm r = *this;
  for (auto& e : r.entries_) e = e * s;
  return r;
}

MatrixForm MatrixForm::operator*(const Jet& s) const {
  MatrixForm r = *this;
  for (auto& e : r.entries_) e = e * s;
  return r;
}

MatrixForm MatrixForm::operator*(const Form& s) const {
  MatrixForm r(rows_, cols_, degree_ + s.degree(), std::min(order(), s.order()), base());
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = wedge(at(i, j), s);
  return r;
}

MatrixForm operator*(const Form& s, const MatrixForm& m) {
  MatrixForm r(m.rows(), m.cols(), m.degree() + s.degree(),
               std::min(m.order(), s.order()), m.base());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = wedge(s, m.at(i, j));
  return r;
}

MatrixForm MatrixForm::adjoint() const {
  MatrixForm r(cols_, rows_, degree_, order(), base());
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).conj();
  return r;
}

MatrixForm MatrixForm::transpose() const {
  MatrixForm r(cols_, rows_, degree_, order(), base());
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

MatrixForm MatrixForm::conj() const {
  MatrixForm r = *this;
  for (auto& e : r.entries_) e = e.conj();
  return r;
}

Form MatrixForm::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix form");
  Form t = at(0, 0);
  for (int i = 1; i < rows_; ++i) t += at(i, i);
  return t;
}

MatrixForm MatrixForm::traceless() const {
  Form t = trace() * (cplx(1.0 / rows_));
  MatrixForm r = *this;
  for (int i = 0; i < rows_; ++i) r.at(i, i) -= t;
  return r;
}

MatrixForm MatrixForm::block(int r0, int c0, int nr, int nc) const {
  MatrixForm r(nr, nc, degree_, order(), base());
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) r.at(i, j) = at(r0 + i, c0 + j);
  return r;
}

void MatrixForm::set_block(int r0, int c0, const MatrixForm& b) {
  if (b.degree_ != degree_) throw std::invalid_argument("set_block degree mismatch");
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) at(r0 + i, c0 + j) = b.at(i, j).truncated(std::min(order(), b.order()));
}

MatrixForm MatrixForm::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  if (degree_ != 0) throw std::invalid_argument("inverse requires a 0-form matrix");
  int n = rows_;
  // Gauss-Jordan on jets, pivoting on constant-term magnitude
  std::vector<Jet> a(static_cast<std::size_t>(n) * n), inv(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      a[i * n + j] = at(i, j).component(0);
      inv[i * n + j] = Jet::constant(i == j ? 1.0 : 0.0, order(), base());
    }
  std::vector<int> rowperm(n);
  for (int i = 0; i < n; ++i) rowperm[i] = i;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    double best = std::abs(a[rowperm[col] * n + col].value());
    for (int r = col + 1; r < n; ++r) {
      double v = std::abs(a[rowperm[r] * n + col].value());
      if (v > best) { best = v; piv = r; }
    }
    if (best < 1e-300) throw std::domain_error("singular matrix in jet inverse");
    std::swap(rowperm[col], rowperm[piv]);
    int rp = rowperm[col];
    Jet d = a[rp * n + col].reciprocal();
    for (int j = 0; j < n; ++j) {
      a[rp * n + j] = a[rp * n + j] * d;
      inv[rp * n + j] = inv[rp * n + j] * d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      int rr = rowperm[r];
      Jet f = a[rr * n + col];
      if (f.max_abs() == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        a[rr * n + j] = a[rr * n + j] - f * a[rp * n + j];
        inv[rr * n + j] = inv[rr * n + j] - f * inv[rp * n + j];
      }
    }
  }
  MatrixForm r(n, n, 0, order(), base());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = Form::from_jet(inv[rowperm[i] * n + j]);
  return r;
}

Eigen::MatrixXcd MatrixForm::value() const {
  if (degree_ != 0) throw std::invalid_argument("value() requires a 0-form matrix");
  Eigen::MatrixXcd m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(i, j) = at(i, j).component(0).value();
  return m;
}

double MatrixForm::max_abs() const {
  double m = 0;
  for (const auto& e : entries_) m = std::max(m, e.max_abs());
  return m;
}

double MatrixForm::max_value() const {
  double m = 0;
  for (const auto& e : entries_) m = std::max(m, e.max_value());
  return m;
}

MatrixForm ext_d(const MatrixForm& m) {
  MatrixForm r(m.rows(), m.cols(), m.degree() + 1, m.order() - 1, m.base());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = ext_d(m.at(i, j));
  return r;
}

MatrixForm graded_comm(const MatrixForm& a, const MatrixForm& b) {
  MatrixForm ab = a * b;
  MatrixForm ba = b * a;
  int sign = ((a.degree() * b.degree()) % 2 == 0) ? 1 : -1;
  return (sign > 0) ? ab - ba : ab + ba;
}

}  // namespace cartanlab
