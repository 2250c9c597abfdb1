#ifndef CARTANLAB_JET_HPP
#define CARTANLAB_JET_HPP

#include <array>
#include <complex>
#include <stdexcept>
#include <vector>

namespace cartanlab {

using cplx = std::complex<double>;
using Point = std::array<double, 4>;

/// Multi-index over the 4 chart coordinates.
using MultiIndex = std::array<int, 4>;

/// Enumeration tables for multi-indices of total degree <= order,
/// shared by all jets of a given order.
struct MultiIndexTable {
  int order;
  std::vector<MultiIndex> indices;   // graded-lex order
  std::vector<int> rank_of_packed;   // packed index -> rank, -1 if absent

  static const MultiIndexTable& get(int order);
  int rank(const MultiIndex& a) const;
  static int pack(const MultiIndex& a);
  std::size_t size() const { return indices.size(); }
};

/// Truncated multivariate Taylor expansion of a complex scalar at a chart
/// point: coeffs[rank(alpha)] = d^alpha f / alpha! evaluated at base.
class Jet {
public:
  Jet() : order_(0), base_{0, 0, 0, 0}, c_(1, cplx(0)) {}
  Jet(int order, const Point& base);

  static Jet constant(cplx v, int order, const Point& base);
  static Jet coordinate(int mu, int order, const Point& base);

  int order() const { return order_; }
  const Point& base() const { return base_; }

  cplx coeff(const MultiIndex& a) const;
  cplx& coeff_ref(const MultiIndex& a);
  cplx value() const { return c_[0]; }
  const std::vector<cplx>& coeffs() const { return c_; }

  Jet truncated(int new_order) const;

  Jet operator-() const;
  Jet operator+(const Jet& o) const;
  Jet operator-(const Jet& o) const;
  Jet operator*(const Jet& o) const;
  Jet operator/(const Jet& o) const;
  Jet& operator+=(const Jet& o) { return *this = *this + o; }
  Jet& operator-=(const Jet& o) { return *this = *this - o; }

  Jet operator+(cplx s) const;
  Jet operator-(cplx s) const;
  Jet operator*(cplx s) const;
  Jet operator/(cplx s) const { return *this * (cplx(1) / s); }

  Jet conj() const;
  Jet reciprocal() const;
  Jet pow_int(int n) const;

  /// sup-norm over all stored Taylor coefficients
  double max_abs() const;

  friend Jet operator*(cplx s, const Jet& j) { return j * s; }
  friend Jet operator+(cplx s, const Jet& j) { return j + s; }
  friend Jet operator-(cplx s, const Jet& j) { return (-j) + s; }

private:
  int order_;
  Point base_;
  std::vector<cplx> c_;

  void check_compatible(const Jet& o) const;
  friend Jet compose_series(const Jet& j, const std::vector<cplx>& d);
};

/// d/dx^mu at the jet level; drops one order.
Jet jet_partial(const Jet& j, int mu);

/// Composition with a univariate analytic function given by its Taylor
/// coefficients d[k] = f^(k)(c0)/k! at the jet's constant term.
Jet compose_series(const Jet& j, const std::vector<cplx>& d);

Jet jet_exp(const Jet& j);
Jet jet_log(const Jet& j);   // principal branch; real arguments must be positive
Jet jet_sqrt(const Jet& j);  // positive real branch
Jet jet_sin(const Jet& j);
Jet jet_cos(const Jet& j);

}  // namespace cartanlab

#endif
