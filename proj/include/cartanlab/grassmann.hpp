#ifndef CARTANLAB_GRASSMANN_HPP
#define CARTANLAB_GRASSMANN_HPP

#include <cstdint>
#include <map>

#include "cartanlab/matrix_form.hpp"

namespace cartanlab {

/// Maximum ghost degree carried by any term; products overflowing this
/// throw.
constexpr int kGhostCap = 3;

/// Element of the bigraded algebra: a sum of terms theta_S * c_S where
/// theta_S is the ordered product of anticommuting generators in the bitmask
/// S and c_S is a matrix of forms. Generators anticommute among themselves
/// and with odd-degree forms (Koszul sign on the total degree).
class GrassmannElement {
public:
  GrassmannElement() = default;

  static GrassmannElement from_matrix(const MatrixForm& m);  // mask 0
  static GrassmannElement term(std::uint16_t mask, const MatrixForm& coeff);

  GrassmannElement operator-() const;
  GrassmannElement operator+(const GrassmannElement& o) const;
  GrassmannElement operator-(const GrassmannElement& o) const;
  GrassmannElement operator*(const GrassmannElement& o) const;
  GrassmannElement operator*(cplx s) const;
  GrassmannElement& operator+=(const GrassmannElement& o) { return *this = *this + o; }
  GrassmannElement& operator-=(const GrassmannElement& o) { return *this = *this - o; }

  bool empty() const { return terms_.empty(); }
  const std::map<std::uint16_t, MatrixForm>& terms() const { return terms_; }
  /// coefficient of a mask, or nullptr when absent
  const MatrixForm* coeff(std::uint16_t mask) const;

  /// common total degree (form + ghost) of all terms; throws when mixed
  int total_degree() const;
  int max_ghost_degree() const;
  double max_abs() const;

  friend GrassmannElement operator*(cplx s, const GrassmannElement& g) { return g * s; }

private:
  std::map<std::uint16_t, MatrixForm> terms_;  // bitmask -> coefficient
  void add_term(std::uint16_t mask, const MatrixForm& coeff);
  friend GrassmannElement ext_d(const GrassmannElement& g);
};

/// sign of interleaving theta_S theta_T -> theta_{S union T}; 0 on overlap
int interleave_sign(std::uint16_t s, std::uint16_t t);

/// termwise de Rham differential, d(theta_S c) = (-1)^{|S|} theta_S dc
GrassmannElement ext_d(const GrassmannElement& g);

/// bigraded commutator [a,b] = ab - (-1)^{deg a deg b} ba on total degrees;
/// requires both arguments homogeneous
GrassmannElement graded_comm(const GrassmannElement& a, const GrassmannElement& b);

}  // namespace cartanlab

#endif
