#ifndef CARTANLAB_SPIN_ISO_HPP
#define CARTANLAB_SPIN_ISO_HPP

#include <Eigen/Dense>
#include <array>
#include <complex>

namespace cartanlab {

using Vec4 = Eigen::Vector4d;
using Covec4 = Eigen::RowVector4d;
using Mat2c = Eigen::Matrix2cd;
using Mat4c = Eigen::Matrix4cd;
using Mat4d = Eigen::Matrix4d;
using Mat6d = Eigen::Matrix<double, 6, 6>;

/// eta = diag(1,-1,-1,-1)
const Mat4d& minkowski_eta();
/// Sigma = [[0,0,-1],[0,eta,0],[-1,0,0]], the so(2,4) group metric
const Mat6d& conf_sigma();
/// Sigma-bar = [[0,1],[1,0]] in 2x2 blocks, the su(2,2) group metric
const Mat4c& spin_sigma();

/// sigma basis with the overall 1/2 in the map: vec_to_herm(e_a) = sigma_a/2
const std::array<Mat2c, 4>& sigma_basis();

/// x^a -> (1/2)[[x0+x3, x1-ix2],[x1+ix2, x0-x3]]
Mat2c vec_to_herm(const Vec4& x);
Vec4 herm_to_vec(const Mat2c& m);

/// eta-transpose of a vector: r = x^t = (eta x)^T
Covec4 eta_transpose(const Vec4& x);
/// row covector r = x^t -> (1/2)[[x0-x3, -x1+ix2],[-x1-ix2, x0+x3]]
Mat2c covec_to_herm(const Covec4& r);
Covec4 herm_to_covec(const Mat2c& m);

/// Lorentz transformation represented by an SL(2,C) element via x-bar -> S x-bar S*
Mat4d lorentz_of_sl2(const Mat2c& S);
/// one of the two SL(2,C) preimages; sign chosen by the positive-trace rule
Mat2c sl2_of_lorentz(const Mat4d& L);

/// so(1,3) action represented in sl(2,C): s-bar x-bar + x-bar s-bar* = (s x)-bar
Mat2c sl2_of_so13(const Mat4d& s);
Mat4d so13_of_sl2(const Mat2c& sb);

/// membership tests
double so13_residual(const Mat4d& s);       // s^T eta + eta s
double so24_residual(const Mat6d& m);       // m^T Sigma + Sigma m
double su22_residual(const Mat4c& m);       // m* Sigma-bar + Sigma-bar m, and trace
double lorentz_group_residual(const Mat4d& L);  // L^T eta L - eta

/// so(2,4) element in the graded block presentation
struct ConfAlgebraElement {
  double eps = 0;
  Mat4d s = Mat4d::Zero();   // so(1,3) block
  Vec4 tau = Vec4::Zero();
  Covec4 rho = Covec4::Zero();

  Mat6d matrix() const;
};

/// su(2,2) element in the graded block presentation
struct SpinAlgebraElement {
  double eps = 0;
  Mat2c sbar = Mat2c::Zero();   // sl(2,C)
  Mat2c taubar = Mat2c::Zero(); // hermitian
  Mat2c rhobar = Mat2c::Zero(); // hermitian

  Mat4c matrix() const;
  static SpinAlgebraElement from_matrix(const Mat4c& m);
};

/// the Lie algebra morphism so(2,4) -> su(2,2)
SpinAlgebraElement algebra_morphism(const ConfAlgebraElement& xi);

/// structure group element in the factorized presentation H = K0 K1
struct StructureGroupElement {
  double z = 1;
  Mat4d S = Mat4d::Identity();
  Covec4 r = Covec4::Zero();

  Eigen::Matrix<double, 6, 6> matrix() const;
};

/// spin structure group element, H-bar = K0-bar K1-bar
struct SpinStructureGroupElement {
  double z = 1;
  Mat2c Sbar = Mat2c::Identity();
  Mat2c rbar = Mat2c::Zero();

  Mat4c k0() const;
  Mat4c k1() const;
  Mat4c matrix() const { return k0() * k1(); }
};

/// group morphism H -> H-bar (sign fixed by the positive-trace rule on k0)
SpinStructureGroupElement group_morphism(const StructureGroupElement& h);

}  // namespace cartanlab

#endif
