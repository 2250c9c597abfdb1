#include "cartanlab/spin_iso.hpp"

#include <stdexcept>

namespace cartanlab {

namespace {
const std::complex<double> I(0, 1);
}

const Mat4d& minkowski_eta() {
  static const Mat4d eta = [] {
    Mat4d m = Mat4d::Zero();
    m.diagonal() << 1, -1, -1, -1;
    return m;
  }();
  return eta;
}

const Mat6d& conf_sigma() {
  static const Mat6d s = [] {
    Mat6d m = Mat6d::Zero();
    m(0, 5) = -1;
    m(5, 0) = -1;
    m.block<4, 4>(1, 1) = minkowski_eta();
    return m;
  }();
  return s;
}

const Mat4c& spin_sigma() {
  static const Mat4c s = [] {
    Mat4c m = Mat4c::Zero();
    m.block<2, 2>(0, 2) = Mat2c::Identity();
    m.block<2, 2>(2, 0) = Mat2c::Identity();
    return m;
  }();
  return s;
}

const std::array<Mat2c, 4>& sigma_basis() {
  static const std::array<Mat2c, 4> basis = [] {
    std::array<Mat2c, 4> b;
    b[0] << 1, 0, 0, 1;
    b[1] << 0, 1, 1, 0;
    b[2] << 0, -I, I, 0;
    b[3] << 1, 0, 0, -1;
    return b;
  }();
  return basis;
}

Mat2c vec_to_herm(const Vec4& x) {
  Mat2c m = Mat2c::Zero();
  const auto& s = sigma_basis();
  for (int a = 0; a < 4; ++a) m += 0.5 * x[a] * s[a];
  return m;
}

Vec4 herm_to_vec(const Mat2c& m) {
  // inverse of vec_to_herm: x^a = tr(sigma_a m)
  Vec4 x;
  const auto& s = sigma_basis();
  for (int a = 0; a < 4; ++a) x[a] = (s[a] * m).trace().real();
  return x;
}

Covec4 eta_transpose(const Vec4& x) { return (minkowski_eta() * x).transpose(); }

Mat2c covec_to_herm(const Covec4& r) {
  // r = x^t; r-bar = x^0 sigma_0 - x^i sigma_i.  No 1/2 here: the bracket
  // [i tau-bar, -i rho-bar] must close onto tr(tau-bar rho-bar) = rho tau,
  // which pins the covector map to twice the vector one.
  Vec4 x = minkowski_eta().inverse() * r.transpose();
  const auto& s = sigma_basis();
  Mat2c m = x[0] * s[0];
  for (int i = 1; i < 4; ++i) m -= x[i] * s[i];
  return m;
}

Covec4 herm_to_covec(const Mat2c& m) {
  const auto& s = sigma_basis();
  Vec4 x;
  x[0] = 0.5 * (s[0] * m).trace().real();
  for (int i = 1; i < 4; ++i) x[i] = -0.5 * (s[i] * m).trace().real();
  return eta_transpose(x);
}

Mat4d lorentz_of_sl2(const Mat2c& S) {
  if (std::abs(S.determinant() - 1.0) > 1e-10)
    throw std::invalid_argument("sl2 element must have unit determinant");
  Mat4d L;
  for (int b = 0; b < 4; ++b) {
    Vec4 eb = Vec4::Zero();
    eb[b] = 1;
    Vec4 col = herm_to_vec(S * vec_to_herm(eb) * S.adjoint());
    L.col(b) = col;
  }
  return L;
}

Mat2c sl2_of_lorentz(const Mat4d& L) {
  if (lorentz_group_residual(L) > 1e-8)
    throw std::invalid_argument("input is not a Lorentz transformation");
  // Extend X -> S X S* complex-linearly; factor rank-one images to recover S
  // up to phase, then normalize the determinant.
  auto phi = [&](const Mat2c& X) -> Mat2c {
    // write X = H1 + i H2 with H1, H2 hermitian
    Mat2c H1 = 0.5 * (X + X.adjoint());
    Mat2c H2 = (0.5 / I) * (X - X.adjoint());
    Mat2c R1 = vec_to_herm(L * herm_to_vec(H1));
    Mat2c R2 = vec_to_herm(L * herm_to_vec(H2));
    return R1 + I * R2;
  };
  Mat2c E11 = Mat2c::Zero(), E12 = Mat2c::Zero();
  E11(0, 0) = 1;
  E12(0, 1) = 1;
  Mat2c P = phi(E11);  // = (S e1)(S e1)*
  Eigen::SelfAdjointEigenSolver<Mat2c> es(P);
  int imax = es.eigenvalues()[1] > es.eigenvalues()[0] ? 1 : 0;
  Eigen::Vector2cd c1 = es.eigenvectors().col(imax) * std::sqrt(std::max(0.0, es.eigenvalues()[imax]));
  Mat2c M = phi(E12);  // = (S e1)(S e2)*
  double n1 = c1.squaredNorm();
  if (n1 < 1e-14) throw std::runtime_error("degenerate spin lift");
  Eigen::Vector2cd c2 = (c1.adjoint() * M).adjoint() / n1;
  Mat2c S;
  S.col(0) = c1;
  S.col(1) = c2;
  std::complex<double> det = S.determinant();
  S /= std::sqrt(det);
  return S;
}

Mat2c sl2_of_so13(const Mat4d& s) {
  // solve s-bar x-bar + x-bar s-bar* = (s x)-bar for the 8 real parameters of
  // a traceless 2x2 complex matrix, via least squares over the sigma basis
  static const std::array<Mat2c, 6> sl2basis = [] {
    std::array<Mat2c, 6> b;
    const auto& sg = sigma_basis();
    for (int k = 0; k < 3; ++k) {
      b[k] = sg[k + 1];
      b[k + 3] = I * sg[k + 1];
    }
    return b;
  }();
  Eigen::MatrixXd A(32, 6);
  Eigen::VectorXd rhs(32);
  int row = 0;
  for (int a = 0; a < 4; ++a) {
    Vec4 ea = Vec4::Zero();
    ea[a] = 1;
    Mat2c xb = vec_to_herm(ea);
    Mat2c target = vec_to_herm(s * ea);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        for (int k = 0; k < 6; ++k) {
          Mat2c act = sl2basis[k] * xb + xb * sl2basis[k].adjoint();
          A(row, k) = act(i, j).real();
          A(row + 1, k) = act(i, j).imag();
        }
        rhs(row) = target(i, j).real();
        rhs(row + 1) = target(i, j).imag();
        row += 2;
      }
  }
  Eigen::VectorXd c = A.colPivHouseholderQr().solve(rhs);
  Mat2c sb = Mat2c::Zero();
  for (int k = 0; k < 6; ++k) sb += c[k] * sl2basis[k];
  return sb;
}

Mat4d so13_of_sl2(const Mat2c& sb) {
  Mat4d s;
  for (int b = 0; b < 4; ++b) {
    Vec4 eb = Vec4::Zero();
    eb[b] = 1;
    Mat2c xb = vec_to_herm(eb);
    s.col(b) = herm_to_vec(sb * xb + xb * sb.adjoint());
  }
  return s;
}

double so13_residual(const Mat4d& s) {
  return (s.transpose() * minkowski_eta() + minkowski_eta() * s).cwiseAbs().maxCoeff();
}

double so24_residual(const Mat6d& m) {
  return (m.transpose() * conf_sigma() + conf_sigma() * m).cwiseAbs().maxCoeff();
}

double su22_residual(const Mat4c& m) {
  double r = (m.adjoint() * spin_sigma() + spin_sigma() * m).cwiseAbs().maxCoeff();
  return std::max(r, std::abs(m.trace()));
}

double lorentz_group_residual(const Mat4d& L) {
  return (L.transpose() * minkowski_eta() * L - minkowski_eta()).cwiseAbs().maxCoeff();
}

Mat6d ConfAlgebraElement::matrix() const {
  Mat6d m = Mat6d::Zero();
  m(0, 0) = eps;
  m(5, 5) = -eps;
  m.block<4, 4>(1, 1) = s;
  m.block<4, 1>(1, 0) = tau;
  m.block<1, 4>(0, 1) = rho;
  m.block<4, 1>(1, 5) = (rho * minkowski_eta().inverse()).transpose();  // rho^t
  m.block<1, 4>(5, 1) = (minkowski_eta() * tau).transpose();            // tau^t
  return m;
}

Mat4c SpinAlgebraElement::matrix() const {
  Mat4c m = Mat4c::Zero();
  Mat2c one = Mat2c::Identity();
  m.block<2, 2>(0, 0) = -(sbar.adjoint() - 0.5 * eps * one);
  m.block<2, 2>(0, 2) = -I * rhobar;
  m.block<2, 2>(2, 0) = I * taubar;
  m.block<2, 2>(2, 2) = sbar - 0.5 * eps * one;
  return m;
}

SpinAlgebraElement SpinAlgebraElement::from_matrix(const Mat4c& m) {
  SpinAlgebraElement e;
  Mat2c lr = m.block<2, 2>(2, 2);
  e.eps = -lr.trace().real();
  e.sbar = lr + 0.5 * e.eps * Mat2c::Identity();
  e.taubar = -I * m.block<2, 2>(2, 0);
  e.rhobar = I * m.block<2, 2>(0, 2);
  return e;
}

SpinAlgebraElement algebra_morphism(const ConfAlgebraElement& xi) {
  if (so13_residual(xi.s) > 1e-10)
    throw std::invalid_argument("so(2,4) element: Lorentz block violates invariant");
  SpinAlgebraElement e;
  e.eps = xi.eps;
  e.sbar = sl2_of_so13(xi.s);
  e.taubar = vec_to_herm(xi.tau);
  e.rhobar = covec_to_herm(xi.rho);
  return e;
}

Eigen::Matrix<double, 6, 6> StructureGroupElement::matrix() const {
  Mat6d k0 = Mat6d::Identity();
  k0(0, 0) = z;
  k0(5, 5) = 1.0 / z;
  k0.block<4, 4>(1, 1) = S;
  Mat6d k1 = Mat6d::Identity();
  Vec4 rt = minkowski_eta().inverse() * r.transpose();
  k1.block<1, 4>(0, 1) = r;
  k1(0, 5) = 0.5 * (r * rt)(0, 0);
  k1.block<4, 1>(1, 5) = rt;
  return k0 * k1;
}

Mat4c SpinStructureGroupElement::k0() const {
  Mat4c m = Mat4c::Zero();
  m.block<2, 2>(0, 0) = std::sqrt(z) * Sbar.adjoint().inverse();
  m.block<2, 2>(2, 2) = Sbar / std::sqrt(z);
  return m;
}

Mat4c SpinStructureGroupElement::k1() const {
  Mat4c m = Mat4c::Identity();
  m.block<2, 2>(0, 2) = -I * rbar;
  return m;
}

SpinStructureGroupElement group_morphism(const StructureGroupElement& h) {
  SpinStructureGroupElement e;
  e.z = h.z;
  e.Sbar = sl2_of_lorentz(h.S);
  e.rbar = covec_to_herm(h.r);
  if (e.k0().trace().real() < 0) e.Sbar = -e.Sbar;
  return e;
}

}  // namespace cartanlab
