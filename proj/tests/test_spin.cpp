#include <doctest.h>

#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "cartanlab/spin_iso.hpp"

using namespace cartanlab;

namespace {
std::mt19937 rng(12345);

double rnd() { return -1.0 + 2.0 * static_cast<double>(rng() % 10001u) / 10000.0; }

Vec4 random_vec() { return Vec4(rnd(), rnd(), rnd(), rnd()); }

Mat4d random_so13() {
  Mat4d a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = rnd();
  // antisymmetrize with respect to eta: s = eta^-1 (A - A^T) is so(1,3)
  Mat4d anti = a - a.transpose();
  return minkowski_eta() * anti;
}
}  // namespace

TEST_CASE("vector/hermitian correspondence") {
  for (int k = 0; k < 100; ++k) {
    Vec4 x = random_vec();
    Mat2c xb = vec_to_herm(x);
    CHECK((herm_to_vec(xb) - x).norm() < 1e-13);
    // Minkowski norm from the determinant of the hermitian image.
    double q = x.transpose() * minkowski_eta() * x;
    CHECK(std::abs(q - 4.0 * xb.determinant().real()) < 1e-12);
    CHECK(std::abs(xb.determinant().imag()) < 1e-13);
  }
}

TEST_CASE("covector pairing through the hermitian maps") {
  for (int k = 0; k < 100; ++k) {
    Vec4 x = random_vec();
    Covec4 r = random_vec().transpose();
    Mat2c xb = vec_to_herm(x), rb = covec_to_herm(r);
    CHECK(std::abs((xb * rb).trace().real() - r * x) < 1e-12);
    CHECK((herm_to_covec(rb) - r).norm() < 1e-13);
  }
}

TEST_CASE("algebra morphism preserves brackets") {
  for (int k = 0; k < 100; ++k) {
    Mat4d s1 = random_so13(), s2 = random_so13();
    CHECK(so13_residual(s1) < 1e-12);
    Mat2c b1 = sl2_of_so13(s1), b2 = sl2_of_so13(s2);
    CHECK((so13_of_sl2(b1) - s1).norm() < 1e-12);
    Mat4d lhs = so13_of_sl2(b1 * b2 - b2 * b1);
    Mat4d rhs = s1 * s2 - s2 * s1;
    CHECK((lhs - rhs).norm() < 1e-10);
  }
}

TEST_CASE("group morphism realizes the double cover") {
  for (int k = 0; k < 50; ++k) {
    Mat2c b = sl2_of_so13(random_so13());
    Mat2c S = (b * 0.3).exp();
    Mat4d L = lorentz_of_sl2(S);
    CHECK(lorentz_group_residual(L) < 1e-11);
    // Both preimages map to the same Lorentz transformation.
    CHECK((lorentz_of_sl2(-S) - L).norm() < 1e-12);
    Mat2c back = sl2_of_lorentz(L);
    CHECK(std::min((back - S).norm(), (back + S).norm()) < 1e-10);
    // Action on vectors commutes with the hermitian map: S xb S* = (L x)-bar.
    Vec4 x = random_vec();
    CHECK((S * vec_to_herm(x) * S.adjoint() - vec_to_herm(Vec4(L * x))).norm() < 1e-11);
  }
}
