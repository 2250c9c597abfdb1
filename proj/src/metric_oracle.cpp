#include "cartanlab/metric_oracle.hpp"

namespace cartanlab {

namespace {
using Jet4 = std::array<Jet, 4>;
using Jet44 = std::array<Jet4, 4>;
using Jet444 = std::array<Jet44, 4>;
using Jet4444 = std::array<Jet444, 4>;
}  // namespace

MetricCurvature metric_curvature(const MatrixForm& g) {
  if (g.degree() != 0 || g.rows() != 4)
    throw std::invalid_argument("expected a 4x4 matrix of metric jets");
  MetricCurvature mc;
  mc.x = g.base();
  int ord0 = g.order();
  if (ord0 < 2) throw std::domain_error("metric jets need order >= 2");
  mc.order = ord0 - 2;
  MatrixForm ginv = g.inverse();
  auto gj = [&](int m, int n) { return g.at(m, n).component(0); };
  auto gij = [&](int m, int n) { return ginv.at(m, n).component(0); };

  // Gamma^l_{mn} = (1/2) g^{lr} (d_m g_{rn} + d_n g_{rm} - d_r g_{mn})
  Jet44 dg[4];  // dg[r][m][n] = d_r g_{mn}
  for (int r = 0; r < 4; ++r)
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n) dg[r][m][n] = jet_partial(gj(m, n), r);
  for (int l = 0; l < 4; ++l)
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n) {
        Jet s = Jet::constant(0.0, ord0 - 1, mc.x);
        for (int r = 0; r < 4; ++r)
          s += gij(l, r) * (dg[m][r][n] + dg[n][r][m] - dg[r][m][n]);
        mc.gamma[l][m][n] = s * cplx(0.5);
      }

  // R^r_{smn} = d_m Gamma^r_{ns} - d_n Gamma^r_{ms} + Gamma Gamma terms
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 4; ++s)
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) {
          Jet v = jet_partial(mc.gamma[r][n][s], m) - jet_partial(mc.gamma[r][m][s], n);
          for (int l = 0; l < 4; ++l)
            v += mc.gamma[r][m][l] * mc.gamma[l][n][s] -
                 mc.gamma[r][n][l] * mc.gamma[l][m][s];
          mc.riemann[r][s][m][n] = v;
        }

  for (int s = 0; s < 4; ++s)
    for (int n = 0; n < 4; ++n) {
      Jet v = Jet::constant(0.0, mc.order, mc.x);
      for (int r = 0; r < 4; ++r) v += mc.riemann[r][s][r][n];
      mc.ricci[s][n] = v;
    }
  mc.scalar = Jet::constant(0.0, mc.order, mc.x);
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) mc.scalar += gij(m, n) * mc.ricci[m][n];

  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      mc.schouten[m][n] =
          (mc.ricci[m][n] - mc.scalar * gj(m, n) * cplx(1.0 / 6.0)) * cplx(-0.5);

  // Weyl = Riemann minus the Kulkarni-Nomizu product of Schouten and g,
  // raised on the first index
  Jet4444 rlow, clow;
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 4; ++s)
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) {
          Jet v = Jet::constant(0.0, mc.order, mc.x);
          for (int l = 0; l < 4; ++l) v += gj(r, l) * mc.riemann[l][s][m][n];
          rlow[r][s][m][n] = v;
        }
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 4; ++s)
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n)
          clow[r][s][m][n] = rlow[r][s][m][n] -
                             (gj(r, m) * mc.schouten[n][s] - gj(r, n) * mc.schouten[m][s] +
                              gj(s, n) * mc.schouten[m][r] - gj(s, m) * mc.schouten[n][r]);
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 4; ++s)
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) {
          Jet v = Jet::constant(0.0, mc.order, mc.x);
          for (int l = 0; l < 4; ++l) v += gij(r, l) * clow[l][s][m][n];
          mc.weyl[r][s][m][n] = v;
        }
  return mc;
}

namespace {
using MetricFn = std::function<Eigen::Matrix4d(const Point&)>;
using Gamma = std::array<std::array<std::array<double, 4>, 4>, 4>;

Point shifted(const Point& p, int mu, double d) {
  Point q = p;
  q[mu] += d;
  return q;
}

// fourth-order central difference of a matrix-valued function
Eigen::Matrix4d deriv_mat(const std::function<Eigen::Matrix4d(double)>& f, double h) {
  return (f(-2 * h) - 8 * f(-h) + 8 * f(h) - f(2 * h)) / (12 * h);
}

Gamma christoffel_fd(const MetricFn& g, const Point& p, double h) {
  Eigen::Matrix4d ginv = g(p).inverse();
  std::array<Eigen::Matrix4d, 4> dg;
  for (int r = 0; r < 4; ++r)
    dg[r] = deriv_mat([&](double d) { return g(shifted(p, r, d)); }, h);
  Gamma out;
  for (int l = 0; l < 4; ++l)
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n) {
        double s = 0;
        for (int r = 0; r < 4; ++r)
          s += ginv(l, r) * (dg[m](r, n) + dg[n](r, m) - dg[r](m, n));
        out[l][m][n] = 0.5 * s;
      }
  return out;
}
}  // namespace

Eigen::Matrix4d schouten_fd(const MetricFn& g, const Point& p, double h) {
  // d_m Gamma by the same stencil, Gamma itself from differenced g
  std::array<Gamma, 4> dgamma;
  for (int m = 0; m < 4; ++m) {
    std::array<Gamma, 4> at;  // offsets -2h,-h,h,2h
    double offs[4] = {-2 * h, -h, h, 2 * h};
    for (int k = 0; k < 4; ++k) at[k] = christoffel_fd(g, shifted(p, m, offs[k]), h);
    for (int l = 0; l < 4; ++l)
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
          dgamma[m][l][a][b] =
              (at[0][l][a][b] - 8 * at[1][l][a][b] + 8 * at[2][l][a][b] - at[3][l][a][b]) /
              (12 * h);
  }
  Gamma gam = christoffel_fd(g, p, h);
  double riem[4][4][4][4];
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 4; ++s)
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) {
          double v = dgamma[m][r][n][s] - dgamma[n][r][m][s];
          for (int l = 0; l < 4; ++l)
            v += gam[r][m][l] * gam[l][n][s] - gam[r][n][l] * gam[l][m][s];
          riem[r][s][m][n] = v;
        }
  Eigen::Matrix4d ric;
  for (int s = 0; s < 4; ++s)
    for (int n = 0; n < 4; ++n) {
      double v = 0;
      for (int r = 0; r < 4; ++r) v += riem[r][s][r][n];
      ric(s, n) = v;
    }
  Eigen::Matrix4d gv = g(p);
  double rscal = (gv.inverse() * ric).trace();
  return -0.5 * (ric - (rscal / 6.0) * gv);
}

}  // namespace cartanlab
