#include "cartanlab/checks.hpp"

#include <cmath>
#include <limits>
#include <optional>

#include <unsupported/Eigen/MatrixFunctions>

#include "cartanlab/brst.hpp"
#include "cartanlab/metric_oracle.hpp"
#include "cartanlab/twistor.hpp"
#include "cartanlab/yang_mills.hpp"

namespace cartanlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// deterministic point-dependent scalar in (-0.9, 0.9), used to build
/// pseudo-random algebra elements that vary across sample points
double pseudo(const Point& p, int i) {
  return 0.9 * std::sin(37.0 * p[0] + 61.0 * p[1] + 89.0 * p[2] + 113.0 * p[3] +
                        7.1 * static_cast<double>(i) + 0.37);
}

Mat4d pseudo_so13(const Point& p, int salt) {
  Mat4d m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = pseudo(p, salt + 4 * i + j);
  const Mat4d& eta = minkowski_eta();
  return m - eta * m.transpose() * eta;
}

Mat4c pseudo_su22(const Point& p, int salt) {
  SpinAlgebraElement x;
  x.eps = pseudo(p, salt);
  x.sbar << cplx(pseudo(p, salt + 1), pseudo(p, salt + 2)),
      cplx(pseudo(p, salt + 3), pseudo(p, salt + 4)),
      cplx(pseudo(p, salt + 5), pseudo(p, salt + 6)),
      -cplx(pseudo(p, salt + 1), pseudo(p, salt + 2));
  x.taubar << pseudo(p, salt + 7), cplx(pseudo(p, salt + 8), pseudo(p, salt + 9)),
      cplx(pseudo(p, salt + 8), -pseudo(p, salt + 9)), pseudo(p, salt + 10);
  x.rhobar << pseudo(p, salt + 11), cplx(pseudo(p, salt + 12), pseudo(p, salt + 13)),
      cplx(pseudo(p, salt + 12), -pseudo(p, salt + 13)), pseudo(p, salt + 14);
  return x.matrix();
}

/// Per-point lazily computed shared intermediates.
struct Workspace {
  const CompiledScene& cs;
  Point p;
  int order;

  Workspace(const CompiledScene& c, const Point& pt, int ord)
      : cs(c), p(pt), order(ord) {}

  const VierbeinEval& ev() {
    if (!ev_) ev_ = cs.vierbein.eval(p, order);
    return *ev_;
  }
  const SpinConnection& nconn() {
    if (!nconn_) nconn_ = normal_connection(ev());
    return *nconn_;
  }
  const SpinCurvature& ncurv() {
    if (!ncurv_) ncurv_ = curvature(nconn());
    return *ncurv_;
  }
  const GaugeEval& boost_gauge() {
    if (!boostg_) {
      SpinGaugeField g = SpinGaugeField::boost(cs.r);
      boostg_ = eval_gauge(g, p, order);
    }
    return *boostg_;
  }
  /// K1-transformed normal connection: non-normal, carries an a-block
  const SpinConnection& boosted_conn() {
    if (!tconn_) tconn_ = gauge_transform(nconn(), boost_gauge());
    return *tconn_;
  }
  const GhostEval& ghost() {
    if (!ghost_) {
      GhostField g;
      g.eps = cs.eps;
      g.s = cs.s;
      g.rho = cs.r;
      g.has_eps = g.has_s = g.has_rho = true;
      ghost_ = eval_ghost(g, p, order);
    }
    return *ghost_;
  }
  const MatrixForm& psi() {
    if (!psi_) {
      std::array<Jet, 2> pi = {cs.eps.at(p, order) + 0.7,
                               cs.r[1].at(p, order) * cplx(0.0, 1.0) + 0.2};
      std::array<Jet, 2> om = {cs.r[2].at(p, order) - 0.4,
                               cs.z.at(p, order) * cplx(0.3, 0.1)};
      psi_ = twistor_section(pi, om);
    }
    return *psi_;
  }
  const MatrixForm& psi2() {
    if (!psi2_) {
      std::array<Jet, 2> pi = {cs.r[3].at(p, order) + cplx(0.1, 0.5),
                               cs.eps.at(p, order) - 0.6};
      std::array<Jet, 2> om = {cs.z.at(p, order) - 1.5,
                               cs.r[0].at(p, order) * cplx(0.2, -0.4) + 0.9};
      psi2_ = twistor_section(pi, om);
    }
    return *psi2_;
  }
  const MetricCurvature& metric() {
    if (!mc_) mc_ = metric_curvature(ev().g);
    return *mc_;
  }
  Jet zjet() { return cs.z.at(p, order); }
  Jet epsjet() { return cs.eps.at(p, order); }

 private:
  std::optional<VierbeinEval> ev_;
  std::optional<SpinConnection> nconn_;
  std::optional<SpinCurvature> ncurv_;
  std::optional<GaugeEval> boostg_;
  std::optional<SpinConnection> tconn_;
  std::optional<GhostEval> ghost_;
  std::optional<MatrixForm> psi_, psi2_;
  std::optional<MetricCurvature> mc_;
};

double conn_diff(const SpinConnection& a, const SpinConnection& b) {
  return (a.assembled() - b.assembled()).max_abs();
}

// ---------------------------------------------------------------- calculus

double chk_ext_d_squared(Workspace& w) {
  Form a = Form::dx(0, w.order, w.p) * w.zjet() +
           Form::dx(2, w.order, w.p) * w.epsjet();
  return ext_d(ext_d(a)).max_abs();
}

double chk_wedge_antisymmetry(Workspace& w) {
  Form a = Form::dx(0, w.order, w.p) * w.zjet() +
           Form::dx(3, w.order, w.p) * w.epsjet();
  Form b = Form::dx(1, w.order, w.p) * w.epsjet() +
           Form::dx(2, w.order, w.p) * w.zjet();
  return (wedge(a, b) + wedge(b, a)).max_abs();
}

double chk_ext_d_leibniz(Workspace& w) {
  Form a = Form::dx(1, w.order, w.p) * w.zjet();
  Form b = w.cs.f_form(w.p, w.order) * w.epsjet();
  Form lhs = ext_d(wedge(a, b));
  Form rhs = wedge(ext_d(a), b) - wedge(a, ext_d(b));
  return (lhs - rhs).max_abs();
}

double chk_mixed_partials(Workspace& w) {
  Jet f = w.zjet() * w.epsjet();
  double r = 0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu)
      r = std::max(r, std::abs(jet_partial(jet_partial(f, mu), nu).value() -
                               jet_partial(jet_partial(f, nu), mu).value()));
  return r;
}

double chk_hodge_involution(Workspace& w) {
  Form f = w.cs.f_form(w.p, w.order);
  return (hodge_star(hodge_star(f, w.ev()), w.ev()) + f).max_abs();
}

// -------------------------------------------------------------------- spin

double chk_herm_roundtrip(Workspace& w) {
  Vec4 x(1.0 + pseudo(w.p, 0), pseudo(w.p, 1), pseudo(w.p, 2), pseudo(w.p, 3));
  Mat2c xb = vec_to_herm(x);
  double r = (herm_to_vec(xb) - x).cwiseAbs().maxCoeff();
  double norm = x.transpose() * minkowski_eta() * x;
  r = std::max(r, std::abs(norm - 4.0 * xb.determinant().real()));
  r = std::max(r, std::abs(xb.determinant().imag()));
  return r;
}

double chk_covec_pairing(Workspace& w) {
  Vec4 x(pseudo(w.p, 4), pseudo(w.p, 5), pseudo(w.p, 6), pseudo(w.p, 7));
  Covec4 r(pseudo(w.p, 8), pseudo(w.p, 9), pseudo(w.p, 10), pseudo(w.p, 11));
  cplx tr = (vec_to_herm(x) * covec_to_herm(r)).trace();
  return std::abs(tr - cplx(r * x));
}

double chk_spin_algebra_morphism(Workspace& w) {
  Mat4d A = pseudo_so13(w.p, 16), B = pseudo_so13(w.p, 40);
  Mat2c lhs = sl2_of_so13(A * B - B * A);
  Mat2c rhs = sl2_of_so13(A) * sl2_of_so13(B) - sl2_of_so13(B) * sl2_of_so13(A);
  double r = (lhs - rhs).cwiseAbs().maxCoeff();
  ConfAlgebraElement xi;
  xi.eps = pseudo(w.p, 60);
  xi.s = pseudo_so13(w.p, 61);
  for (int i = 0; i < 4; ++i) {
    xi.tau(i) = pseudo(w.p, 80 + i);
    xi.rho(i) = pseudo(w.p, 84 + i);
  }
  r = std::max(r, su22_residual(algebra_morphism(xi).matrix()));
  return r;
}

double chk_group_morphism_covering(Workspace& w) {
  Mat2c S = (0.5 * sl2_of_so13(pseudo_so13(w.p, 24))).exp();
  Mat4d L = lorentz_of_sl2(S);
  double r = lorentz_group_residual(L);
  Mat2c S2 = sl2_of_lorentz(L);
  r = std::max(r, (lorentz_of_sl2(S2) - L).cwiseAbs().maxCoeff());
  // covering is two-to-one: the recovered element is +-S
  r = std::max(r, std::min((S2 - S).cwiseAbs().maxCoeff(),
                           (S2 + S).cwiseAbs().maxCoeff()));
  return r;
}

double chk_metric_from_vierbein(Workspace& w) {
  const VierbeinEval& ev = w.ev();
  Vec4 X(pseudo(w.p, 30), pseudo(w.p, 31), pseudo(w.p, 32), pseudo(w.p, 33));
  // frame components X^a = e^a_mu X^mu at the base point
  Vec4 Xa = Vec4::Zero();
  for (int a = 0; a < 4; ++a)
    for (int mu = 0; mu < 4; ++mu)
      Xa(a) += ev.e.at(a, mu).component(0).value().real() * X(mu);
  cplx gXX = 0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      gXX += ev.g.at(mu, nu).component(0).value() * X(mu) * X(nu);
  return std::abs(gXX - 4.0 * vec_to_herm(Xa).determinant());
}

// ------------------------------------------------------------------ cartan

double chk_structure_bianchi(Workspace& w) {
  MatrixForm m = w.nconn().assembled();
  const MatrixForm& om = w.ncurv().omega;
  return (ext_d(om) + m * om - om * m).max_abs();
}

double chk_su22_valuedness(Workspace& w) {
  double r = w.nconn().algebra_residual();
  MatrixForm sig = MatrixForm::from_constant(spin_sigma(), w.order, w.p);
  const MatrixForm& om = w.ncurv().omega;
  r = std::max(r, (om.adjoint() * sig + sig * om).max_abs());
  return r;
}

double chk_normal_constraints(Workspace& w) {
  double r = std::max(w.ncurv().Thetabar.max_abs(), w.ncurv().f.max_abs());
  r = std::max(r, w.nconn().a.max_abs());
  r = std::max(r, weyl_ricci_trace_residual(w.nconn(), w.ncurv()));
  return r;
}

double chk_levi_civita_torsion(Workspace& w) {
  LeviCivitaFrame lc = levi_civita_connection(w.ev());
  return (ext_d(w.ev().theta) + lc.A * w.ev().theta).max_abs();
}

double chk_gauge_closed_weyl(Workspace& w) {
  GaugeEval g = eval_gauge(SpinGaugeField::weyl(w.cs.z), w.p, w.order);
  return conn_diff(gauge_transform(w.nconn(), g),
                   gauge_transform_k0_closed(w.nconn(), g));
}

double chk_gauge_closed_lorentz(Workspace& w) {
  GaugeEval g = eval_gauge(SpinGaugeField::lorentz_exp(w.cs.s), w.p, w.order);
  return conn_diff(gauge_transform(w.nconn(), g),
                   gauge_transform_k0_closed(w.nconn(), g));
}

double chk_gauge_closed_boost(Workspace& w) {
  return conn_diff(w.boosted_conn(),
                   gauge_transform_k1_closed(w.nconn(), w.boost_gauge()));
}

double chk_gauge_right_action(Workspace& w) {
  GaugeEval g1 = eval_gauge(SpinGaugeField::weyl(w.cs.z), w.p, w.order);
  GaugeEval g2 = w.boost_gauge();
  GaugeEval g12 = g1;
  g12.gamma = g1.gamma * g2.gamma;
  return conn_diff(gauge_transform(gauge_transform(w.nconn(), g1), g2),
                   gauge_transform(w.nconn(), g12));
}

double chk_schouten_oracle(Workspace& w) {
  const VierbeinEval& ev = w.ev();
  const MetricCurvature& mc = w.metric();
  MatrixForm pbar = MatrixForm::zero(2, 2, 1, w.order, w.p);
  for (int mu = 0; mu < 4; ++mu) {
    std::array<Jet, 4> row;
    for (int b = 0; b < 4; ++b) {
      Jet acc = Jet::constant(0.0, mc.order, w.p);
      for (int nu = 0; nu < 4; ++nu)
        acc = acc + mc.schouten[mu][nu] * ev.einv.at(nu, b).component(0);
      row[b] = acc;
    }
    pbar += herm_of_covec_jets(row, mc.order, w.p) * Form::dx(mu, mc.order, w.p);
  }
  double r = (pbar - w.nconn().Pbar).max_abs();
  // second, jet-free route: finite differences on the metric callback
  const CompiledScene& cs = w.cs;
  auto gfun = [&cs](const Point& q) {
    Eigen::Matrix4cd e = Eigen::Matrix4cd::Zero();
    for (int a = 0; a < 4; ++a)
      for (int mu = 0; mu < 4; ++mu)
        e(a, mu) = cs.vierbein.entries[4 * a + mu].at(q, 0).value();
    Eigen::Matrix4cd g = e.adjoint() * minkowski_eta().cast<cplx>() * e;
    return Eigen::Matrix4d(g.real());
  };
  Eigen::Matrix4d pfd = schouten_fd(gfun, w.p);
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      r = std::max(r, std::abs(pfd(mu, nu) - mc.schouten[mu][nu].value().real()));
  return r;
}

// ---------------------------------------------------------------- dressing

double chk_dressing_kills_a(Workspace& w) {
  const SpinConnection& t = w.boosted_conn();
  return dress(t, extract_dressing(t)).a.max_abs();
}

double chk_dressing_invariance(Workspace& w) {
  const SpinConnection& t = w.boosted_conn();
  SpinConnection d = dress(t, extract_dressing(t));
  double r = conn_diff(d, w.nconn());
  MatrixForm omt = gauge_transform_curvature(w.ncurv().omega, w.boost_gauge());
  r = std::max(r, (dress_matrix(omt, extract_dressing(t)) - w.ncurv().omega).max_abs());
  MatrixForm psit = gauge_transform_section(w.psi(), w.boost_gauge());
  r = std::max(r, (dress_section(psit, extract_dressing(t)) - w.psi()).max_abs());
  return r;
}

double chk_sigma_prime_zero(Workspace& w) {
  const SpinConnection& t = w.boosted_conn();
  SpinConnection d = dress(t, extract_dressing(t));
  return (d.Abar.trace() - d.a * cplx(0.5)).max_abs();
}

double chk_f1_antisymmetric_part(Workspace& w) {
  const SpinConnection& t = w.boosted_conn();
  SpinCurvature c = curvature(t);
  // The trace part of the curvature is sourced by the antisymmetric part of
  // the soldered momentum block: f = da - Tr(thbar ^ Pbar).
  Form f = ext_d(t.a) - (t.thbar * t.Pbar).trace();
  return (c.f - f).max_abs();
}

double chk_residual_lorentz_closed(Workspace& w) {
  GaugeEval g = eval_gauge(SpinGaugeField::lorentz_exp(w.cs.s), w.p, w.order);
  return conn_diff(gauge_transform(w.nconn(), g),
                   gauge_transform_k0_closed(w.nconn(), g));
}

double chk_residual_weyl_closed(Workspace& w) {
  WeylCocycle c = weyl_cocycle(w.zjet(), w.ev().einv);
  return conn_diff(residual_weyl(w.nconn(), c),
                   residual_weyl_closed(w.nconn(), c));
}

double chk_residual_weyl_curvature(Workspace& w) {
  WeylCocycle c = weyl_cocycle(w.zjet(), w.ev().einv);
  return (residual_weyl_curvature(w.ncurv().omega, c) -
          residual_weyl_curvature_closed(w.ncurv(), c))
      .max_abs();
}

double chk_cocycle_identity(Workspace& w) {
  Jet zp = jet_exp(Jet::coordinate(3, w.order, w.p) * 0.07 + 0.1);
  return cocycle_residual(w.zjet(), zp, w.ev().einv);
}

double chk_cocycle_group_law_control(Workspace& w) {
  Jet zp = jet_exp(Jet::coordinate(3, w.order, w.p) * 0.07 + 0.1);
  return cocycle_group_law_violation(w.zjet(), zp, w.ev().einv) > 1e-3 ? 0.0 : 1.0;
}

// ----------------------------------------------------------------- twistor

double chk_friedrich_prolongation(Workspace& w) {
  ProlongationDeriv pd = prolongation_deriv(w.psi(), w.ev());
  return (pd.stacked - twistor_deriv(w.psi(), w.nconn())).max_abs();
}

double chk_metric_compatibility(Workspace& w) {
  return metric_compatibility(w.nconn());
}

double chk_bilinear_leibniz(Workspace& w) {
  return pairing_leibniz_residual(w.psi(), w.psi2(), w.nconn());
}

double chk_helicity_reality(Workspace& w) {
  return std::abs(bilinear(w.psi(), w.psi()).component(0).value().imag());
}

double chk_curvature_operator(Workspace& w) {
  return curvature_operator_residual(w.psi(), w.nconn());
}

double chk_twistor_curvature_zero(Workspace& w) {
  return twistor_curvature(w.nconn()).Omega.max_abs();
}

double chk_twistor_curvature_nonzero(Workspace& w) {
  return twistor_curvature(w.nconn()).Omega.max_abs() > 1e-3 ? 0.0 : 1.0;
}

double chk_flat_global_twistor(Workspace& w) {
  VierbeinEval evI = Vierbein::identity().eval(w.p, w.order);
  SpinConnection cI = normal_connection(evI);
  Eigen::Vector2cd om0(cplx(0.4, 0.2), cplx(-0.3, 0.7));
  Eigen::Vector2cd pi0(cplx(0.8, -0.1), cplx(0.25, 0.55));
  MatrixForm psi = flat_global_twistor(om0, pi0, w.p, w.order);
  return twistor_deriv(psi, cI).max_abs();
}

double chk_weyl_law_schouten(Workspace& w) {
  return weyl_transformation_laws(w.ev().e, w.zjet(), w.psi(), w.psi2()).schouten;
}

double chk_weyl_law_connection(Workspace& w) {
  return weyl_transformation_laws(w.ev().e, w.zjet(), w.psi(), w.psi2()).connection;
}

double chk_gt_twistor_component(Workspace& w) {
  return weyl_transformation_laws(w.ev().e, w.zjet(), w.psi(), w.psi2())
      .twistor_component;
}

double chk_bilinear_weyl_invariance(Workspace& w) {
  return weyl_transformation_laws(w.ev().e, w.zjet(), w.psi(), w.psi2())
      .bilinear_invariance;
}

double chk_bilinear_lorentz_invariance(Workspace& w) {
  GaugeEval g = eval_gauge(SpinGaugeField::lorentz_exp(w.cs.s), w.p, w.order);
  MatrixForm p1 = gauge_transform_section(w.psi(), g);
  MatrixForm p2 = gauge_transform_section(w.psi2(), g);
  return (bilinear(p1, p2) - bilinear(w.psi(), w.psi2())).max_abs();
}

double chk_compatibility_corruption_control(Workspace& w) {
  SpinConnection c = w.nconn();
  // break hermiticity of the Schouten block: no longer su(2,2)-valued
  c.Pbar.at(0, 1) += Form::dx(0, w.order, w.p) * cplx(0.0, 0.1);
  return metric_compatibility(c) > 1e-3 ? 0.0 : 1.0;
}

// -------------------------------------------------------------------- brst

double chk_brst_nilpotency_connection(Workspace& w) {
  return brst_nilpotency_connection(w.nconn().assembled(), w.ghost().vbar);
}

double chk_brst_nilpotency_curvature(Workspace& w) {
  return brst_nilpotency_curvature(w.ncurv().omega, w.ghost().vbar);
}

double chk_brst_nilpotency_section(Workspace& w) {
  return brst_nilpotency_section(w.psi(), w.ghost().vbar);
}

double chk_brst_nilpotency_ghost(Workspace& w) {
  return brst_nilpotency_ghost(w.ghost().vbar);
}

double chk_russian_formula(Workspace& w) {
  return russian_formula_residual(w.nconn().assembled(), w.ncurv().omega,
                                  w.ghost().vbar);
}

double chk_brst_bianchi(Workspace& w) {
  return brst_bianchi_residual(w.nconn().assembled(), w.ncurv().omega,
                               w.ghost().vbar);
}

double chk_dressed_ghost_closed(Workspace& w) {
  DressingField u = extract_dressing(w.boosted_conn());
  return dressed_ghost(w.ghost(), u, w.ev().einv).residual;
}

double chk_dressed_ghost_rho_free(Workspace& w) {
  DressingField u = extract_dressing(w.boosted_conn());
  return dressed_ghost(w.ghost(), u, w.ev().einv).rho_dependence;
}

double chk_weyl_linearization(Workspace& w) {
  return weyl_linearization_residual(w.nconn(), w.cs.eps, 1e-4);
}

double chk_lorentz_linearization(Workspace& w) {
  return lorentz_linearization_residual(w.nconn(), w.cs.s, 1e-4);
}

// ---------------------------------------------------------------------- ym

double chk_ym_three_routes(Workspace& w) { return ym_lagrangian(w.nconn()).residual; }

double chk_ym_conformal_invariance(Workspace& w) {
  VierbeinEval evz = w.cs.vierbein.scaled(w.cs.z).eval(w.p, w.order);
  return (weyl_lagrangian(evz) - weyl_lagrangian(w.ev())).max_abs();
}

double chk_killing_coincidence(Workspace& w) {
  double r = 0;
  for (int t = 0; t < 4; ++t) {
    Mat4d A = pseudo_so13(w.p, 100 + 16 * t), B = pseudo_so13(w.p, 200 + 16 * t);
    MatrixForm Am = MatrixForm::from_constant(A.cast<cplx>(), w.order, w.p);
    MatrixForm Bm = MatrixForm::from_constant(B.cast<cplx>(), w.order, w.p);
    MatrixForm As = MatrixForm::from_constant(sl2_of_so13(A), w.order, w.p);
    MatrixForm Bs = MatrixForm::from_constant(sl2_of_so13(B), w.order, w.p);
    r = std::max(r, (killing(Algebra::so13, Am, Bm) - killing(Algebra::sl2, As, Bs))
                        .max_abs());
  }
  return r;
}

double chk_killing_ad_invariance(Workspace& w) {
  double r = 0;
  for (int t = 0; t < 2; ++t) {
    MatrixForm A = MatrixForm::from_constant(pseudo_su22(w.p, 300 + 20 * t), w.order, w.p);
    MatrixForm B = MatrixForm::from_constant(pseudo_su22(w.p, 400 + 20 * t), w.order, w.p);
    MatrixForm C = MatrixForm::from_constant(pseudo_su22(w.p, 500 + 20 * t), w.order, w.p);
    Form ad = killing(Algebra::su22, C * A - A * C, B) +
              killing(Algebra::su22, A, C * B - B * C);
    r = std::max(r, ad.max_abs());
    Mat4d Av = pseudo_so13(w.p, 600 + 16 * t), Bv = pseudo_so13(w.p, 700 + 16 * t),
          Cv = pseudo_so13(w.p, 800 + 16 * t);
    MatrixForm Am = MatrixForm::from_constant(Av.cast<cplx>(), w.order, w.p);
    MatrixForm Bm = MatrixForm::from_constant(Bv.cast<cplx>(), w.order, w.p);
    MatrixForm Cm = MatrixForm::from_constant(Cv.cast<cplx>(), w.order, w.p);
    Form adv = killing(Algebra::so13, Cm * Am - Am * Cm, Bm) +
               killing(Algebra::so13, Am, Cm * Bm - Bm * Cm);
    r = std::max(r, adv.max_abs());
  }
  return r;
}

double chk_killing_boost_normalization(Workspace& w) {
  Mat4d M = Mat4d::Zero();
  M(0, 3) = 1.0;
  M(3, 0) = 1.0;
  MatrixForm Mm = MatrixForm::from_constant(M.cast<cplx>(), w.order, w.p);
  Form k = killing(Algebra::so13, Mm, Mm);
  return std::abs(k.component(0).value() - cplx(2.0));
}

double chk_merkulov_decomposition(Workspace& w) {
  return merkulov_lagrangian(w.ev(), w.cs.f_form(w.p, w.order)).residual;
}

double chk_merkulov_obstruction_identity(Workspace& w) {
  return merkulov_obstruction(w.ev()).identity_residual;
}

double chk_merkulov_obstruction_rank(Workspace& w) {
  return merkulov_obstruction(w.ev()).rank == 6 ? 0.0 : 1.0;
}

double chk_merkulov_forced_f(Workspace& w) {
  return merkulov_obstruction(w.ev()).forced_f_norm;
}

double chk_ym_dressing_invariance(Workspace& w) {
  const SpinConnection& t = w.boosted_conn();
  SpinConnection d = dress(t, extract_dressing(t));
  return (ym_lagrangian(d).vector_route - ym_lagrangian(w.nconn()).vector_route)
      .max_abs();
}

// ---------------------------------------------------------------- registry

bool applies_conformally_flat(const Scene& s) { return s.expect_conformally_flat; }
bool applies_curved(const Scene& s) { return s.expect_curved; }

struct CheckDef {
  const char* id;
  const char* suite;
  const char* anchor;
  bool oracle;       // use tol_oracle instead of tol_identity
  double fixed_tol;  // > 0 overrides everything (indicator controls etc.)
  bool (*applies)(const Scene&);
  double (*fn)(Workspace&);
};

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = {
      {"ext-d-squared", "calculus", "§2.1", false, 0, nullptr, chk_ext_d_squared},
      {"wedge-antisymmetry", "calculus", "§2.2", false, 0, nullptr, chk_wedge_antisymmetry},
      {"ext-d-leibniz", "calculus", "§2.2", false, 0, nullptr, chk_ext_d_leibniz},
      {"mixed-partials", "calculus", "§2.1", false, 0, nullptr, chk_mixed_partials},
      {"hodge-involution", "calculus", "§4.4", false, 0, nullptr, chk_hodge_involution},

      {"herm-map-roundtrip", "spin", "Eq. MorphMinkowski", false, 0, nullptr, chk_herm_roundtrip},
      {"covec-pairing", "spin", "Eq. LieMorph-Lorentz-SL2", false, 0, nullptr, chk_covec_pairing},
      {"spin-algebra-morphism", "spin", "Eq. LieAlg-Iso", false, 0, nullptr, chk_spin_algebra_morphism},
      {"group-morphism-covering", "spin", "Eq. GroupMorph-Lorentz-SL", false, 0, nullptr, chk_group_morphism_covering},
      {"metric-from-vierbein", "spin", "§4.2.1", false, 0, nullptr, chk_metric_from_vierbein},

      {"structure-bianchi", "cartan", "§4.2.1", false, 0, nullptr, chk_structure_bianchi},
      {"su22-valuedness", "cartan", "§4.2.1", false, 0, nullptr, chk_su22_valuedness},
      {"normal-constraints", "cartan", "§4.2.1", false, 0, nullptr, chk_normal_constraints},
      {"levi-civita-torsion", "cartan", "§4.2.1", false, 0, nullptr, chk_levi_civita_torsion},
      {"gauge-closed-weyl", "cartan", "Eq. GT_0", false, 0, nullptr, chk_gauge_closed_weyl},
      {"gauge-closed-lorentz", "cartan", "Eq. GT_0", false, 0, nullptr, chk_gauge_closed_lorentz},
      {"gauge-closed-boost", "cartan", "Eq. GT_1", false, 0, nullptr, chk_gauge_closed_boost},
      {"gauge-right-action", "cartan", "Eqs. GT_0/GT_1", false, 0, nullptr, chk_gauge_right_action},
      {"schouten-oracle", "cartan", "§4.2.1", true, 0, nullptr, chk_schouten_oracle},

      {"dressing-kills-a", "dressing", "§4.2.2", false, 0, nullptr, chk_dressing_kills_a},
      {"dressing-invariance", "dressing", "Eq. CompFields_1", false, 0, nullptr, chk_dressing_invariance},
      {"sigma-prime-zero", "dressing", "§4.2.2", false, 0, nullptr, chk_sigma_prime_zero},
      {"f1-antisymmetric-part", "dressing", "§4.2.2", false, 0, nullptr, chk_f1_antisymmetric_part},
      {"residual-lorentz-closed", "dressing", "Eq. CompFields_1_S", false, 0, nullptr, chk_residual_lorentz_closed},
      {"residual-weyl-closed", "dressing", "Eq. varpi_1_Z", false, 0, nullptr, chk_residual_weyl_closed},
      {"residual-weyl-curvature", "dressing", "Eq. Omega_1_Z", false, 0, nullptr, chk_residual_weyl_curvature},
      {"cocycle-identity", "dressing", "§4.2.2", false, 0, nullptr, chk_cocycle_identity},
      {"cocycle-group-law-control", "dressing", "§4.2.2", false, 0.5, nullptr, chk_cocycle_group_law_control},

      {"friedrich-prolongation", "twistor", "Eq. TE3/TE4", true, 0, nullptr, chk_friedrich_prolongation},
      {"metric-compatibility", "twistor", "§4.2.1", false, 0, nullptr, chk_metric_compatibility},
      {"bilinear-leibniz", "twistor", "Eq. metric_twistor", false, 0, nullptr, chk_bilinear_leibniz},
      {"helicity-reality", "twistor", "§4.2.1", false, 0, nullptr, chk_helicity_reality},
      {"curvature-operator", "twistor", "Eq. twistor_curvature", false, 0, nullptr, chk_curvature_operator},
      {"twistor-curvature-zero", "twistor", "Eq. twistor_curvature", false, 1e-9, applies_conformally_flat, chk_twistor_curvature_zero},
      {"twistor-curvature-nonzero", "twistor", "Eq. twistor_curvature", false, 0.5, applies_curved, chk_twistor_curvature_nonzero},
      {"flat-global-twistor", "twistor", "§4.1", false, 0, nullptr, chk_flat_global_twistor},
      {"weyl-law-schouten", "twistor", "§4.1", false, 0, nullptr, chk_weyl_law_schouten},
      {"weyl-law-connection", "twistor", "§4.1", false, 0, nullptr, chk_weyl_law_connection},
      {"gt-twistor-component", "twistor", "Eq. GTtwistor", false, 0, nullptr, chk_gt_twistor_component},
      {"bilinear-weyl-invariance", "twistor", "Eq. metric_twistor", false, 0, nullptr, chk_bilinear_weyl_invariance},
      {"bilinear-lorentz-invariance", "twistor", "Eq. metric_twistor", false, 0, nullptr, chk_bilinear_lorentz_invariance},
      {"compatibility-corruption-control", "twistor", "§4.2.1", false, 0.5, nullptr, chk_compatibility_corruption_control},

      {"brst-nilpotency-connection", "brst", "§4.3", false, 0, nullptr, chk_brst_nilpotency_connection},
      {"brst-nilpotency-curvature", "brst", "§4.3", false, 0, nullptr, chk_brst_nilpotency_curvature},
      {"brst-nilpotency-section", "brst", "§4.3", false, 0, nullptr, chk_brst_nilpotency_section},
      {"brst-nilpotency-ghost", "brst", "§4.3", false, 0, nullptr, chk_brst_nilpotency_ghost},
      {"russian-formula", "brst", "§2.3", false, 0, nullptr, chk_russian_formula},
      {"brst-bianchi", "brst", "§2.3", false, 0, nullptr, chk_brst_bianchi},
      {"dressed-ghost-closed", "brst", "§4.3", false, 0, nullptr, chk_dressed_ghost_closed},
      {"dressed-ghost-rho-free", "brst", "§4.3", false, 0, nullptr, chk_dressed_ghost_rho_free},
      {"weyl-linearization", "brst", "§4.3", true, 0, nullptr, chk_weyl_linearization},
      {"lorentz-linearization", "brst", "§4.3", true, 0, nullptr, chk_lorentz_linearization},

      {"ym-three-routes", "ym", "§4.4", false, 0, nullptr, chk_ym_three_routes},
      {"ym-conformal-invariance", "ym", "§4.4", false, 0, nullptr, chk_ym_conformal_invariance},
      {"killing-coincidence", "ym", "§4.4", false, 0, nullptr, chk_killing_coincidence},
      {"killing-ad-invariance", "ym", "§4.4", false, 0, nullptr, chk_killing_ad_invariance},
      {"killing-boost-normalization", "ym", "§4.4", false, 0, nullptr, chk_killing_boost_normalization},
      {"merkulov-decomposition", "ym", "Eq. Lag-Merk", false, 0, nullptr, chk_merkulov_decomposition},
      {"merkulov-obstruction-identity", "ym", "Eq. Merkulov-version", false, 0, nullptr, chk_merkulov_obstruction_identity},
      {"merkulov-obstruction-rank", "ym", "Eq. Merkulov-version", false, 0.5, nullptr, chk_merkulov_obstruction_rank},
      {"merkulov-forced-f", "ym", "Eq. Merkulov-version", false, 0, nullptr, chk_merkulov_forced_f},
      {"ym-dressing-invariance", "ym", "§4.4", false, 0, nullptr, chk_ym_dressing_invariance},
  };
  return defs;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "all", "calculus", "spin", "cartan", "dressing", "twistor", "brst", "ym"};
  return names;
}

bool is_suite_name(const std::string& tag) {
  for (const auto& n : suite_names())
    if (n == tag) return true;
  return false;
}

std::vector<CheckRecord> run_checks(const CompiledScene& cs,
                                    const std::vector<Point>& pts,
                                    const std::string& suite, double tol_override,
                                    bool parallel) {
  std::vector<const CheckDef*> active;
  for (const auto& d : registry()) {
    if (suite != "all" && suite != d.suite) continue;
    if (d.applies && !d.applies(cs.scene)) continue;
    active.push_back(&d);
  }

  const int npts = static_cast<int>(pts.size());
  const int nchk = static_cast<int>(active.size());
  std::vector<double> res(static_cast<std::size_t>(npts) * nchk, 0.0);

#ifdef CARTANLAB_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (int i = 0; i < npts; ++i) {
    Workspace ws(cs, pts[i], cs.scene.order);
    for (int c = 0; c < nchk; ++c) {
      double r;
      try {
        r = active[c]->fn(ws);
      } catch (const std::exception&) {
        r = kInf;
      }
      res[static_cast<std::size_t>(i) * nchk + c] = r;
    }
  }

  std::vector<CheckRecord> out;
  out.reserve(active.size());
  for (int c = 0; c < nchk; ++c) {
    const CheckDef& d = *active[c];
    CheckRecord rec;
    rec.id = d.id;
    rec.suite = d.suite;
    rec.paper_anchor = d.anchor;
    rec.points_evaluated = npts;
    for (int i = 0; i < npts; ++i)
      rec.max_residual =
          std::max(rec.max_residual, res[static_cast<std::size_t>(i) * nchk + c]);
    if (d.fixed_tol > 0)
      rec.tolerance = d.fixed_tol;
    else if (tol_override > 0)
      rec.tolerance = tol_override;
    else
      rec.tolerance = d.oracle ? cs.scene.tol_oracle : cs.scene.tol_identity;
    rec.passed = rec.max_residual < rec.tolerance;
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace cartanlab
