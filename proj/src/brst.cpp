#include "cartanlab/brst.hpp"

#include <stdexcept>

namespace cartanlab {

namespace {

const cplx kI(0, 1);

MatrixForm mat2_of_jets(const std::array<std::array<Jet, 2>, 2>& m) {
  MatrixForm out(2, 2, 0, m[0][0].order(), m[0][0].base());
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.at(i, j) = Form::from_jet(m[i][j]);
  return out;
}

/// 4x4 block-diagonal 0-form diag(ul, lr)
MatrixForm block_diag(const MatrixForm& ul, const MatrixForm& lr) {
  MatrixForm out = MatrixForm::zero(4, 4, 0, ul.order(), ul.base());
  out.set_block(0, 0, ul);
  out.set_block(2, 2, lr);
  return out;
}

MatrixForm upper_right(const MatrixForm& ur) {
  MatrixForm out = MatrixForm::zero(4, 4, ur.degree(), ur.order(), ur.base());
  out.set_block(0, 2, ur);
  return out;
}

}  // namespace

const std::array<Mat2c, 6>& sl2_ghost_basis() {
  static const std::array<Mat2c, 6> basis = [] {
    std::array<Mat2c, 6> b;
    const auto& sg = sigma_basis();
    for (int k = 0; k < 3; ++k) {
      b[k] = sg[k + 1];
      b[k + 3] = kI * sg[k + 1];
    }
    return b;
  }();
  return basis;
}

GhostEval eval_ghost(const GhostField& g, const Point& p, int order) {
  GhostEval out;
  out.x = p;
  out.order = order;
  out.has_eps = g.has_eps;
  out.has_s = g.has_s;
  out.has_rho = g.has_rho;
  const Jet zero(order, p);
  out.eps = zero;
  out.s.fill(zero);
  out.rho.fill(zero);

  GrassmannElement veps, vs, vrho;

  if (g.has_eps) {
    out.eps = g.eps.at(p, order);
    MatrixForm c = MatrixForm::zero(4, 4, 0, order, p);
    const Jet h = out.eps * 0.5;
    c.at(0, 0) = c.at(1, 1) = Form::from_jet(h);
    c.at(2, 2) = c.at(3, 3) = Form::from_jet(-h);
    veps += GrassmannElement::term(kMaskEps, c);
  }
  if (g.has_s) {
    const auto& basis = sl2_ghost_basis();
    for (int k = 0; k < 6; ++k) {
      if (!g.s[k].valid()) continue;
      out.s[k] = g.s[k].at(p, order);
      const Mat2c b = basis[k];
      std::array<std::array<Jet, 2>, 2> sb, sbst;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          sb[i][j] = out.s[k] * b(i, j);
          sbst[i][j] = out.s[k].conj() * std::conj(b(j, i));
        }
      const MatrixForm c = block_diag(-mat2_of_jets(sbst), mat2_of_jets(sb));
      vs += GrassmannElement::term(std::uint16_t(1u << (k + 1)), c);
    }
  }
  if (g.has_rho) {
    for (int a = 0; a < 4; ++a) {
      if (!g.rho[a].valid()) continue;
      out.rho[a] = g.rho[a].at(p, order);
      std::array<Jet, 4> r;
      r.fill(Jet(order, p));
      r[a] = out.rho[a];
      const MatrixForm rb = herm_of_covec_jets(r, order, p);
      vrho += GrassmannElement::term(std::uint16_t(1u << (a + 7)), (-kI) * rb);
    }
  }
  out.v_eps = veps;
  out.v_s = vs;
  // v_rho sits in the upper-right block
  GrassmannElement vrho4;
  for (const auto& [m, c] : vrho.terms())
    vrho4 += GrassmannElement::term(m, upper_right(c));
  out.v_rho = vrho4;
  out.vbar = veps + vs + vrho4;
  return out;
}

GrassmannElement brst_connection(const MatrixForm& varpi, const GrassmannElement& vbar) {
  if (vbar.max_ghost_degree() > 2)
    throw std::invalid_argument("brst input exceeds ghost degree 2");
  const GrassmannElement w = GrassmannElement::from_matrix(varpi);
  return -ext_d(vbar) - graded_comm(w, vbar);
}

GrassmannElement brst_curvature(const MatrixForm& omega, const GrassmannElement& vbar) {
  if (vbar.max_ghost_degree() > 2)
    throw std::invalid_argument("brst input exceeds ghost degree 2");
  return graded_comm(GrassmannElement::from_matrix(omega), vbar);
}

GrassmannElement brst_section(const MatrixForm& psi, const GrassmannElement& vbar) {
  if (vbar.max_ghost_degree() > 2)
    throw std::invalid_argument("brst input exceeds ghost degree 2");
  return -(vbar * GrassmannElement::from_matrix(psi));
}

GrassmannElement brst_ghost(const GrassmannElement& vbar) {
  if (vbar.max_ghost_degree() > 2)
    throw std::invalid_argument("brst input exceeds ghost degree 2");
  return -(vbar * vbar);
}

double brst_nilpotency_connection(const MatrixForm& varpi, const GrassmannElement& v) {
  // s^2 varpi = -d(v^2) - [s varpi, v] - [varpi, v^2]
  const GrassmannElement sv = brst_ghost(v);  // -v^2
  const GrassmannElement sw = brst_connection(varpi, v);
  const GrassmannElement w = GrassmannElement::from_matrix(varpi);
  return (ext_d(sv) - graded_comm(sw, v) + graded_comm(w, sv)).max_abs();
}

double brst_nilpotency_curvature(const MatrixForm& omega, const GrassmannElement& v) {
  // s^2 Omega = [[Omega, v], v] + [Omega, -v^2]
  const GrassmannElement so = brst_curvature(omega, v);
  const GrassmannElement o = GrassmannElement::from_matrix(omega);
  return (graded_comm(so, v) + graded_comm(o, brst_ghost(v))).max_abs();
}

double brst_nilpotency_section(const MatrixForm& psi, const GrassmannElement& v) {
  // s^2 psi = -(sv) psi + v (s psi)
  const GrassmannElement p = GrassmannElement::from_matrix(psi);
  return (-(brst_ghost(v) * p) + v * brst_section(psi, v)).max_abs();
}

double brst_nilpotency_ghost(const GrassmannElement& v) {
  // s^2 v = -[(sv) v - v (sv)]
  const GrassmannElement sv = brst_ghost(v);
  return (-(sv * v) + v * sv).max_abs();
}

double russian_formula_residual(const MatrixForm& varpi, const MatrixForm& omega,
                                const GrassmannElement& v) {
  const GrassmannElement w = GrassmannElement::from_matrix(varpi);
  const GrassmannElement tilde = w + v;
  const GrassmannElement d_tilde =
      ext_d(w) + brst_connection(varpi, v) + ext_d(v) + brst_ghost(v);
  return (d_tilde + tilde * tilde - GrassmannElement::from_matrix(omega)).max_abs();
}

double brst_bianchi_residual(const MatrixForm& varpi, const MatrixForm& omega,
                             const GrassmannElement& v) {
  // s Omega must agree with s(d varpi + varpi^2)
  const GrassmannElement sw = brst_connection(varpi, v);
  const GrassmannElement w = GrassmannElement::from_matrix(varpi);
  const GrassmannElement rhs = -ext_d(sw) + sw * w - w * sw;
  return (brst_curvature(omega, v) - rhs).max_abs();
}

DressedGhost dressed_ghost(const GhostEval& v, const DressingField& u,
                           const MatrixForm& einv) {
  const int order = v.order;
  const Point& p = v.x;
  const Jet zero(order, p);

  // frame gradient of eps
  std::array<Jet, 4> deps;
  deps.fill(zero);
  for (int a = 0; a < 4; ++a) {
    Jet acc(order - 1, p);
    for (int mu = 0; mu < 4; ++mu)
      acc += jet_partial(v.eps, mu) * einv.at(mu, a).component(0);
    deps[a] = acc;
  }
  DressedGhost out;
  out.depsbar = herm_of_covec_jets(deps, order - 1, p);

  const MatrixForm k1eps = upper_right((-kI) * out.depsbar);
  const GrassmannElement c_eps =
      v.v_eps + GrassmannElement::term(kMaskEps, k1eps);

  const GrassmannElement U = GrassmannElement::from_matrix(u.u1);
  const GrassmannElement Uinv = GrassmannElement::from_matrix(u.u1_inverse());
  // s u1 = -v_eps u1 + u1 c(eps) + [u1, v_s] - v_rho u1
  const GrassmannElement su = -(v.v_eps * U) + U * c_eps + (U * v.v_s - v.v_s * U) -
                              v.v_rho * U;
  out.generic = Uinv * v.vbar * U + Uinv * su;
  out.closed = c_eps + v.v_s;
  out.residual = (out.generic - out.closed).max_abs();

  double rho_mass = 0;
  for (const auto& [m, c] : out.generic.terms())
    if (m & kMaskRho) rho_mass = std::max(rho_mass, c.max_abs());
  out.rho_dependence = rho_mass;
  return out;
}

double weyl_linearization_residual(const SpinConnection& conn1,
                                   const ScalarField& epshat, double t) {
  const MatrixForm w = conn1.assembled();
  const int order = w.order();
  const Point p = w.base();

  GhostField gf;
  gf.eps = epshat;
  gf.has_eps = true;
  const GhostEval ge = eval_ghost(gf, p, order);
  DressingField triv = extract_dressing(conn1);  // a = 0, so u1 = identity
  const DressedGhost dg = dressed_ghost(ge, triv, conn1.einv);
  const GrassmannElement sw = brst_connection(w, dg.closed);
  const MatrixForm* sco = sw.coeff(kMaskEps);
  if (!sco) throw std::logic_error("missing epsilon coefficient");

  const Jet zp = Jet::constant(1, order, p) + t * ge.eps;
  const Jet zm = Jet::constant(1, order, p) - t * ge.eps;
  const MatrixForm fp = residual_weyl(conn1, weyl_cocycle(zp, conn1.einv)).assembled();
  const MatrixForm fm = residual_weyl(conn1, weyl_cocycle(zm, conn1.einv)).assembled();
  return ((fp - fm) * (0.5 / t) - *sco).max_abs();
}

double lorentz_linearization_residual(const SpinConnection& conn1,
                                      const std::array<ScalarField, 6>& shat,
                                      double t) {
  const MatrixForm w = conn1.assembled();
  const int order = w.order();
  const Point p = w.base();

  GhostField gf;
  gf.s = shat;
  gf.has_s = true;
  const GhostEval ge = eval_ghost(gf, p, order);
  const GrassmannElement sw = brst_connection(w, ge.v_s);
  MatrixForm total = MatrixForm::zero(4, 4, 1, order, p);
  for (int k = 0; k < 6; ++k)
    if (const MatrixForm* c = sw.coeff(std::uint16_t(1u << (k + 1)))) total += *c;

  std::array<ScalarField, 6> sp, sm;
  for (int k = 0; k < 6; ++k) {
    sp[k] = shat[k].valid() ? cplx(t) * shat[k] : ScalarField::constant(0);
    sm[k] = shat[k].valid() ? cplx(-t) * shat[k] : ScalarField::constant(0);
  }
  const GaugeEval gp = eval_gauge(SpinGaugeField::lorentz_exp(sp), p, order);
  const GaugeEval gm = eval_gauge(SpinGaugeField::lorentz_exp(sm), p, order);
  const MatrixForm fp = gauge_transform_k0_closed(conn1, gp).assembled();
  const MatrixForm fm = gauge_transform_k0_closed(conn1, gm).assembled();
  return ((fp - fm) * (0.5 / t) - total).max_abs();
}

}  // namespace cartanlab
