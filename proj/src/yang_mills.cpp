#include "cartanlab/yang_mills.hpp"

#include <stdexcept>

namespace cartanlab {

namespace {
constexpr double kBlockTol = 1e-8;
}

Form killing(Algebra alg, const MatrixForm& A, const MatrixForm& B) {
  if (A.rows() != A.cols() || A.rows() != B.rows() || B.rows() != B.cols())
    throw std::invalid_argument("killing form needs square matrices of equal size");
  switch (alg) {
    case Algebra::su22:
    case Algebra::sl2:
      // normalized so that the spin and vector forms coincide across the
      // two-to-one covering: Tr_vec(AB) = 4 Re Tr_spin(A-bar B-bar)
      return ((A * B).trace() + (B.adjoint() * A.adjoint()).trace()) * cplx(2.0);
    case Algebra::so24:
    case Algebra::so13:
      return (A * B).trace();
  }
  throw std::logic_error("unknown algebra tag");
}

LagrangianRoutes ym_lagrangian(const SpinConnection& conn) {
  const SpinCurvature curv = curvature(conn);
  if (conn.a.max_abs() > kBlockTol || curv.Thetabar.max_abs() > kBlockTol ||
      curv.f.max_abs() > kBlockTol)
    throw std::invalid_argument("yang-mills density needs a normal connection");
  const VierbeinEval ev = conn.frame_eval();

  LagrangianRoutes out;
  out.su22_route =
      killing(Algebra::su22, curv.omega, hodge_star(curv.omega, ev)) * cplx(0.25);
  out.sl2_route =
      killing(Algebra::sl2, curv.Wbar, hodge_star(curv.Wbar, ev)) * cplx(0.5);
  const MatrixForm Wvec = spin_unlift(curv.Wbar);
  out.vector_route = (Wvec * hodge_star(Wvec, ev)).trace() * cplx(0.5);
  out.residual = std::max((out.su22_route - out.sl2_route).max_abs(),
                          (out.sl2_route - out.vector_route).max_abs());
  return out;
}

Form weyl_lagrangian(const VierbeinEval& ev) {
  return ym_lagrangian(normal_connection(ev)).vector_route;
}

MerkulovConnection merkulov_connection(const VierbeinEval& ev, const Form& f) {
  if (f.degree() != 2)
    throw std::invalid_argument("merkulov input must be a 2-form");
  const int order = ev.order;
  const Point& base = ev.x;

  MerkulovConnection out;
  out.conn = normal_connection(ev);
  const auto F = ev.frame_components_2form(f);
  MatrixForm dP = MatrixForm::zero(2, 2, 1, order, base);
  for (int a = 0; a < 4; ++a) {
    std::array<Jet, 4> row;
    for (int b = 0; b < 4; ++b) row[b] = F[a][b];
    dP += herm_of_covec_jets(row, order, base) * ev.theta.at(a, 0);
  }
  out.conn.Pbar += dP;
  out.curv = curvature(out.conn);
  out.f1 = out.curv.f;
  return out;
}

MerkulovLagrangian merkulov_lagrangian(const VierbeinEval& ev, const Form& f) {
  const MerkulovConnection mc = merkulov_connection(ev, f);
  MerkulovLagrangian out;
  out.assembled_route =
      killing(Algebra::su22, mc.curv.omega, hodge_star(mc.curv.omega, ev)) *
      cplx(0.25);
  // With the Killing forms normalized so spin and vector traces coincide,
  // the Maxwell term carries coefficient 1 in units of the curvature trace f1.
  out.decomposition =
      killing(Algebra::sl2, mc.curv.Wbar, hodge_star(mc.curv.Wbar, ev)) * cplx(0.5) +
      wedge(mc.f1, hodge_star(mc.f1, ev));
  out.residual = (out.assembled_route - out.decomposition).max_abs();
  return out;
}

MerkulovObstruction merkulov_obstruction(const VierbeinEval& ev) {
  const SpinConnection conn = normal_connection(ev);
  const CottonWeyl cw = cotton_and_weyl(conn);

  MerkulovObstruction out;
  const MatrixForm lhs = conn.thbar * cw.Wbar.adjoint() + cw.Wbar * conn.thbar;
  out.identity_residual = lhs.max_abs();

  // columns: frame 2-form basis theta^a ^ theta^b (a < b) wedged into theta-bar
  const int n3 = form_dim(3);
  Eigen::MatrixXd M(2 * 4 * n3, 6);
  Eigen::VectorXd rhs(2 * 4 * n3);
  int col = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b, ++col) {
      const Form fab = wedge(ev.theta.at(a, 0), ev.theta.at(b, 0));
      const MatrixForm img = conn.thbar * fab;
      int row = 0;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          for (int k = 0; k < n3; ++k) {
            const cplx v = img.at(i, j).component(k).value();
            M(row++, col) = v.real();
            M(row++, col) = v.imag();
          }
    }
  int row = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < n3; ++k) {
        const cplx v = lhs.at(i, j).component(k).value();
        rhs(row++) = v.real();
        rhs(row++) = v.imag();
      }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double tol = 1e-10 * svd.singularValues()(0);
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > tol) ++rank;
  out.rank = rank;
  if (rank < 6) throw std::domain_error("degenerate frame: f-map rank below 6");
  out.forced_f_norm = svd.solve(rhs).norm();
  return out;
}

}  // namespace cartanlab
