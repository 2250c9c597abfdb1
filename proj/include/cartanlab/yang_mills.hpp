#ifndef CARTANLAB_YANG_MILLS_HPP
#define CARTANLAB_YANG_MILLS_HPP

#include "cartanlab/cartan.hpp"

namespace cartanlab {

enum class Algebra { su22, so24, sl2, so13 };

/// Killing form, extended entrywise to form-valued arguments:
/// su(2,2)/sl(2,C): (1/2)(Tr(AB) + Tr(B*A*)); so(2,4)/so(1,3): Tr(AB).
Form killing(Algebra alg, const MatrixForm& A, const MatrixForm& B);

/// Yang-Mills density of a normal connection, via three routes that must
/// agree: the full curvature, the Weyl block, and the vector representation.
struct LagrangianRoutes {
  Form su22_route;    // (1/4) B_su22(Omega, *Omega)
  Form sl2_route;     // (1/2) B_sl2(W, *W)
  Form vector_route;  // (1/2) Tr(W_vec ^ *W_vec)
  double residual;    // max pairwise difference
};
LagrangianRoutes ym_lagrangian(const SpinConnection& normal_conn);

/// Weyl-gravity density computed from the vierbein alone.
Form weyl_lagrangian(const VierbeinEval& ev);

/// The modified connection with an antisymmetric addition f to the Schouten
/// block: P = Schouten + f in frame components.
struct MerkulovConnection {
  SpinConnection conn;
  SpinCurvature curv;
  Form f1;  // scalar 2-form P_1 ^ theta of the curvature
};
MerkulovConnection merkulov_connection(const VierbeinEval& ev, const Form& f);

/// (1/4) B_su22(Omega', *Omega') against the displayed decomposition
/// (1/2) B_sl2(W, *W) + (1/4) f ^ *f.
struct MerkulovLagrangian {
  Form assembled_route;
  Form decomposition;
  double residual;
};
MerkulovLagrangian merkulov_lagrangian(const VierbeinEval& ev, const Form& f);

/// The f = 0 obstruction: theta W* + W theta = f theta from the Bianchi
/// g_{-1} sector, with the left side vanishing for the trace-free Weyl block
/// and the map f -> f theta injective (rank 6).
struct MerkulovObstruction {
  double identity_residual;  // theta ^ W* + W ^ theta
  int rank;                  // of the f -> f theta linear map at the point
  double forced_f_norm;      // least-squares f solving the relation
};
MerkulovObstruction merkulov_obstruction(const VierbeinEval& ev);

}  // namespace cartanlab

#endif
