#ifndef CARTANLAB_METRIC_ORACLE_HPP
#define CARTANLAB_METRIC_ORACLE_HPP

#include <functional>

#include "cartanlab/matrix_form.hpp"

namespace cartanlab {

/// Curvature data computed straight from the metric in coordinate indices,
/// independent of any frame-connection solve.
struct MetricCurvature {
  int order;  // jet order of the Schouten entries
  Point x;
  std::array<std::array<std::array<Jet, 4>, 4>, 4> gamma;  // Gamma^l_{mn}
  std::array<std::array<std::array<std::array<Jet, 4>, 4>, 4>, 4> riemann;  // R^r_{smn}
  std::array<std::array<Jet, 4>, 4> ricci;   // R_{mn}
  Jet scalar;
  std::array<std::array<Jet, 4>, 4> schouten;  // P_{mn}
  std::array<std::array<std::array<std::array<Jet, 4>, 4>, 4>, 4> weyl;  // C^r_{smn}
};

/// g: 4x4 matrix of metric jets (0-forms); needs order >= 2.
MetricCurvature metric_curvature(const MatrixForm& g);

/// Schouten tensor by fourth-order central finite differences on a metric
/// callback; no jets involved anywhere in this route.
Eigen::Matrix4d schouten_fd(const std::function<Eigen::Matrix4d(const Point&)>& g,
                            const Point& p, double h = 1e-2);

}  // namespace cartanlab

#endif
