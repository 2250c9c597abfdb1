#ifndef CARTANLAB_CHECKS_HPP
#define CARTANLAB_CHECKS_HPP

#include <string>
#include <vector>

#include "cartanlab/scene.hpp"

namespace cartanlab {

/// One registered verification check. Residuals are evaluated per sample
/// point and max-reduced; `passed` means max_residual < tolerance.
struct CheckRecord {
  std::string id;
  std::string suite;
  std::string paper_anchor;
  double max_residual = 0.0;
  double tolerance = 0.0;
  int points_evaluated = 0;
  bool passed = false;
};

const std::vector<std::string>& suite_names();  // {all, calculus, ...}
bool is_suite_name(const std::string& tag);

/// Run every check belonging to `suite` ("all" for everything that applies to
/// the scene) on the given points. tol_override replaces the scene tolerances
/// when positive (indicator controls keep their fixed thresholds).
/// `parallel` toggles the OpenMP point loop; the serial path is the reference
/// implementation.
std::vector<CheckRecord> run_checks(const CompiledScene& cs,
                                    const std::vector<Point>& pts,
                                    const std::string& suite,
                                    double tol_override = -1.0,
                                    bool parallel = true);

}  // namespace cartanlab

#endif
