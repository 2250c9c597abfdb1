#ifndef CARTANLAB_REPORT_HPP
#define CARTANLAB_REPORT_HPP

#include <string>
#include <vector>

#include "cartanlab/checks.hpp"

namespace cartanlab {

inline constexpr const char* kToolName = "cartanlab";
inline constexpr const char* kToolVersion = "0.1.0";

/// Render the verification report as JSON with stable key order:
/// {tool, version, scene, seed, checks:[{id, suite, paper_anchor,
/// max_residual, tolerance, passed}], summary:{total, passed, failed}}.
std::string render_report_json(const std::string& scene_name, unsigned seed,
                               const std::vector<CheckRecord>& records);

/// One human-readable line per check plus a summary line.
std::string render_report_text(const std::vector<CheckRecord>& records);

}  // namespace cartanlab

#endif
