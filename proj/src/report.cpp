#include "cartanlab/report.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace cartanlab {

namespace {
double finite(double v) {
  return std::isfinite(v) ? v : std::numeric_limits<double>::max();
}
}  // namespace

std::string render_report_json(const std::string& scene_name, unsigned seed,
                               const std::vector<CheckRecord>& records) {
  nlohmann::ordered_json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["scene"] = scene_name;
  j["seed"] = seed;
  j["checks"] = nlohmann::ordered_json::array();
  int passed = 0;
  for (const auto& r : records) {
    nlohmann::ordered_json c;
    c["id"] = r.id;
    c["suite"] = r.suite;
    c["paper_anchor"] = r.paper_anchor;
    c["max_residual"] = finite(r.max_residual);
    c["tolerance"] = r.tolerance;
    c["passed"] = r.passed;
    j["checks"].push_back(std::move(c));
    if (r.passed) ++passed;
  }
  j["summary"]["total"] = records.size();
  j["summary"]["passed"] = passed;
  j["summary"]["failed"] = static_cast<int>(records.size()) - passed;
  return j.dump(2) + "\n";
}

std::string render_report_text(const std::vector<CheckRecord>& records) {
  std::ostringstream out;
  int passed = 0;
  for (const auto& r : records) {
    out << (r.passed ? "PASS" : "FAIL") << "  " << r.id << " [" << r.suite
        << "]  max_residual=" << finite(r.max_residual) << "  tol=" << r.tolerance
        << "  (" << r.paper_anchor << ")\n";
    if (r.passed) ++passed;
  }
  out << passed << "/" << records.size() << " checks passed\n";
  return out.str();
}

}  // namespace cartanlab
