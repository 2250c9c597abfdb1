#ifndef CARTANLAB_SCENE_HPP
#define CARTANLAB_SCENE_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "cartanlab/expr.hpp"
#include "cartanlab/form.hpp"
#include "cartanlab/vierbein.hpp"

namespace cartanlab {

/// Invalid scene file or parameters (maps to CLI exit code 2).
struct SceneError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A verification scene: vierbein and gauge-parameter expressions plus
/// sampling controls, parsed from a key/value text file.
struct Scene {
  std::string name = "unnamed";
  // row-major e[a][mu]; defaults to the identity frame
  std::array<std::string, 16> vierbein_src;
  std::string z_src;    // Weyl rescaling parameter, positive
  std::string eps_src;  // Weyl ghost / infinitesimal parameter
  std::array<std::string, 4> r_src;  // conformal-boost covector components
  std::array<std::string, 6> s_src;  // sl(2,C) exponential coefficients
  std::array<std::string, 6> f_src;  // 2-form components f01,f02,f03,f12,f13,f23
  bool has_z = false, has_eps = false, has_r = false, has_s = false, has_f = false;
  bool expect_conformally_flat = false;  // twistor curvature must vanish
  bool expect_curved = false;            // twistor curvature must be sizably nonzero
  double box_lo = -0.5, box_hi = 0.5;
  int points = 20;
  unsigned seed = 42;
  int order = 4;
  double tol_identity = 1e-8;
  double tol_oracle = 1e-6;
};

/// Scene with all expressions parsed; absent gauge parameters are filled with
/// documented defaults so every suite can run on every scene.
struct CompiledScene {
  Scene scene;
  Vierbein vierbein;
  ScalarField z, eps;
  std::array<ScalarField, 4> r;
  std::array<ScalarField, 6> s;
  std::array<ScalarField, 6> f;

  /// assemble the f 2-form in coordinate components at a point
  Form f_form(const Point& p, int order) const;
};

/// Parse scene text; throws SceneError on syntax problems or unknown keys.
Scene parse_scene_text(const std::string& text);

/// Load a scene by built-in name or from a file path.
Scene load_scene(const std::string& name_or_path);

std::vector<std::string> builtin_scene_names();
std::string builtin_scene_text(const std::string& name);  // throws SceneError

/// Parse all expressions and fill gauge-parameter defaults.
CompiledScene compile_scene(const Scene& s);

/// Seeded rational sample points inside the scene box.
std::vector<Point> sample_points(const Scene& s);

/// Check vierbein invertibility and z > 0 on the given points; throws
/// SceneError on violation.
void validate_scene(const CompiledScene& cs, const std::vector<Point>& pts);

}  // namespace cartanlab

#endif
