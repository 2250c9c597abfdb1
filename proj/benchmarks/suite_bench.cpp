// Compares the serial reference point loop against the OpenMP one on the
// heaviest built-in scene and reports wall times and the residual agreement.
#include <chrono>
#include <cstdio>

#include "cartanlab/checks.hpp"

using namespace cartanlab;
using clock_type = std::chrono::steady_clock;

int main() {
  Scene scene = load_scene("bumpy");
  scene.points = 40;
  CompiledScene cs = compile_scene(scene);
  std::vector<Point> pts = sample_points(scene);
  validate_scene(cs, pts);

  auto t0 = clock_type::now();
  auto serial = run_checks(cs, pts, "all", -1.0, false);
  auto t1 = clock_type::now();
  auto parallel = run_checks(cs, pts, "all", -1.0, true);
  auto t2 = clock_type::now();

  double ts = std::chrono::duration<double>(t1 - t0).count();
  double tp = std::chrono::duration<double>(t2 - t1).count();
  double dmax = 0;
  for (std::size_t i = 0; i < serial.size(); ++i)
    dmax = std::max(dmax, std::abs(serial[i].max_residual - parallel[i].max_residual));
  std::printf("serial reference: %.3f s\n", ts);
  std::printf("openmp parallel : %.3f s\n", tp);
  std::printf("speedup         : %.2fx\n", ts / tp);
  std::printf("max residual difference between paths: %.3g\n", dmax);
  return dmax == 0.0 ? 0 : 1;
}
