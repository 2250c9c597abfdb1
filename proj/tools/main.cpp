#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cartanlab/report.hpp"
#include "cartanlab/yang_mills.hpp"

namespace {

using namespace cartanlab;

int run_verify(const std::string& scene_arg, const std::string& suite, int points,
               long long seed, int order, double tol, const std::string& json_path,
               bool serial) {
  Scene scene = load_scene(scene_arg);
  if (points > 0) scene.points = points;
  if (seed >= 0) scene.seed = static_cast<unsigned>(seed);
  if (order > 0) scene.order = order;
  if (!is_suite_name(suite)) throw SceneError("unknown suite tag '" + suite + "'");

  CompiledScene cs = compile_scene(scene);
  std::vector<Point> pts = sample_points(scene);
  validate_scene(cs, pts);

  std::vector<CheckRecord> records = run_checks(cs, pts, suite, tol, !serial);
  std::cout << render_report_text(records);
  if (!json_path.empty()) {
    std::string json = render_report_json(scene.name, scene.seed, records);
    if (json_path == "-") {
      std::cout << json;
    } else {
      std::ofstream out(json_path, std::ios::binary);
      if (!out) throw SceneError("cannot write JSON report to '" + json_path + "'");
      out << json;
    }
  }
  for (const auto& r : records)
    if (!r.passed) return 1;
  return 0;
}

int run_lagrangian(const std::string& scene_arg, const std::string& point_str) {
  Scene scene = load_scene(scene_arg);
  CompiledScene cs = compile_scene(scene);

  Point p;
  {
    std::istringstream in(point_str);
    std::string tok;
    int i = 0;
    while (std::getline(in, tok, ',')) {
      if (i >= 4) throw SceneError("--point expects exactly 4 coordinates");
      std::size_t used = 0;
      try {
        p[i] = std::stod(tok, &used);
      } catch (const std::exception&) {
        throw SceneError("--point coordinate '" + tok + "' is not a number");
      }
      if (used != tok.size())
        throw SceneError("--point coordinate '" + tok + "' is not a number");
      ++i;
    }
    if (i != 4) throw SceneError("--point expects exactly 4 coordinates");
  }

  validate_scene(cs, {p});
  VierbeinEval ev = cs.vierbein.eval(p, scene.order);
  LagrangianRoutes lr = ym_lagrangian(normal_connection(ev));
  auto coeff = [](const Form& f) { return f.component(0).value().real(); };
  std::cout << "Yang-Mills density at (" << p[0] << ", " << p[1] << ", " << p[2]
            << ", " << p[3] << "), coefficient of dx0^dx1^dx2^dx3:\n";
  std::cout << "  spin curvature route   : " << coeff(lr.su22_route) << "\n";
  std::cout << "  Weyl block route       : " << coeff(lr.sl2_route) << "\n";
  std::cout << "  vector (Weyl) route    : " << coeff(lr.vector_route) << "\n";
  std::cout << "  cross-route residual   : " << lr.residual << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conformal Cartan geometry verification tool"};
  app.require_subcommand(1);

  std::string scene_arg, suite = "all", json_path, point_str;
  int points = -1, order = -1;
  long long seed = -1;
  double tol = -1.0;
  bool serial = false;

  CLI::App* verify = app.add_subcommand("verify", "run verification checks on a scene");
  verify->add_option("scene", scene_arg, "scene file path or built-in scene name")
      ->required();
  verify->add_option("--suite", suite, "check suite tag (default: all)");
  verify->add_option("--points", points, "number of sample points");
  verify->add_option("--seed", seed, "sampling seed");
  verify->add_option("--order", order, "jet truncation order");
  verify->add_option("--tol", tol, "tolerance override for non-control checks");
  verify->add_option("--json", json_path, "write JSON report to this path ('-' for stdout)");
  verify->add_flag("--serial", serial, "disable the parallel point loop");

  CLI::App* lag = app.add_subcommand("lagrangian", "print the Yang-Mills density routes at a point");
  lag->add_option("scene", scene_arg, "scene file path or built-in scene name")
      ->required();
  lag->add_option("--point", point_str, "evaluation point 'a,b,c,d'")->required();

  CLI::App* scenes = app.add_subcommand("scenes", "list built-in scenes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(verify))
      return run_verify(scene_arg, suite, points, seed, order, tol, json_path, serial);
    if (app.got_subcommand(lag)) return run_lagrangian(scene_arg, point_str);
    if (app.got_subcommand(scenes)) {
      for (const auto& n : cartanlab::builtin_scene_names()) std::cout << n << "\n";
      return 0;
    }
  } catch (const cartanlab::SceneError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const cartanlab::ExprError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
