#include "cartanlab/scene.hpp"

#include <fstream>
#include <map>
#include <random>
#include <sstream>

namespace cartanlab {

namespace {

const char* kFlatScene = R"(name = flat
expect_conformally_flat = true
)";

const char* kConformallyFlatScene = R"(name = conformally-flat
e00 = 1 + 0.1*x1
e11 = 1 + 0.1*x1
e22 = 1 + 0.1*x1
e33 = 1 + 0.1*x1
z = 1 + 0.1*x1
expect_conformally_flat = true
)";

const char* kExpConformalScene = R"(name = exp-conformal
e00 = exp(0.1*x2)
e11 = exp(0.1*x2)
e22 = exp(0.1*x2)
e33 = exp(0.1*x2)
z = exp(0.1*x2)
expect_conformally_flat = true
)";

const char* kBumpyScene = R"(name = bumpy
e00 = 1 + 0.05*x1*x2
e11 = 1 + 0.05*x0*x3
e33 = 1 + 0.05*x0*x1
expect_curved = true
)";

const char* kBumpyFScene = R"(name = bumpy+f
e00 = 1 + 0.05*x1*x2
e11 = 1 + 0.05*x0*x3
e33 = 1 + 0.05*x0*x1
f01 = 0.07
f23 = 0.1 + 0.02*x0
expect_curved = true
)";

bool parse_bool(const std::string& v, const std::string& key) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw SceneError("scene key '" + key + "' expects true/false, got '" + v + "'");
}

double parse_double(const std::string& v, const std::string& key) {
  std::size_t used = 0;
  double d;
  try {
    d = std::stod(v, &used);
  } catch (const std::exception&) {
    throw SceneError("scene key '" + key + "' expects a number, got '" + v + "'");
  }
  if (used != v.size())
    throw SceneError("scene key '" + key + "' expects a number, got '" + v + "'");
  return d;
}

int parse_int(const std::string& v, const std::string& key) {
  double d = parse_double(v, key);
  int i = static_cast<int>(d);
  if (static_cast<double>(i) != d)
    throw SceneError("scene key '" + key + "' expects an integer, got '" + v + "'");
  return i;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int f_slot(const std::string& key) {
  static const std::map<std::string, int> slots = {{"f01", 0}, {"f02", 1}, {"f03", 2},
                                                   {"f12", 3}, {"f13", 4}, {"f23", 5}};
  auto it = slots.find(key);
  return it == slots.end() ? -1 : it->second;
}

}  // namespace

Scene parse_scene_text(const std::string& text) {
  Scene s;
  for (int a = 0; a < 4; ++a)
    for (int m = 0; m < 4; ++m) s.vierbein_src[4 * a + m] = a == m ? "1" : "0";

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string l = trim(line);
    if (l.empty() || l[0] == '#') continue;
    std::size_t eq = l.find('=');
    if (eq == std::string::npos)
      throw SceneError("scene line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(l.substr(0, eq));
    std::string val = trim(l.substr(eq + 1));
    if (key.empty() || val.empty())
      throw SceneError("scene line " + std::to_string(lineno) + ": empty key or value");

    if (key == "name") {
      s.name = val;
    } else if (key.size() == 3 && key[0] == 'e' && key[1] >= '0' && key[1] <= '3' &&
               key[2] >= '0' && key[2] <= '3') {
      s.vierbein_src[4 * (key[1] - '0') + (key[2] - '0')] = val;
    } else if (key == "z") {
      s.z_src = val;
      s.has_z = true;
    } else if (key == "eps") {
      s.eps_src = val;
      s.has_eps = true;
    } else if (key.size() == 2 && key[0] == 'r' && key[1] >= '0' && key[1] <= '3') {
      s.r_src[key[1] - '0'] = val;
      s.has_r = true;
    } else if (key.size() == 2 && key[0] == 's' && key[1] >= '0' && key[1] <= '5') {
      s.s_src[key[1] - '0'] = val;
      s.has_s = true;
    } else if (f_slot(key) >= 0) {
      s.f_src[f_slot(key)] = val;
      s.has_f = true;
    } else if (key == "expect_conformally_flat") {
      s.expect_conformally_flat = parse_bool(val, key);
    } else if (key == "expect_curved") {
      s.expect_curved = parse_bool(val, key);
    } else if (key == "box_lo") {
      s.box_lo = parse_double(val, key);
    } else if (key == "box_hi") {
      s.box_hi = parse_double(val, key);
    } else if (key == "points") {
      s.points = parse_int(val, key);
    } else if (key == "seed") {
      s.seed = static_cast<unsigned>(parse_int(val, key));
    } else if (key == "order") {
      s.order = parse_int(val, key);
    } else if (key == "tol_identity") {
      s.tol_identity = parse_double(val, key);
    } else if (key == "tol_oracle") {
      s.tol_oracle = parse_double(val, key);
    } else {
      throw SceneError("scene line " + std::to_string(lineno) + ": unknown key '" +
                       key + "'");
    }
  }
  if (s.points < 1) throw SceneError("scene: points must be >= 1");
  if (s.order < 2) throw SceneError("scene: order must be >= 2");
  if (!(s.box_lo < s.box_hi)) throw SceneError("scene: box_lo must be < box_hi");
  return s;
}

std::vector<std::string> builtin_scene_names() {
  return {"flat", "conformally-flat", "exp-conformal", "bumpy", "bumpy+f"};
}

std::string builtin_scene_text(const std::string& name) {
  if (name == "flat") return kFlatScene;
  if (name == "conformally-flat") return kConformallyFlatScene;
  if (name == "exp-conformal") return kExpConformalScene;
  if (name == "bumpy") return kBumpyScene;
  if (name == "bumpy+f") return kBumpyFScene;
  throw SceneError("unknown built-in scene '" + name + "'");
}

Scene load_scene(const std::string& name_or_path) {
  for (const auto& n : builtin_scene_names())
    if (n == name_or_path) return parse_scene_text(builtin_scene_text(n));
  std::ifstream in(name_or_path);
  if (!in)
    throw SceneError("cannot open scene file '" + name_or_path +
                     "' (and it is not a built-in scene name)");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scene_text(buf.str());
}

CompiledScene compile_scene(const Scene& s) {
  CompiledScene cs;
  cs.scene = s;
  auto parse = [&](const std::string& src, const char* what) {
    try {
      return parse_expression(src);
    } catch (const ExprError& e) {
      throw SceneError("scene '" + s.name + "', " + what + ": " + e.what());
    }
  };
  for (int i = 0; i < 16; ++i) {
    std::string what = "e" + std::to_string(i / 4) + std::to_string(i % 4);
    cs.vierbein.entries[i] = parse(s.vierbein_src[i], what.c_str());
  }
  // documented defaults for absent gauge parameters, so that every suite can
  // exercise gauge transformations on any scene
  cs.z = parse(s.has_z ? s.z_src : "1 + 0.1*x1", "z");
  cs.eps = parse(s.has_eps ? s.eps_src : "0.1*x0 + 0.05*x2", "eps");
  const char* r_defaults[4] = {"0.05*x1", "0.06*x2", "0.07*x3", "0.08*x0"};
  for (int i = 0; i < 4; ++i)
    cs.r[i] = parse(s.has_r && !s.r_src[i].empty() ? s.r_src[i] : r_defaults[i], "r");
  const char* s_defaults[6] = {"0.04*x0", "0.05*x1", "0.06*x2",
                               "0.03*x3", "0.02*x0", "0.01*x1"};
  for (int i = 0; i < 6; ++i)
    cs.s[i] = parse(s.has_s && !s.s_src[i].empty() ? s.s_src[i] : s_defaults[i], "s");
  for (int i = 0; i < 6; ++i)
    cs.f[i] = parse(s.has_f && !s.f_src[i].empty() ? s.f_src[i] : "0", "f");
  if (!s.has_f) {
    cs.f[0] = parse("0.07", "f");
    cs.f[5] = parse("0.1", "f");
  }
  return cs;
}

Form CompiledScene::f_form(const Point& p, int order) const {
  static const int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  Form out = Form::zero(2, order, p);
  for (int k = 0; k < 6; ++k)
    out += wedge(Form::dx(pairs[k][0], order, p), Form::dx(pairs[k][1], order, p)) *
           f[k].at(p, order);
  return out;
}

std::vector<Point> sample_points(const Scene& s) {
  std::mt19937 rng(s.seed);
  std::vector<Point> pts(static_cast<std::size_t>(s.points));
  const double span = s.box_hi - s.box_lo;
  for (auto& p : pts)
    for (int mu = 0; mu < 4; ++mu)
      // rational abscissae keep all built-in expressions inside their domains
      p[mu] = s.box_lo + span * static_cast<double>(rng() % 1001u) / 1000.0;
  return pts;
}

void validate_scene(const CompiledScene& cs, const std::vector<Point>& pts) {
  for (const auto& p : pts) {
    Eigen::Matrix4cd e;
    for (int a = 0; a < 4; ++a)
      for (int m = 0; m < 4; ++m) {
        Jet j;
        try {
          j = cs.vierbein.entries[4 * a + m].at(p, 1);
        } catch (const std::exception& ex) {
          throw SceneError(std::string("scene '") + cs.scene.name +
                           "': vierbein evaluation failed: " + ex.what());
        }
        e(a, m) = j.value();
      }
    if (std::abs(e.determinant()) < 1e-10)
      throw SceneError("scene '" + cs.scene.name +
                       "': vierbein is singular at a sample point");
    Jet zj;
    try {
      zj = cs.z.at(p, 1);
    } catch (const std::exception& ex) {
      throw SceneError(std::string("scene '") + cs.scene.name +
                       "': z evaluation failed: " + ex.what());
    }
    if (zj.value().real() <= 0.0)
      throw SceneError("scene '" + cs.scene.name +
                       "': z is not positive at a sample point");
  }
}

}  // namespace cartanlab
