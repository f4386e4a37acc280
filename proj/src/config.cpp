#include "ifcrack/config.hpp"

#include <cmath>
#include <fstream>

#include "json.hpp"

namespace ifcrack {

namespace {

using nlohmann::json;

Matrix6d parse_matrix6(const json& rows, const std::string& what) {
  if (!rows.is_array() || rows.size() != 6) {
    throw ConfigError(what + ": expected 6 rows");
  }
  Matrix6d m;
  for (int i = 0; i < 6; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != 6) {
      throw ConfigError(what + ": row " + std::to_string(i + 1) +
                        " must have 6 entries");
    }
    for (int j = 0; j < 6; ++j) m(i, j) = row[j].get<double>();
  }
  return m;
}

RawMaterial parse_material(const json& j, const std::string& which) {
  RawMaterial raw;
  raw.id = j.value("id", which);
  if (j.contains("isotropic")) {
    const auto& iso = j.at("isotropic");
    const double E = iso.at("E").get<double>();
    const double nu = iso.at("nu").get<double>();
    if (E <= 0.0 || nu <= -1.0 || nu >= 0.5) {
      throw ConfigError(which + ".isotropic: need E > 0 and -1 < nu < 0.5");
    }
    Matrix6d s = Matrix6d::Zero();
    const double G = E / (2.0 * (1.0 + nu));
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) s(a, b) = (a == b ? 1.0 : -nu) / E;
    }
    s(3, 3) = s(4, 4) = s(5, 5) = 1.0 / G;
    raw.matrix = s;
    raw.is_stiffness = false;
    return raw;
  }
  if (j.contains("stiffness")) {
    raw.matrix = parse_matrix6(j.at("stiffness"), which + ".stiffness");
    raw.is_stiffness = true;
    return raw;
  }
  if (j.contains("compliance")) {
    raw.matrix = parse_matrix6(j.at("compliance"), which + ".compliance");
    raw.is_stiffness = false;
    return raw;
  }
  throw ConfigError(which + ": need one of isotropic | stiffness | compliance");
}

std::optional<MaterialSpec> build_material(const RawMaterial& raw,
                                           std::string& error) {
  try {
    return raw.is_stiffness
               ? MaterialSpec::from_stiffness(raw.id, raw.matrix)
               : MaterialSpec::from_compliance(raw.id, raw.matrix);
  } catch (const std::invalid_argument& e) {
    if (error.empty()) error = e.what();
    return std::nullopt;
  }
}

HalfLineFunction parse_profile(const json& j, const std::string& what) {
  if (j.contains("gaussian")) {
    const auto& g = j.at("gaussian");
    const double amp = g.at("amplitude").get<double>();
    const double center = g.at("center").get<double>();
    const double width = g.at("width").get<double>();
    if (center >= 0.0 || width <= 0.0) {
      throw ConfigError(what + ".gaussian: need center < 0 and width > 0");
    }
    return HalfLineFunction(
        [amp, center, width](double x) {
          const double z = (x - center) / width;
          return amp * std::exp(-0.5 * z * z);
        },
        0.0, 1e9);
  }
  if (j.contains("patch")) {
    const auto& p = j.at("patch");
    const double value = p.at("value").get<double>();
    const double width = p.at("width").get<double>();
    if (width <= 0.0) throw ConfigError(what + ".patch: width must be > 0");
    return HalfLineFunction(
        [value, width](double x) { return (x > -width && x < 0.0) ? value : 0.0; },
        0.0, 1e9, {-width});
  }
  if (j.contains("table")) {
    const auto& t = j.at("table");
    auto xs = t.at("x").get<std::vector<double>>();
    auto ps = t.at("p").get<std::vector<double>>();
    if (xs.size() != ps.size() || xs.size() < 2) {
      throw ConfigError(what + ".table: x and p must have equal length >= 2");
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (xs[i] >= 0.0) throw ConfigError(what + ".table: x must be negative");
      if (i > 0 && xs[i] <= xs[i - 1]) {
        throw ConfigError(what + ".table: x must be strictly increasing");
      }
    }
    auto eval = [xs, ps](double x) {
      if (x <= xs.front() || x >= xs.back()) return 0.0;
      auto it = std::upper_bound(xs.begin(), xs.end(), x);
      const std::size_t k = static_cast<std::size_t>(it - xs.begin()) - 1;
      const double f = (x - xs[k]) / (xs[k + 1] - xs[k]);
      return ps[k] + f * (ps[k + 1] - ps[k]);
    };
    return HalfLineFunction(eval, 0.0, 1e9, xs);
  }
  throw ConfigError(what + ": need one of gaussian | patch | table");
}

// one antiplane load component: line_force and/or a smooth profile
HalfLineLoad parse_component_mode3(const json& j, const std::string& what,
                                   bool skew) {
  HalfLineLoad out;
  if (j.contains("line_force")) {
    const auto& lf = j.at("line_force");
    const double F = lf.at("F").get<double>();
    const double a = lf.at("a").get<double>();
    if (a <= 0.0) throw ConfigError(what + ".line_force: a must be > 0");
    out.diracs.push_back(PointLoad{a, skew ? -2.0 * F : -F});
  }
  if (j.contains("gaussian") || j.contains("patch") || j.contains("table")) {
    out.smooth = parse_profile(j, what);
  }
  return out;
}

LoadSpecAntiplane parse_mode3_load(const json& j) {
  LoadSpecAntiplane load;
  if (j.contains("sym")) {
    load.sym = parse_component_mode3(j.at("sym"), "load.mode3.sym", false);
  }
  if (j.contains("skew")) {
    load.skew = parse_component_mode3(j.at("skew"), "load.mode3.skew", true);
  }
  if (load.sym.empty() && load.skew.empty()) {
    throw ConfigError("load.mode3: empty load");
  }
  return load;
}

LoadSpecPlane parse_plane_load(const json& j) {
  LoadSpecPlane load;
  if (j.contains("sym")) {
    const auto& s = j.at("sym");
    if (s.contains("line_force")) {
      const auto& lf = s.at("line_force");
      const double a = lf.at("a").get<double>();
      if (a <= 0.0) throw ConfigError("load.plane.sym.line_force: a must be > 0");
      load.sym1.diracs.push_back(PointLoad{a, -lf.value("F1", 0.0)});
      load.sym2.diracs.push_back(PointLoad{a, -lf.value("F2", 0.0)});
    }
    if (s.contains("p1")) {
      load.sym1.smooth = parse_profile(s.at("p1"), "load.plane.sym.p1");
    }
    if (s.contains("p2")) {
      load.sym2.smooth = parse_profile(s.at("p2"), "load.plane.sym.p2");
    }
  }
  if (j.contains("skew")) {
    const auto& s = j.at("skew");
    if (s.contains("line_force")) {
      const auto& lf = s.at("line_force");
      const double a = lf.at("a").get<double>();
      if (a <= 0.0) throw ConfigError("load.plane.skew.line_force: a must be > 0");
      load.skew1.diracs.push_back(PointLoad{a, -2.0 * lf.value("F1", 0.0)});
      load.skew2.diracs.push_back(PointLoad{a, -2.0 * lf.value("F2", 0.0)});
    }
    if (s.contains("p1") || s.contains("p2")) {
      throw ConfigError(
          "load.plane.skew: smooth skew-symmetric plane loading is out of scope");
    }
  }
  const bool any = !load.sym1.empty() || !load.sym2.empty() ||
                   !load.skew1.empty() || !load.skew2.empty();
  if (!any) throw ConfigError("load.plane: empty load");
  return load;
}

DirectParams parse_direct(const json& j) {
  DirectParams p;
  p.H11 = j.at("H11").get<double>();
  p.H22 = j.at("H22").get<double>();
  p.alpha = j.value("alpha", 0.0);
  p.beta = j.value("beta", 0.0);
  p.delta1 = j.value("delta1", 0.0);
  p.delta2 = j.value("delta2", 0.0);
  p.lambda = j.value("lambda", 0.0);
  p.gamma = j.value("gamma", 0.0);
  if (j.contains("H33")) p.H33 = j.at("H33").get<double>();
  if (j.contains("nu")) p.nu = j.at("nu").get<double>();
  return p;
}

}  // namespace

BimaterialParams RunConfig::resolve_bimaterial() const {
  if (direct) {
    return make_bimaterial_direct(*direct);
  }
  if (material1 && material2) {
    return make_bimaterial(*material1, *material2);
  }
  if (!material_error.empty()) {
    throw std::domain_error("material validation failed: " + material_error);
  }
  throw ConfigError(
      "config: need either material.1 and material.2 or bimaterial.direct");
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }

  RunConfig cfg;
  try {
    if (j.contains("material")) {
      const auto& m = j.at("material");
      if (m.contains("1")) {
        cfg.raw1 = parse_material(m.at("1"), "material.1");
        cfg.material1 = build_material(*cfg.raw1, cfg.material_error);
      }
      if (m.contains("2")) {
        cfg.raw2 = parse_material(m.at("2"), "material.2");
        cfg.material2 = build_material(*cfg.raw2, cfg.material_error);
      }
    }
    if (j.contains("bimaterial") && j.at("bimaterial").contains("direct")) {
      cfg.direct = parse_direct(j.at("bimaterial").at("direct"));
    }
    if (cfg.direct && (cfg.raw1 || cfg.raw2)) {
      throw ConfigError(
          "config: material blocks and bimaterial.direct are mutually exclusive");
    }
    if (j.contains("load")) {
      const auto& l = j.at("load");
      if (l.contains("mode3")) cfg.mode3_load = parse_mode3_load(l.at("mode3"));
      if (l.contains("plane")) cfg.plane_load = parse_plane_load(l.at("plane"));
    }
    if (j.contains("numerics")) {
      const auto& n = j.at("numerics");
      cfg.scheme.scale = n.value("scale", cfg.scheme.scale);
      cfg.scheme.panels = n.value("panels", cfg.scheme.panels);
      cfg.scheme.nodes_per_panel =
          n.value("nodes_per_panel", cfg.scheme.nodes_per_panel);
      cfg.scheme.truncation = n.value("truncation", cfg.scheme.truncation);
      cfg.output_points = n.value("points", cfg.output_points);
    }
    if (j.contains("output")) {
      cfg.output_dir = j.at("output").value("dir", cfg.output_dir);
    }
    if (j.contains("sweep")) {
      const auto& s = j.at("sweep");
      cfg.sweep.alpha_min = s.value("alpha_min", cfg.sweep.alpha_min);
      cfg.sweep.alpha_max = s.value("alpha_max", cfg.sweep.alpha_max);
      cfg.sweep.alpha_count = s.value("alpha_count", cfg.sweep.alpha_count);
      if (s.contains("ratios")) {
        cfg.sweep.ratios = s.at("ratios").get<std::vector<double>>();
      }
      if (cfg.sweep.alpha_count < 2 || cfg.sweep.alpha_min >= cfg.sweep.alpha_max) {
        throw ConfigError("sweep: need alpha_min < alpha_max and alpha_count >= 2");
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  try {
    cfg.scheme.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("numerics: ") + e.what());
  }
  if (cfg.output_points < 2) throw ConfigError("numerics: points >= 2 required");
  return cfg;
}

}  // namespace ifcrack
