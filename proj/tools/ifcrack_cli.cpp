// Batch front door: parse one JSON config, run the requested analysis, write
// plain-text reports and plot-ready CSV files.
//
// Exit codes: 0 ok, 2 config error, 3 inadmissible physics, 4 out-of-scope
// request (oscillatory inversion and the like).

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ifcrack/config.hpp"
#include "ifcrack/errors.hpp"

namespace {

using namespace ifcrack;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt_complex(const Complex& z) {
  return fmt(z.real()) + (z.imag() < 0 ? " - " : " + ") + fmt(std::abs(z.imag())) +
         "i";
}

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) {
    xs[i] = lo * std::pow(hi / lo, i / (n - 1.0));
  }
  return xs;
}

std::ofstream open_out(const std::string& dir, const std::string& name) {
  std::filesystem::create_directories(dir);
  std::ofstream out(dir + "/" + name);
  if (!out) throw std::runtime_error("cannot write " + dir + "/" + name);
  return out;
}

int cmd_material(const RunConfig& cfg) {
  bool all_pass = true;
  int reported = 0;
  for (const auto* raw : {&cfg.raw1, &cfg.raw2}) {
    if (!raw->has_value()) continue;
    ++reported;
    const RawMaterial& rm = **raw;
    const MonoclinicReport rep = validate_monoclinic(rm.matrix);
    std::cout << "material " << rm.id << " ("
              << (rm.is_stiffness ? "stiffness" : "compliance") << ")\n";
    std::cout << "  symmetry_violation      " << fmt(rep.symmetry_violation) << "\n";
    std::cout << "  zero_pattern_violation  " << fmt(rep.zero_pattern_violation)
              << "\n";
    std::cout << "  min_eigenvalue          " << fmt(rep.min_eigenvalue) << "\n";
    std::cout << "  validation              " << (rep.pass ? "pass" : "FAIL")
              << "\n";
    if (!rep.pass) {
      all_pass = false;
      continue;
    }
    const MaterialSpec m = rm.is_stiffness
                               ? MaterialSpec::from_stiffness(rm.id, rm.matrix)
                               : MaterialSpec::from_compliance(rm.id, rm.matrix);
    const StrohSystem sys = make_stroh_system(m);
    std::cout << "  mu1  " << fmt_complex(sys.roots.mu1) << "\n";
    std::cout << "  mu2  " << fmt_complex(sys.roots.mu2) << "\n";
    std::cout << "  mu3  " << fmt_complex(sys.roots.mu3) << "\n";
    std::cout << "  degenerate_plane_roots  "
              << (sys.roots.degenerate ? "yes" : "no") << "\n";
    for (int i = 0; i < 3; ++i) {
      std::cout << "  Y" << i + 1 << "   ";
      for (int j = 0; j < 3; ++j) {
        std::cout << "[" << fmt_complex(sys.Y(i, j)) << "] ";
      }
      std::cout << "\n";
    }
  }
  if (reported == 0) {
    std::cerr << "material: no material block in config\n";
    return 2;
  }
  return all_pass ? 0 : 3;
}

int cmd_bimaterial(const RunConfig& cfg) {
  const BimaterialParams bp = cfg.resolve_bimaterial();
  std::cout << "H33     " << fmt(bp.H33) << "\n";
  std::cout << "W33     " << fmt(bp.W33) << "\n";
  std::cout << "nu      " << fmt(bp.nu) << "\n";
  std::cout << "H11     " << fmt(bp.H11) << "\n";
  std::cout << "H22     " << fmt(bp.H22) << "\n";
  std::cout << "alpha   " << fmt(bp.alpha) << "\n";
  std::cout << "beta    " << fmt(bp.beta) << "\n";
  std::cout << "delta1  " << fmt(bp.delta1) << "\n";
  std::cout << "delta2  " << fmt(bp.delta2) << "\n";
  std::cout << "lambda  " << fmt(bp.lambda) << "\n";
  std::cout << "gamma   " << fmt(bp.gamma) << "\n";
  std::cout << "epsilon " << fmt(bp.epsilon) << "\n";
  const AlphaInterval ai =
      alpha_admissible_interval(bp.H11, bp.H22, bp.delta1, bp.delta2, bp.lambda,
                                bp.beta, bp.gamma);
  std::cout << "alpha_admissible_min " << fmt(ai.lo) << "\n";
  std::cout << "alpha_admissible_max " << fmt(ai.hi) << "\n";

  if (cfg.material1 && cfg.material2) {
    // reconstruction check: parameters must reproduce the plane blocks
    auto [Y1, Y2] = plane_admittance_from_params(bp.H11, bp.H22, bp.alpha,
                                                 bp.beta, bp.delta1, bp.delta2,
                                                 bp.lambda, bp.gamma);
    const Matrix2cd H2 = Y1 + Y2.conjugate();
    const Matrix2cd W2 = Y1 - Y2.conjugate();
    double err = (H2 - bp.H.topLeftCorner<2, 2>()).cwiseAbs().maxCoeff();
    err = std::max(err, (W2 - bp.W.topLeftCorner<2, 2>()).cwiseAbs().maxCoeff());
    std::cout << "reconstruction_error " << fmt(err) << " ("
              << (err < 1e-10 * bp.H.cwiseAbs().maxCoeff() ? "pass" : "FAIL")
              << ")\n";
  }
  return 0;
}

// pointwise superposition of two antiplane solutions (closed-form path)
CrackSolutionAntiplane superpose(CrackSolutionAntiplane a,
                                 const CrackSolutionAntiplane& b) {
  auto oa = a.opening, ob = b.opening;
  auto ta = a.traction, tb = b.traction;
  a.opening = [oa, ob](double x) { return oa(x) + ob(x); };
  a.traction = [ta, tb](double x) { return ta(x) + tb(x); };
  a.K3 += b.K3;
  for (const auto& k : b.opening_derivative.kernels) {
    a.opening_derivative.kernels.push_back(k);
  }
  for (const auto& d : b.opening_derivative.diracs) {
    a.opening_derivative.diracs.push_back(d);
  }
  return a;
}

int cmd_solve(const RunConfig& cfg) {
  if (!cfg.mode3_load && !cfg.plane_load) {
    std::cerr << "solve: no load block in config\n";
    return 2;
  }
  const BimaterialParams bp = cfg.resolve_bimaterial();
  const double a_ref = cfg.scheme.scale;
  auto report = open_out(cfg.output_dir, "sif_report.txt");

  if (cfg.mode3_load) {
    const LoadSpecAntiplane& load = *cfg.mode3_load;
    if (bp.H33 <= 0.0) {
      throw std::domain_error(
          "solve: mode III requires H33 (materials or bimaterial.direct.H33)");
    }
    CrackSolutionAntiplane sol;
    const bool pure_line_force =
        load.sym.smooth.is_zero() && load.skew.smooth.is_zero();
    if (pure_line_force) {
      bool first = true;
      for (const auto& d : load.sym.diracs) {
        auto s = solve_line_force_sym(-d.coeff, d.offset, bp.H33);
        sol = first ? s : superpose(sol, s);
        first = false;
      }
      for (const auto& d : load.skew.diracs) {
        auto s = solve_line_force_skew(-0.5 * d.coeff, d.offset, bp.H33, bp.nu);
        sol = first ? s : superpose(sol, s);
        first = false;
      }
      if (first) throw std::domain_error("solve: empty mode III load");
    } else {
      sol = solve_general_antiplane(load, bp, cfg.scheme);
    }

    auto prof = open_out(cfg.output_dir, "mode3_profile.csv");
    prof << "x1,jump_u3,djump_u3\n";
    for (double r : log_grid(1e-3 * a_ref, 1e3 * a_ref, cfg.output_points)) {
      const double x = -r;
      prof << fmt(x) << "," << fmt(sol.opening(x)) << ","
           << fmt(sol.opening_derivative.value(x)) << "\n";
    }
    auto trac = open_out(cfg.output_dir, "mode3_traction.csv");
    trac << "x1,tau3\n";
    for (double x : log_grid(1e-3 * a_ref, 1e3 * a_ref, cfg.output_points)) {
      trac << fmt(x) << "," << fmt(sol.traction(x)) << "\n";
    }
    if (sol.method == SolutionMethod::closed_form) {
      report << "K_III " << fmt(sol.K3) << " method=closed-form tol=exact\n";
    } else {
      report << "K_III " << fmt(sol.K3) << " method=numeric fit_residual="
             << fmt(sol.extraction.fit_residual)
             << " window=[1e-4,1e-2]*scale\n";
    }
  }

  if (cfg.plane_load) {
    const LoadSpecPlane& load = *cfg.plane_load;
    const bool smooth_sym =
        !load.sym1.smooth.is_zero() || !load.sym2.smooth.is_zero();
    const bool any_skew = !load.skew1.empty() || !load.skew2.empty();

    CrackSolutionPlane sol;
    if (smooth_sym) {
      if (any_skew) {
        throw OutOfScopeError(
            "solve: smooth symmetric + skew loading not supported together");
      }
      sol = solve_general_plane_sym(load.sym1.smooth, load.sym2.smooth, bp,
                                    cfg.scheme);
    } else {
      // line-force route; sym and skew contributions superpose
      const bool has_sym = !load.sym1.empty() || !load.sym2.empty();
      double a = 0.0, F1s = 0.0, F2s = 0.0, F1k = 0.0, F2k = 0.0;
      for (const auto& d : load.sym1.diracs) { a = d.offset; F1s = -d.coeff; }
      for (const auto& d : load.sym2.diracs) { a = d.offset; F2s = -d.coeff; }
      for (const auto& d : load.skew1.diracs) { a = d.offset; F1k = -0.5 * d.coeff; }
      for (const auto& d : load.skew2.diracs) { a = d.offset; F2k = -0.5 * d.coeff; }
      if (a == 0.0) throw std::domain_error("solve: empty plane load");
      if (has_sym && any_skew) {
        auto s1 = solve_plane_sym_line(F1s, F2s, a, bp);
        auto s2 = solve_plane_skew_line(F1k, F2k, a, bp);
        sol = s1;
        auto o1a = s1.opening1, o1b = s2.opening1, o2a = s1.opening2,
             o2b = s2.opening2;
        auto t1a = s1.traction1, t1b = s2.traction1, t2a = s1.traction2,
             t2b = s2.traction2;
        sol.opening1 = [o1a, o1b](double x) { return o1a(x) + o1b(x); };
        sol.opening2 = [o2a, o2b](double x) { return o2a(x) + o2b(x); };
        sol.traction1 = [t1a, t1b](double x) { return t1a(x) + t1b(x); };
        sol.traction2 = [t2a, t2b](double x) { return t2a(x) + t2b(x); };
        sol.K_I += s2.K_I;
        sol.K_II += s2.K_II;
        for (const auto& k : s2.w1.kernels) sol.w1.kernels.push_back(k);
        for (const auto& k : s2.w2.kernels) sol.w2.kernels.push_back(k);
        for (const auto& d : s2.w1.diracs) sol.w1.diracs.push_back(d);
        for (const auto& d : s2.w2.diracs) sol.w2.diracs.push_back(d);
      } else if (any_skew) {
        sol = solve_plane_skew_line(F1k, F2k, a, bp);
      } else {
        sol = solve_plane_sym_line(F1s, F2s, a, bp);
      }
    }

    auto prof = open_out(cfg.output_dir, "plane_profile.csv");
    prof << "x1,jump_u1,jump_u2\n";
    for (double r : log_grid(1e-3 * a_ref, 1e3 * a_ref, cfg.output_points)) {
      const double x = -r;
      prof << fmt(x) << "," << fmt(sol.opening1(x)) << "," << fmt(sol.opening2(x))
           << "\n";
    }
    auto trac = open_out(cfg.output_dir, "plane_traction.csv");
    trac << "x1,tau1,tau2\n";
    for (double x : log_grid(1e-3 * a_ref, 1e3 * a_ref, cfg.output_points)) {
      trac << fmt(x) << "," << fmt(sol.traction1(x)) << "," << fmt(sol.traction2(x))
           << "\n";
    }
    if (sol.method == PlaneMethod::closed_form) {
      report << "K_I " << fmt(sol.K_I) << " method=closed-form tol=exact\n";
      report << "K_II " << fmt(sol.K_II) << " method=closed-form tol=exact\n";
    } else {
      report << "K_I " << fmt(sol.K_I) << " method=numeric fit_residual="
             << fmt(sol.extraction2.fit_residual)
             << " window=[1e-4,1e-2]*scale\n";
      report << "K_II " << fmt(sol.K_II) << " method=numeric fit_residual="
             << fmt(sol.extraction1.fit_residual)
             << " window=[1e-4,1e-2]*scale\n";
    }
  }
  std::cout << "solve: wrote results to " << cfg.output_dir << "\n";
  return 0;
}

int cmd_figure_skew_sif(const RunConfig& cfg) {
  const BimaterialParams bp = cfg.resolve_bimaterial();
  if (bp.delta1 == 0.0 || bp.delta2 == 0.0) {
    throw std::domain_error("figure-skew-sif: delta1 and delta2 must be nonzero");
  }
  std::vector<double> alphas(cfg.sweep.alpha_count);
  for (int i = 0; i < cfg.sweep.alpha_count; ++i) {
    alphas[i] = cfg.sweep.alpha_min +
                (cfg.sweep.alpha_max - cfg.sweep.alpha_min) * i /
                    (cfg.sweep.alpha_count - 1.0);
  }
  const auto rows = skew_sif_sweep(bp.H11, bp.H22, bp.delta1, bp.delta2,
                                   cfg.sweep.ratios, alphas);
  auto out = open_out(cfg.output_dir, "skew_sif_sweep.csv");
  out << "alpha,ratio,Khat_I,Khat_II\n";
  for (const auto& r : rows) {
    out << fmt(r.alpha) << "," << fmt(r.ratio) << "," << fmt(r.Khat_I) << ","
        << fmt(r.Khat_II) << "\n";
  }
  std::cout << "figure-skew-sif: wrote " << rows.size() << " rows to "
            << cfg.output_dir << "/skew_sif_sweep.csv\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"interfacial crack toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  int points = 0;
  int panels = 0;
  app.add_option("--config", config_path, "path to JSON config")->required();
  app.add_option("--out", out_dir, "output directory override");
  app.add_option("--points", points, "output grid points override");
  app.add_option("--panels", panels, "quadrature panels override");

  auto* sub_material = app.add_subcommand("material", "per-material report");
  auto* sub_bimaterial =
      app.add_subcommand("bimaterial", "bimaterial parameter table");
  auto* sub_solve = app.add_subcommand("solve", "crack solution + SIF report");
  auto* sub_figure = app.add_subcommand(
      "figure-skew-sif", "normalized skew-force SIF sweep table");

  CLI11_PARSE(app, argc, argv);

  try {
    RunConfig cfg = load_config(config_path);
    if (!out_dir.empty()) cfg.output_dir = out_dir;
    if (points > 0) cfg.output_points = points;
    if (panels > 0) cfg.scheme.panels = panels;
    cfg.scheme.validate();

    if (sub_material->parsed()) return cmd_material(cfg);
    if (sub_bimaterial->parsed()) return cmd_bimaterial(cfg);
    if (sub_solve->parsed()) return cmd_solve(cfg);
    if (sub_figure->parsed()) return cmd_figure_skew_sif(cfg);
    return 2;
  } catch (const ifcrack::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const ifcrack::OutOfScopeError& e) {
    std::cerr << "out of scope: " << e.what() << "\n";
    return 4;
  } catch (const std::domain_error& e) {
    std::cerr << "inadmissible: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "inadmissible: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
