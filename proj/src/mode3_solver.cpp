#include "ifcrack/mode3_solver.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ifcrack {

namespace {

constexpr double kPi = std::numbers::pi;

HalfLineLoad combine(const HalfLineLoad& a, double cb, const HalfLineLoad& b) {
  HalfLineLoad out;
  if (!a.smooth.is_zero() || !b.smooth.is_zero()) {
    out.smooth = HalfLineFunction::lincomb(1.0, a.smooth, cb, b.smooth);
  }
  out.diracs = a.diracs;
  for (auto d : b.diracs) {
    d.coeff *= cb;
    out.diracs.push_back(d);
  }
  return out;
}

}  // namespace

LoadSpecAntiplane antiplane_line_force_sym(double F, double a) {
  if (a <= 0.0) throw std::invalid_argument("line force: offset a must be > 0");
  LoadSpecAntiplane load;
  load.sym.diracs.push_back(PointLoad{a, -F});
  return load;
}

LoadSpecAntiplane antiplane_line_force_skew(double F, double a) {
  if (a <= 0.0) throw std::invalid_argument("line force: offset a must be > 0");
  LoadSpecAntiplane load;
  load.skew.diracs.push_back(PointLoad{a, -2.0 * F});
  return load;
}

CrackSolutionAntiplane solve_line_force_sym(double F, double a, double H33) {
  if (a <= 0.0) throw std::invalid_argument("solve_line_force_sym: a must be > 0");
  if (H33 <= 0.0) throw std::invalid_argument("solve_line_force_sym: H33 must be > 0");

  CrackSolutionAntiplane sol;
  sol.method = SolutionMethod::closed_form;
  sol.opening_derivative.kernels.push_back(KernelTerm{a, -H33 * F / kPi});
  sol.opening = [F, a, H33](double x) {
    if (x >= 0.0) throw std::domain_error("opening: x < 0 required");
    const double arg = (x > -a) ? std::sqrt(-x / a) : std::sqrt(-a / x);
    return (2.0 * F * H33 / kPi) * std::atanh(arg);
  };
  sol.traction = [F, a](double x) {
    if (x <= 0.0) throw std::domain_error("traction: x > 0 required");
    return (F / kPi) * std::sqrt(a / x) / (x + a);
  };
  sol.K3 = std::sqrt(2.0 / (kPi * a)) * F;
  return sol;
}

CrackSolutionAntiplane solve_line_force_skew(double F, double a, double H33,
                                             double nu) {
  if (!(std::abs(nu) < 1.0)) {
    throw std::invalid_argument("solve_line_force_skew: |nu| must be < 1");
  }
  CrackSolutionAntiplane sol = solve_line_force_sym(F, a, H33);
  for (auto& k : sol.opening_derivative.kernels) k.coeff *= nu;
  auto base_open = sol.opening;
  auto base_trac = sol.traction;
  sol.opening = [nu, base_open](double x) { return nu * base_open(x); };
  sol.traction = [nu, base_trac](double x) { return nu * base_trac(x); };
  sol.K3 *= nu;
  return sol;
}

CrackSolutionAntiplane solve_general_antiplane(const LoadSpecAntiplane& load,
                                               const BimaterialParams& bp,
                                               const QuadratureScheme& scheme) {
  if (bp.H33 <= 0.0) {
    throw std::invalid_argument("solve_general_antiplane: H33 must be > 0");
  }
  const HalfLineLoad g = combine(load.sym, 0.5 * bp.nu, load.skew);
  if (g.empty()) {
    CrackSolutionAntiplane zero;
    zero.method = SolutionMethod::numeric;
    zero.opening = [](double) { return 0.0; };
    zero.traction = [](double) { return 0.0; };
    return zero;
  }

  CrackSolutionAntiplane sol;
  sol.method = SolutionMethod::numeric;
  const HalfLineField chi = invert_Ss_weighted(g, scheme);
  sol.opening_derivative = chi.scaled(-bp.H33);
  sol.opening = opening_from_field(sol.opening_derivative, scheme);

  auto Sw = std::make_shared<FieldCauchy>(sol.opening_derivative, scheme);
  const double H33 = bp.H33;
  sol.traction = [Sw, H33](double x) {
    if (x <= 0.0) throw std::domain_error("traction: x > 0 required");
    return -(*Sw)(x) / H33;
  };
  sol.extraction = sif_extract(sol.traction, scheme.scale);
  sol.K3 = sol.extraction.K;
  return sol;
}

double mode3_forward_residual(const CrackSolutionAntiplane& sol,
                              const LoadSpecAntiplane& load, double H33,
                              double nu, const QuadratureScheme& scheme) {
  const HalfLineLoad g = combine(load.sym, 0.5 * nu, load.skew);
  FieldCauchy Sw(sol.opening_derivative, scheme);

  // log grid over three decades around the scheme scale, point loads excluded
  std::vector<double> xs;
  const double a = scheme.scale;
  const int n = 160;
  for (int i = 0; i < n; ++i) {
    const double x = -1e-2 * a * std::pow(1e4, i / (n - 1.0));
    bool near_load = false;
    for (const auto& d : g.diracs) {
      if (std::abs(x + d.offset) < 0.05 * d.offset) near_load = true;
    }
    if (!near_load) xs.push_back(x);
  }

  double num = 0.0, den = 0.0;
  for (double x : xs) {
    const double lhs = g.smooth.is_zero() ? 0.0 : g.smooth(x);
    const double rhs = -Sw(x) / H33;
    double ref = std::abs(lhs);
    for (const auto& d : g.diracs) {
      ref += std::abs(d.coeff) / (kPi * std::abs(x + d.offset));
    }
    num += (lhs - rhs) * (lhs - rhs);
    den += ref * ref;
  }
  if (den == 0.0) return num == 0.0 ? 0.0 : INFINITY;
  return std::sqrt(num / den);
}

}  // namespace ifcrack
