#include "ifcrack/plane_solver.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>

#include "ifcrack/errors.hpp"

namespace ifcrack {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBetaTol = 1e-9;

void require_beta_zero(const BimaterialParams& bp, const char* who) {
  if (std::abs(bp.beta) > kBetaTol) {
    throw OutOfScopeError(std::string(who) +
                          ": beta != 0 (oscillatory case); only the forward "
                          "identity residual is available");
  }
}

void require_alpha_subcritical(const BimaterialParams& bp, const char* who) {
  if (!(std::abs(bp.alpha) < 1.0)) {
    throw std::domain_error(std::string(who) + ": |alpha| >= 1 is inadmissible");
  }
}

std::function<double(double)> tip_kernel_traction(double coeff, double a) {
  return [coeff, a](double x) {
    if (x <= 0.0) throw std::domain_error("traction: x > 0 required");
    return coeff * std::sqrt(a / x) / (x + a);
  };
}

}  // namespace

LoadSpecPlane plane_line_force_sym(double F1, double F2, double a) {
  if (a <= 0.0) throw std::invalid_argument("line force: offset a must be > 0");
  LoadSpecPlane load;
  load.sym1.diracs.push_back(PointLoad{a, -F1});
  load.sym2.diracs.push_back(PointLoad{a, -F2});
  return load;
}

LoadSpecPlane plane_line_force_skew(double F1, double F2, double a) {
  if (a <= 0.0) throw std::invalid_argument("line force: offset a must be > 0");
  LoadSpecPlane load;
  load.skew1.diracs.push_back(PointLoad{a, -2.0 * F1});
  load.skew2.diracs.push_back(PointLoad{a, -2.0 * F2});
  return load;
}

CrackSolutionPlane solve_plane_sym_line(double F1, double F2, double a,
                                        const BimaterialParams& bp) {
  if (a <= 0.0) throw std::invalid_argument("solve_plane_sym_line: a must be > 0");
  require_beta_zero(bp, "solve_plane_sym_line");
  require_alpha_subcritical(bp, "solve_plane_sym_line");

  const double r12 = std::sqrt(bp.H22 / bp.H11);
  const double c1 = bp.H11 * (F1 - bp.alpha * r12 * F2);
  const double c2 = bp.H22 * (F2 - bp.alpha / r12 * F1);

  CrackSolutionPlane sol;
  sol.method = PlaneMethod::closed_form;
  sol.w1.kernels.push_back(KernelTerm{a, -c1 / kPi});
  sol.w2.kernels.push_back(KernelTerm{a, -c2 / kPi});

  auto arctanh_profile = [a](double coeff) {
    return [a, coeff](double x) {
      if (x >= 0.0) throw std::domain_error("opening: x < 0 required");
      const double arg = (x > -a) ? std::sqrt(-x / a) : std::sqrt(-a / x);
      return (2.0 * coeff / kPi) * std::atanh(arg);
    };
  };
  sol.opening1 = arctanh_profile(c1);
  sol.opening2 = arctanh_profile(c2);
  sol.traction1 = tip_kernel_traction(F1 / kPi, a);
  sol.traction2 = tip_kernel_traction(F2 / kPi, a);
  sol.K_II = std::sqrt(2.0 / (kPi * a)) * F1;
  sol.K_I = std::sqrt(2.0 / (kPi * a)) * F2;
  return sol;
}

CrackSolutionPlane solve_plane_skew_line(double F1, double F2, double a,
                                         const BimaterialParams& bp) {
  if (a <= 0.0) throw std::invalid_argument("solve_plane_skew_line: a must be > 0");
  require_beta_zero(bp, "solve_plane_skew_line");
  if (std::abs(bp.lambda) > kBetaTol) {
    throw OutOfScopeError(
        "solve_plane_skew_line: lambda != 0 has no closed form");
  }
  require_alpha_subcritical(bp, "solve_plane_skew_line");

  const double s = std::sqrt(bp.H11 * bp.H22);
  const double om = 1.0 - bp.alpha * bp.alpha;

  CrackSolutionPlane sol;
  sol.method = PlaneMethod::closed_form;
  sol.w1.kernels.push_back(KernelTerm{a, -bp.delta1 * bp.H11 * F1 / kPi});
  sol.w1.diracs.push_back(PointLoad{a, -bp.gamma * F2 * s});
  sol.w2.kernels.push_back(KernelTerm{a, -bp.delta2 * bp.H22 * F2 / kPi});
  sol.w2.diracs.push_back(PointLoad{a, bp.gamma * F1 * s});

  auto skew_opening = [a](double coeff, double offset) {
    return [a, coeff, offset](double x) {
      if (x >= 0.0) throw std::domain_error("opening: x < 0 required");
      const double arg = (x > -a) ? std::sqrt(-x / a) : std::sqrt(-a / x);
      return (2.0 * coeff / kPi) * std::atanh(arg) + (x < -a ? offset : 0.0);
    };
  };
  sol.opening1 = skew_opening(bp.delta1 * bp.H11 * F1, bp.gamma * F2 * s);
  sol.opening2 = skew_opening(bp.delta2 * bp.H22 * F2, -bp.gamma * F1 * s);

  const double r12 = std::sqrt(bp.H22 / bp.H11);
  const double t1 = (bp.delta1 * F1 + bp.alpha * bp.delta2 * F2 * r12) / om;
  const double t2 = (bp.delta2 * F2 + bp.alpha * bp.delta1 * F1 / r12) / om;
  sol.traction1 = tip_kernel_traction(t1 / kPi, a);
  sol.traction2 = tip_kernel_traction(t2 / kPi, a);
  sol.K_II = std::sqrt(2.0 / (kPi * a)) * t1;
  sol.K_I = std::sqrt(2.0 / (kPi * a)) * t2;
  return sol;
}

CrackSolutionPlane solve_general_plane_sym(const HalfLineFunction& p1,
                                           const HalfLineFunction& p2,
                                           const BimaterialParams& bp,
                                           const QuadratureScheme& scheme) {
  require_beta_zero(bp, "solve_general_plane_sym");
  require_alpha_subcritical(bp, "solve_general_plane_sym");
  if (p1.is_zero() && p2.is_zero()) {
    CrackSolutionPlane zero;
    zero.method = PlaneMethod::numeric;
    zero.opening1 = zero.opening2 = [](double) { return 0.0; };
    zero.traction1 = zero.traction2 = [](double) { return 0.0; };
    return zero;
  }

  HalfLineFunction chi1, chi2;
  if (!p1.is_zero()) chi1 = invert_Ss_weighted_smooth(p1, scheme);
  if (!p2.is_zero()) chi2 = invert_Ss_weighted_smooth(p2, scheme);

  // w = sqrt(H11 H22)(alpha^2 - 1) B'^{-1} chi, componentwise:
  const double s = std::sqrt(bp.H11 * bp.H22);
  CrackSolutionPlane sol;
  sol.method = PlaneMethod::numeric;
  sol.w1.smooth =
      HalfLineFunction::lincomb(-bp.H11, chi1, bp.alpha * s, chi2);
  sol.w2.smooth =
      HalfLineFunction::lincomb(bp.alpha * s, chi1, -bp.H22, chi2);

  sol.opening1 = opening_from_field(sol.w1, scheme);
  sol.opening2 = opening_from_field(sol.w2, scheme);

  auto S1 = std::make_shared<FieldCauchy>(sol.w1, scheme);
  auto S2 = std::make_shared<FieldCauchy>(sol.w2, scheme);
  const double r12 = std::sqrt(bp.H22 / bp.H11);
  const double pref = 1.0 / (s * (bp.alpha * bp.alpha - 1.0));
  const double alpha = bp.alpha;
  sol.traction1 = [S1, S2, pref, r12, alpha](double x) {
    if (x <= 0.0) throw std::domain_error("traction: x > 0 required");
    return pref * (r12 * (*S1)(x) + alpha * (*S2)(x));
  };
  sol.traction2 = [S1, S2, pref, r12, alpha](double x) {
    if (x <= 0.0) throw std::domain_error("traction: x > 0 required");
    return pref * (alpha * (*S1)(x) + (*S2)(x) / r12);
  };
  sol.extraction1 = sif_extract(sol.traction1, scheme.scale);
  sol.extraction2 = sif_extract(sol.traction2, scheme.scale);
  sol.K_II = sol.extraction1.K;
  sol.K_I = sol.extraction2.K;
  return sol;
}

PlaneResidualReport forward_identity_residual(const CrackSolutionPlane& sol,
                                              const LoadSpecPlane& load,
                                              const BimaterialParams& bp,
                                              const QuadratureScheme& scheme) {
  const PlaneOperatorMatrices op = identity_operator_matrices(bp);

  FieldCauchy Sw1(sol.w1, scheme);
  FieldCauchy Sw2(sol.w2, scheme);

  // S^(s) of the loading jumps (smooth parts numeric, point loads analytic)
  auto jump_S = [&scheme](const HalfLineLoad& l) {
    std::shared_ptr<CauchyOperator> op_smooth;
    if (!l.smooth.is_zero()) {
      op_smooth = std::make_shared<CauchyOperator>(l.smooth, scheme);
    }
    auto diracs = l.diracs;
    return [op_smooth, diracs](double x) {
      double acc = op_smooth ? (*op_smooth)(x) : 0.0;
      for (const auto& d : diracs) acc += d.coeff / (kPi * (x + d.offset));
      return acc;
    };
  };
  auto Sj1 = jump_S(load.skew1);
  auto Sj2 = jump_S(load.skew2);

  std::vector<double> xs;
  const double a = scheme.scale;
  const int n = 160;
  auto near_any_load = [&](double x) {
    for (const auto* l : {&load.sym1, &load.sym2, &load.skew1, &load.skew2}) {
      for (const auto& d : l->diracs) {
        if (std::abs(x + d.offset) < 0.05 * d.offset) return true;
      }
    }
    return false;
  };
  for (int i = 0; i < n; ++i) {
    const double x = -1e-2 * a * std::pow(1e4, i / (n - 1.0));
    if (!near_any_load(x)) xs.push_back(x);
  }

  PlaneResidualReport rep;
  double den = 0.0;
  for (double x : xs) {
    const Vector2d psym{load.sym1.smooth.is_zero() ? 0.0 : load.sym1.smooth(x),
                        load.sym2.smooth.is_zero() ? 0.0 : load.sym2.smooth(x)};
    const Vector2d pjump{load.skew1.smooth.is_zero() ? 0.0 : load.skew1.smooth(x),
                         load.skew2.smooth.is_zero() ? 0.0 : load.skew2.smooth(x)};
    const Vector2d Sjump{Sj1(x), Sj2(x)};
    const Vector2d lhs = psym + 0.5 * op.prefactor *
                                    (op.Aprime * pjump + op.Asecond * Sjump);

    const Vector2d Sw{Sw1(x), Sw2(x)};
    const Vector2d wv{sol.w1.value(x), sol.w2.value(x)};
    const Vector2d rhs = op.prefactor * (op.Bprime * Sw - bp.beta * op.E * wv);

    rep.residual1 += (lhs(0) - rhs(0)) * (lhs(0) - rhs(0));
    rep.residual2 += (lhs(1) - rhs(1)) * (lhs(1) - rhs(1));

    double ref = psym.cwiseAbs().sum() + pjump.cwiseAbs().sum();
    for (const auto* l : {&load.sym1, &load.sym2, &load.skew1, &load.skew2}) {
      for (const auto& d : l->diracs) {
        ref += std::abs(d.coeff) / (kPi * std::abs(x + d.offset));
      }
    }
    den += ref * ref;
  }
  const double num = rep.residual1 + rep.residual2;
  rep.residual1 = std::sqrt(rep.residual1);
  rep.residual2 = std::sqrt(rep.residual2);
  rep.relative = den == 0.0 ? (num == 0.0 ? 0.0 : INFINITY) : std::sqrt(num / den);
  return rep;
}

std::vector<SweepRow> skew_sif_sweep(double H11, double H22, double delta1,
                                     double delta2,
                                     const std::vector<double>& ratios,
                                     const std::vector<double>& alphas) {
  if (delta1 == 0.0 || delta2 == 0.0) {
    throw std::invalid_argument("skew_sif_sweep: delta1, delta2 must be nonzero");
  }
  std::vector<SweepRow> rows;
  rows.reserve(ratios.size() * alphas.size());
  const double a = 1.0;
  for (double ratio : ratios) {
    if (ratio <= 0.0) {
      throw std::invalid_argument("skew_sif_sweep: ratios must be positive");
    }
    for (double alpha : alphas) {
      if (!(std::abs(alpha) < 1.0)) continue;  // outside the operator's range
      DirectParams dp;
      dp.H11 = H11;
      dp.H22 = H22;
      dp.alpha = alpha;
      dp.delta1 = delta1;
      dp.delta2 = delta2;
      const BimaterialParams bp = make_bimaterial_direct(dp);
      const double F1 = 1.0, F2 = ratio;
      const CrackSolutionPlane sol = solve_plane_skew_line(F1, F2, a, bp);
      const double norm = std::sqrt(kPi * a) / std::sqrt(2.0);
      rows.push_back(SweepRow{alpha, ratio, sol.K_I * norm / (F2 * delta2),
                              sol.K_II * norm / (F1 * delta1)});
    }
  }
  return rows;
}

}  // namespace ifcrack
