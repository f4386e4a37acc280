#pragma once

#include <functional>
#include <vector>

#include "ifcrack/bimaterial.hpp"
#include "ifcrack/half_line.hpp"
#include "ifcrack/singular_ops.hpp"

namespace ifcrack {

// Plane-strain face loading: symmetric parts <p1>, <p2> and jumps [p1], [p2].
// Symmetric line forces (F1, F2) at offset a are <pi> = -Fi delta(x1 + a);
// skew-symmetric ones are [pi] = -2 Fi delta(x1 + a).
struct LoadSpecPlane {
  HalfLineLoad sym1, sym2;
  HalfLineLoad skew1, skew2;
};

LoadSpecPlane plane_line_force_sym(double F1, double F2, double a);
LoadSpecPlane plane_line_force_skew(double F1, double F2, double a);

enum class PlaneMethod { closed_form, numeric };

// Component ordering follows the traction vector (tau1, tau2); the intensity
// factors pair as K = (K_II, K_I), K_II with tau1 and K_I with tau2.
struct CrackSolutionPlane {
  HalfLineField w1, w2;  // opening derivatives d[u1]/dx1, d[u2]/dx1
  std::function<double(double)> opening1, opening2;
  std::function<double(double)> traction1, traction2;
  double K_II = 0.0, K_I = 0.0;
  SifExtraction extraction1, extraction2;  // numeric path only
  PlaneMethod method = PlaneMethod::closed_form;
};

// Symmetric line forces, beta = 0 (|beta| > 1e-9 is refused as out of scope).
CrackSolutionPlane solve_plane_sym_line(double F1, double F2, double a,
                                        const BimaterialParams& bp);

// Skew-symmetric line forces, beta = 0 and lambda = 0, |alpha| < 1. The
// opening derivatives carry point-load terms (coefficient gamma) whose
// integrals are the constant opening offsets beyond x1 = -a; they are kept
// analytic throughout. [u1] jumps by +gamma F2 sqrt(H11 H22) across -a and
// [u2] by -gamma F1 sqrt(H11 H22); the jump is reported, not smoothed.
CrackSolutionPlane solve_plane_skew_line(double F1, double F2, double a,
                                         const BimaterialParams& bp);

// General smooth symmetric loading (no skew part), beta = 0, |alpha| < 1.
CrackSolutionPlane solve_general_plane_sym(const HalfLineFunction& p1,
                                           const HalfLineFunction& p2,
                                           const BimaterialParams& bp,
                                           const QuadratureScheme& scheme);

// L2 residual of the pair of governing identities for x1 < 0 evaluated on a
// log grid (point-load locations excluded), any beta. Normalization as in
// mode3_forward_residual.
struct PlaneResidualReport {
  double residual1 = 0.0, residual2 = 0.0;  // per-component absolute L2
  double relative = 0.0;                    // combined, against the term scale
};

PlaneResidualReport forward_identity_residual(const CrackSolutionPlane& sol,
                                              const LoadSpecPlane& load,
                                              const BimaterialParams& bp,
                                              const QuadratureScheme& scheme);

// Normalized skew-force intensity factors over an alpha grid:
//   Khat_I  = K_I  * sqrt(pi a) / (sqrt2 F2 delta2)
//   Khat_II = K_II * sqrt(pi a) / (sqrt2 F1 delta1)
// Rows ordered by (ratio, alpha); |alpha| >= 1 rows are skipped.
struct SweepRow {
  double alpha, ratio, Khat_I, Khat_II;
};

std::vector<SweepRow> skew_sif_sweep(double H11, double H22, double delta1,
                                     double delta2,
                                     const std::vector<double>& ratios,
                                     const std::vector<double>& alphas);

}  // namespace ifcrack
