#pragma once

#include <functional>
#include <vector>

#include "ifcrack/bimaterial.hpp"
#include "ifcrack/half_line.hpp"
#include "ifcrack/singular_ops.hpp"

namespace ifcrack {

// Antiplane face loading, split into the symmetric part <p3> and the jump
// [p3]. Line forces enter as point loads: the symmetric pair of magnitude F
// at distance a is <p3> = -F delta(x1 + a), the skew pair [p3] = -2F delta.
struct LoadSpecAntiplane {
  HalfLineLoad sym;
  HalfLineLoad skew;
};

LoadSpecAntiplane antiplane_line_force_sym(double F, double a);
LoadSpecAntiplane antiplane_line_force_skew(double F, double a);

enum class SolutionMethod { closed_form, numeric };

struct CrackSolutionAntiplane {
  HalfLineField opening_derivative;          // d[u3]/dx1, x1 < 0
  std::function<double(double)> opening;     // [u3], x1 < 0
  std::function<double(double)> traction;    // tau3+, x1 > 0
  double K3 = 0.0;
  SifExtraction extraction;                  // populated on the numeric path
  SolutionMethod method = SolutionMethod::closed_form;
};

// Symmetric line forces F at offset a:
//   d[u3]/dx1 = -(H33 F / pi) sqrt(-a/x) / (x + a)
//   [u3]      = (2 F H33 / pi) artanh(...)      (log-singular at x = -a)
//   tau3+     = (F / pi) sqrt(a/x) / (x + a)
//   K_III     = sqrt(2/(pi a)) F
CrackSolutionAntiplane solve_line_force_sym(double F, double a, double H33);

// Skew-symmetric line forces: the symmetric solution scaled by nu.
CrackSolutionAntiplane solve_line_force_skew(double F, double a, double H33,
                                             double nu);

// General loading. The combined density g = <p3> + (nu/2)[p3] is inverted
// through the tip-weighted inverse, the opening derivative is -H33 times the
// result, the traction follows from the compact transform, and K_III is
// extracted from the near-tip traction fit.
CrackSolutionAntiplane solve_general_antiplane(const LoadSpecAntiplane& load,
                                               const BimaterialParams& bp,
                                               const QuadratureScheme& scheme);

// Relative L2 residual of the governing identity
//   <p3> + (nu/2)[p3] + (1/H33) S^(s) d[u3]/dx1 = 0,  x1 < 0,
// on a log grid excluding point-load locations. Normalized by the L2 size of
// the identity's own terms (smooth load values plus the Cauchy image
// magnitude |c|/(pi |x+a|) of each point load).
double mode3_forward_residual(const CrackSolutionAntiplane& sol,
                              const LoadSpecAntiplane& load, double H33,
                              double nu, const QuadratureScheme& scheme);

}  // namespace ifcrack
