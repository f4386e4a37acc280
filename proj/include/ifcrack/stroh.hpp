#pragma once

#include <optional>

#include "ifcrack/elastic_materials.hpp"
#include "ifcrack/types.hpp"

namespace ifcrack {

// Characteristic roots with positive imaginary part: mu1, mu2 from the
// quartic in-plane equation
//   s11' mu^4 - 2 s16' mu^3 + (2 s12' + s66') mu^2 - 2 s26' mu + s22' = 0
// and mu3 from the antiplane quadratic
//   s44' - 2 s45' mu + s55' mu^2 = 0.
// Plane roots are sorted by real part, ties by imaginary part.
struct StrohRoots {
  Complex mu1, mu2, mu3;
  bool degenerate = false;   // |mu1 - mu2| below tolerance (isotropic limit)
  double plane_residual = 0.0;
  double antiplane_residual = 0.0;
};

StrohRoots characteristic_roots(const ReducedCompliance& rc);

// mu1 + mu2 = a + i b,  mu1 mu2 = c + i d,  e = a d - b c.
struct PlaneRootSummary {
  double a, b, c, d, e;
};

PlaneRootSummary plane_root_summary(Complex mu1, Complex mu2);

// Surface admittance in closed form from the roots and reduced compliances.
// Hermitian positive definite, block diagonal (2x2 plane, 1x1 antiplane).
Matrix3cd surface_admittance_closed(const ReducedCompliance& rc,
                                    const StrohRoots& roots);

// Eigenvector route: [Q + (R + R^T) mu + T mu^2] f = 0, l = (R^T + mu T) f.
// Refused (throws std::domain_error) when the plane roots are degenerate;
// the closed form above stays finite there and must be used instead.
struct StrohEigensystem {
  Complex mu1, mu2, mu3;
  Matrix3cd F, L;
};

StrohEigensystem stroh_eigensystem(const StrohMatrices& sm);

// Y = i F L^{-1}.
Matrix3cd surface_admittance_eigen(const StrohEigensystem& es);

// Full per-material bundle used by the bimaterial stage.
struct StrohSystem {
  StrohRoots roots;
  PlaneRootSummary summary;
  Matrix3cd Y;
  std::optional<StrohEigensystem> eigen;  // absent when plane roots degenerate
};

StrohSystem make_stroh_system(const MaterialSpec& m);

}  // namespace ifcrack
