#pragma once

#include <string>

#include "ifcrack/types.hpp"

namespace ifcrack {

// Diagnostics for the monoclinic symmetry check (mirror plane x3 = 0).
// Violations are normalized by the largest entry of the matrix.
struct MonoclinicReport {
  double symmetry_violation = 0.0;
  double zero_pattern_violation = 0.0;
  double min_eigenvalue = 0.0;  // of the symmetrized matrix, unnormalized
  bool symmetric_ok = false;
  bool positive_definite = false;
  bool pattern_ok = false;
  bool pass = false;
};

MonoclinicReport validate_monoclinic(const Matrix6d& m, double tol = 1e-9);

// Elastic constants of one half-plane in 6x6 contracted notation. Either
// the stiffness or the compliance may be supplied; internally everything is
// canonicalized to compliance. Units are the caller's; all inputs to one
// analysis must be mutually consistent.
class MaterialSpec {
 public:
  static MaterialSpec from_stiffness(std::string id, const Matrix6d& c,
                                     double tol = 1e-9);
  static MaterialSpec from_compliance(std::string id, const Matrix6d& s,
                                      double tol = 1e-9);

  const std::string& id() const { return id_; }
  const Matrix6d& compliance() const { return compliance_; }
  const Matrix6d& stiffness() const { return stiffness_; }

 private:
  MaterialSpec() = default;
  std::string id_;
  Matrix6d compliance_;
  Matrix6d stiffness_;
};

// Convenience: isotropic constants (Young's modulus E, Poisson ratio nu).
MaterialSpec isotropic_material(std::string id, double E, double nu);

// In-plane reduction that eliminates the x3-normal strain row/column:
// sp(i,j) = s(i,j) - s(i,3)*s(3,j)/s(3,3); row/column 3 of the result is zero.
struct ReducedCompliance {
  Matrix6d sp;

  double s11() const { return sp(0, 0); }
  double s12() const { return sp(0, 1); }
  double s16() const { return sp(0, 5); }
  double s22() const { return sp(1, 1); }
  double s26() const { return sp(1, 5); }
  double s66() const { return sp(5, 5); }
  double s44() const { return sp(3, 3); }
  double s45() const { return sp(3, 4); }
  double s55() const { return sp(4, 4); }

  // sqrt(s44' s55' - s45'^2); throws if the antiplane block is inadmissible
  double antiplane_discriminant_root() const;
};

Matrix6d reduced_compliance(const Matrix6d& s);
ReducedCompliance reduced_compliance(const MaterialSpec& m);

// Q_ik = C_i1k1, R_ik = C_i1k2, T_ik = C_i2k2 in the monoclinic block form.
struct StrohMatrices {
  Matrix3d Q, R, T;
};

StrohMatrices stroh_matrices(const MaterialSpec& m);

}  // namespace ifcrack
