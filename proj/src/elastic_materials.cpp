#include "ifcrack/elastic_materials.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace ifcrack {

namespace {

// Zero pattern of a monoclinic material with mirror plane x3 = 0: entries
// coupling one in-plane index {1,2,3,6} with one antiplane index {4,5}.
constexpr std::pair<int, int> kZeroPattern[] = {
    {0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}};

Matrix6d invert_spd6(const Matrix6d& m, const char* what) {
  Eigen::LLT<Matrix6d> llt(m);
  if (llt.info() != Eigen::Success) {
    throw std::invalid_argument(std::string(what) +
                                ": matrix is singular or not positive definite");
  }
  return llt.solve(Matrix6d::Identity());
}

}  // namespace

MonoclinicReport validate_monoclinic(const Matrix6d& m, double tol) {
  MonoclinicReport rep;
  const double scale = m.cwiseAbs().maxCoeff();
  if (scale == 0.0) {
    return rep;  // all-zero matrix fails positive definiteness below anyway
  }

  rep.symmetry_violation = (m - m.transpose()).cwiseAbs().maxCoeff() / scale;
  rep.symmetric_ok = rep.symmetry_violation <= tol;

  for (auto [i, j] : kZeroPattern) {
    rep.zero_pattern_violation =
        std::max(rep.zero_pattern_violation, std::abs(m(i, j)) / scale);
    rep.zero_pattern_violation =
        std::max(rep.zero_pattern_violation, std::abs(m(j, i)) / scale);
  }
  rep.pattern_ok = rep.zero_pattern_violation <= tol;

  Matrix6d sym = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix6d> es(sym);
  rep.min_eigenvalue = es.eigenvalues().minCoeff();
  rep.positive_definite = rep.min_eigenvalue > 0.0;

  rep.pass = rep.symmetric_ok && rep.pattern_ok && rep.positive_definite;
  return rep;
}

MaterialSpec MaterialSpec::from_stiffness(std::string id, const Matrix6d& c,
                                          double tol) {
  MonoclinicReport rep = validate_monoclinic(c, tol);
  if (!rep.pass) {
    throw std::invalid_argument(
        "material '" + id + "': stiffness fails validation (symmetry " +
        std::to_string(rep.symmetry_violation) + ", zero pattern " +
        std::to_string(rep.zero_pattern_violation) + ", min eigenvalue " +
        std::to_string(rep.min_eigenvalue) + ")");
  }
  MaterialSpec m;
  m.id_ = std::move(id);
  m.stiffness_ = 0.5 * (c + c.transpose());
  m.compliance_ = invert_spd6(m.stiffness_, "stiffness");
  return m;
}

MaterialSpec MaterialSpec::from_compliance(std::string id, const Matrix6d& s,
                                           double tol) {
  MonoclinicReport rep = validate_monoclinic(s, tol);
  if (!rep.pass) {
    throw std::invalid_argument(
        "material '" + id + "': compliance fails validation (symmetry " +
        std::to_string(rep.symmetry_violation) + ", zero pattern " +
        std::to_string(rep.zero_pattern_violation) + ", min eigenvalue " +
        std::to_string(rep.min_eigenvalue) + ")");
  }
  MaterialSpec m;
  m.id_ = std::move(id);
  m.compliance_ = 0.5 * (s + s.transpose());
  m.stiffness_ = invert_spd6(m.compliance_, "compliance");
  return m;
}

MaterialSpec isotropic_material(std::string id, double E, double nu) {
  if (E <= 0.0 || nu <= -1.0 || nu >= 0.5) {
    throw std::invalid_argument("isotropic_material: need E > 0 and -1 < nu < 0.5");
  }
  Matrix6d s = Matrix6d::Zero();
  const double G = E / (2.0 * (1.0 + nu));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      s(i, j) = (i == j ? 1.0 : -nu) / E;
    }
  }
  s(3, 3) = s(4, 4) = s(5, 5) = 1.0 / G;
  return MaterialSpec::from_compliance(std::move(id), s);
}

Matrix6d reduced_compliance(const Matrix6d& s) {
  if (s(2, 2) <= 0.0) {
    throw std::invalid_argument("reduced_compliance: s33 must be positive");
  }
  Matrix6d sp;
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      sp(i, j) = s(i, j) - s(i, 2) * s(2, j) / s(2, 2);
    }
  }
  return sp;
}

ReducedCompliance reduced_compliance(const MaterialSpec& m) {
  return ReducedCompliance{reduced_compliance(m.compliance())};
}

double ReducedCompliance::antiplane_discriminant_root() const {
  const double disc = s44() * s55() - s45() * s45();
  if (disc <= 0.0) {
    throw std::invalid_argument(
        "antiplane compliances inadmissible: s44' s55' - s45'^2 <= 0");
  }
  return std::sqrt(disc);
}

StrohMatrices stroh_matrices(const MaterialSpec& m) {
  const Matrix6d& c = m.stiffness();
  StrohMatrices sm;
  sm.Q << c(0, 0), c(0, 5), 0.0,
          c(0, 5), c(5, 5), 0.0,
          0.0,     0.0,     c(4, 4);
  sm.R << c(0, 5), c(0, 1), 0.0,
          c(5, 5), c(1, 5), 0.0,
          0.0,     0.0,     c(3, 4);
  sm.T << c(5, 5), c(1, 5), 0.0,
          c(1, 5), c(1, 1), 0.0,
          0.0,     0.0,     c(3, 3);
  return sm;
}

}  // namespace ifcrack
