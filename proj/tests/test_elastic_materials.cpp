#include <gtest/gtest.h>

#include <cmath>

#include "ifcrack/elastic_materials.hpp"
#include "ifcrack/stroh.hpp"
#include "oracles.hpp"

using namespace ifcrack;

namespace {

Matrix6d isotropic_compliance(double E, double nu) {
  Matrix6d s = Matrix6d::Zero();
  const double G = E / (2.0 * (1.0 + nu));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s(i, j) = (i == j ? 1.0 : -nu) / E;
  s(3, 3) = s(4, 4) = s(5, 5) = 1.0 / G;
  return s;
}

}  // namespace

// --- validate_monoclinic ---

TEST(ValidateMonoclinic, IsotropicPassesWithZeroViolation) {
  const auto rep = validate_monoclinic(isotropic_compliance(2.0, 0.3));
  EXPECT_TRUE(rep.pass);
  EXPECT_EQ(rep.zero_pattern_violation, 0.0);
  EXPECT_EQ(rep.symmetry_violation, 0.0);
  EXPECT_GT(rep.min_eigenvalue, 0.0);
}

TEST(ValidateMonoclinic, OrthotropicPasses) {
  // orthotropic is a subgroup of the monoclinic class
  Matrix6d c = Matrix6d::Zero();
  c(0, 0) = 10.0; c(1, 1) = 8.0; c(2, 2) = 6.0;
  c(0, 1) = c(1, 0) = 3.0; c(0, 2) = c(2, 0) = 2.0; c(1, 2) = c(2, 1) = 1.5;
  c(3, 3) = 2.0; c(4, 4) = 2.5; c(5, 5) = 3.0;
  EXPECT_TRUE(validate_monoclinic(c).pass);
}

TEST(ValidateMonoclinic, InjectedCouplingFailsWithReportedViolation) {
  // scale so the largest entry is 1: normalized violation equals |c14|
  Matrix6d c = isotropic_compliance(2.0, 0.25);
  c /= c.cwiseAbs().maxCoeff();
  c(0, 3) = c(3, 0) = 0.1;
  const auto rep = validate_monoclinic(c);
  EXPECT_FALSE(rep.pass);
  EXPECT_NEAR(rep.zero_pattern_violation, 0.1, 1e-12);
}

TEST(ValidateMonoclinic, AsymmetryDetected) {
  Matrix6d c = isotropic_compliance(2.0, 0.25);
  c(0, 1) += 1e-3;
  const auto rep = validate_monoclinic(c);
  EXPECT_FALSE(rep.symmetric_ok);
}

TEST(ValidateMonoclinic, IndefiniteDetected) {
  Matrix6d c = isotropic_compliance(2.0, 0.25);
  c(5, 5) = -1.0;
  const auto rep = validate_monoclinic(c);
  EXPECT_FALSE(rep.positive_definite);
  EXPECT_FALSE(rep.pass);
}

// --- MaterialSpec construction ---

TEST(MaterialSpec, RejectsInvalidInputs) {
  Matrix6d bad = isotropic_compliance(2.0, 0.25);
  bad(0, 3) = bad(3, 0) = 0.5;
  EXPECT_THROW(MaterialSpec::from_compliance("bad", bad), std::invalid_argument);
  Matrix6d indef = Matrix6d::Identity();
  indef(2, 2) = -1.0;
  EXPECT_THROW(MaterialSpec::from_stiffness("indef", indef), std::invalid_argument);
}

TEST(MaterialSpec, StiffnessComplianceRoundTrip) {
  for (unsigned seed : {1u, 2u, 3u, 4u, 5u}) {
    const Matrix6d c = oracles::random_monoclinic_stiffness(seed);
    const MaterialSpec m = MaterialSpec::from_stiffness("rt", c);
    const Matrix6d back = m.compliance().inverse();
    EXPECT_LT((back - c).cwiseAbs().maxCoeff() / c.cwiseAbs().maxCoeff(), 1e-10)
        << "seed " << seed;
  }
}

// --- reduced_compliance ---

TEST(ReducedCompliance, NoCouplingLeavesMatrixUnchanged) {
  // s_i3 = 0 for i != 3 kills the subtraction term
  Matrix6d s = Matrix6d::Identity() * 0.5;
  s(0, 1) = s(1, 0) = -0.1;
  const Matrix6d sp = reduced_compliance(s);
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      if (i == 2 || j == 2) {
        EXPECT_EQ(sp(i, j), 0.0);
      } else {
        EXPECT_DOUBLE_EQ(sp(i, j), s(i, j));
      }
    }
  }
}

TEST(ReducedCompliance, IsotropicPlaneStrainModulus) {
  const double E = 2.3, nu = 0.31;
  const Matrix6d sp = reduced_compliance(isotropic_compliance(E, nu));
  EXPECT_NEAR(sp(0, 0), (1.0 - nu * nu) / E, 1e-15);
}

TEST(ReducedCompliance, MatchesElementwiseRecomputation) {
  // independent oracle: direct evaluation of the defining formula
  const Matrix6d c = oracles::random_monoclinic_stiffness(42);
  const MaterialSpec m = MaterialSpec::from_stiffness("mono", c);
  const Matrix6d s = m.compliance();
  const Matrix6d sp = reduced_compliance(m).sp;
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      const double want = s(i, j) - s(i, 2) * s(2, j) / s(2, 2);
      EXPECT_NEAR(sp(i, j), want, 1e-14 * std::abs(s(i, j)) + 1e-16);
    }
  }
}

TEST(ReducedCompliance, IdempotentOnAlreadyReducedMatrices) {
  const Matrix6d c = oracles::random_monoclinic_stiffness(7);
  const MaterialSpec m = MaterialSpec::from_stiffness("mono", c);
  Matrix6d sp = reduced_compliance(m).sp;
  sp(2, 2) = 1.0;  // restore a positive s33 so the formula is defined
  const Matrix6d sp2 = reduced_compliance(sp);
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      if (i == 2 || j == 2) continue;
      EXPECT_NEAR(sp2(i, j), sp(i, j), 1e-15);
    }
  }
}

TEST(ReducedCompliance, RejectsNonpositiveS33) {
  Matrix6d s = Matrix6d::Identity();
  s(2, 2) = 0.0;
  EXPECT_THROW(reduced_compliance(s), std::invalid_argument);
}

TEST(ReducedCompliance, SubBlocksPositiveDefinite) {
  for (unsigned seed = 0; seed < 8; ++seed) {
    const MaterialSpec m = MaterialSpec::from_stiffness(
        "mono", oracles::random_monoclinic_stiffness(seed));
    const auto rc = reduced_compliance(m);
    Eigen::Matrix3d in_plane;
    in_plane << rc.s11(), rc.s12(), rc.s16(),
                rc.s12(), rc.s22(), rc.s26(),
                rc.s16(), rc.s26(), rc.s66();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(in_plane);
    EXPECT_GT(es.eigenvalues().minCoeff(), 0.0);
    EXPECT_GT(rc.s44() * rc.s55() - rc.s45() * rc.s45(), 0.0);
  }
}

// --- stroh_matrices ---

TEST(StrohMatrices, IsotropicDiagonalPattern) {
  const MaterialSpec m = isotropic_material("iso", 2.0, 0.3);
  const auto sm = stroh_matrices(m);
  const Matrix6d& c = m.stiffness();
  EXPECT_NEAR(sm.Q(0, 0), c(0, 0), 1e-12);
  EXPECT_NEAR(sm.Q(1, 1), c(5, 5), 1e-12);
  EXPECT_NEAR(sm.Q(2, 2), c(4, 4), 1e-12);
  EXPECT_NEAR(sm.Q(0, 1), 0.0, 1e-12);  // c16 = 0 for isotropy
  EXPECT_NEAR(sm.T(0, 1), 0.0, 1e-12);  // c26
  EXPECT_NEAR(sm.R(2, 2), 0.0, 1e-12);  // c45
}

TEST(StrohMatrices, MonoclinicEntryReadOff) {
  const Matrix6d c = oracles::random_monoclinic_stiffness(3);
  const MaterialSpec m = MaterialSpec::from_stiffness("mono", c);
  const auto sm = stroh_matrices(m);
  EXPECT_DOUBLE_EQ(sm.Q(0, 1), c(0, 5));  // c16
  EXPECT_DOUBLE_EQ(sm.T(0, 1), c(1, 5));  // c26
  EXPECT_DOUBLE_EQ(sm.R(2, 2), c(3, 4));  // c45
  // Q, T symmetric; T positive definite
  EXPECT_TRUE(sm.Q.isApprox(sm.Q.transpose()));
  EXPECT_TRUE(sm.T.isApprox(sm.T.transpose()));
  Eigen::SelfAdjointEigenSolver<Matrix3d> es(sm.T);
  EXPECT_GT(es.eigenvalues().minCoeff(), 0.0);
}

TEST(StrohMatrices, MonoclinicZeroPatternExact) {
  const Matrix6d c = oracles::random_monoclinic_stiffness(11);
  const auto sm = stroh_matrices(MaterialSpec::from_stiffness("mono", c));
  for (int i = 0; i < 2; ++i) {
    EXPECT_EQ(sm.R(i, 2), 0.0);
    EXPECT_EQ(sm.R(2, i), 0.0);
    EXPECT_EQ(sm.Q(i, 2), 0.0);
    EXPECT_EQ(sm.T(i, 2), 0.0);
  }
}

TEST(StrohMatrices, EquilibriumResidualOfStrohSolution) {
  // u(x1,x2) = 2 Re[F g(z)] with g_j analytic must satisfy the balance
  // equation; checked by finite differences on a random monoclinic sample.
  const Matrix6d c = oracles::random_monoclinic_stiffness(19);
  const MaterialSpec m = MaterialSpec::from_stiffness("mono", c);
  const auto sm = stroh_matrices(m);
  const auto es = stroh_eigensystem(sm);

  const Complex mus[3] = {es.mu1, es.mu2, es.mu3};
  auto field = [&](double x1, double x2) {
    Eigen::Vector3d u = Eigen::Vector3d::Zero();
    for (int j = 0; j < 3; ++j) {
      const Complex z = x1 + mus[j] * x2;
      const Complex g = std::exp(Complex(0.0, 1.0) * z);  // analytic
      for (int i = 0; i < 3; ++i) {
        u(i) += 2.0 * std::real(es.F(i, j) * g);
      }
    }
    return u;
  };
  const double h = 1e-4;
  const auto d = oracles::second_differences(field, 0.3, 0.7, h);
  const Eigen::Vector3d res =
      sm.Q * d.u11 + (sm.R + sm.R.transpose()) * d.u12 + sm.T * d.u22;
  const double scale = c.cwiseAbs().maxCoeff() * field(0.3, 0.7).norm();
  EXPECT_LT(res.norm() / scale, 1e-5);
}
