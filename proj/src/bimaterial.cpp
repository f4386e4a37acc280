#include "ifcrack/bimaterial.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ifcrack {

namespace {

const Matrix2d kE = (Matrix2d() << 0.0, -1.0, 1.0, 0.0).finished();

void require_hermitian_pd(const Matrix3cd& m, const char* what) {
  const double scale = m.cwiseAbs().maxCoeff();
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * scale) {
    throw std::invalid_argument(std::string(what) + ": not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Matrix3cd> es(m);
  if (es.eigenvalues().minCoeff() <= 0.0) {
    throw std::invalid_argument(std::string(what) + ": not positive definite");
  }
}

double min_eigenvalue_2x2(const Matrix2cd& m) {
  const double tr = m(0, 0).real() + m(1, 1).real();
  const double det = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).real();
  const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
  return 0.5 * (tr - disc);
}

}  // namespace

std::pair<Matrix3cd, Matrix3cd> bimaterial_matrices(const Matrix3cd& Y1,
                                                    const Matrix3cd& Y2) {
  require_hermitian_pd(Y1, "bimaterial_matrices: Y1");
  require_hermitian_pd(Y2, "bimaterial_matrices: Y2");
  Matrix3cd H = Y1 + Y2.conjugate();
  Matrix3cd W = Y1 - Y2.conjugate();
  require_hermitian_pd(H, "bimaterial_matrices: H");
  return {H, W};
}

AntiplaneParams antiplane_parameters(double root1, double root2) {
  if (root1 <= 0.0 || root2 <= 0.0) {
    throw std::invalid_argument(
        "antiplane_parameters: discriminant roots must be positive");
  }
  AntiplaneParams p;
  p.H33 = root1 + root2;
  p.W33 = root1 - root2;
  p.nu = p.W33 / p.H33;
  return p;
}

DundursParams dundurs_parameters(const PlaneRootSummary& s1,
                                 const ReducedCompliance& rc1,
                                 const PlaneRootSummary& s2,
                                 const ReducedCompliance& rc2) {
  const double b1 = s1.b * rc1.s11(), b2 = s2.b * rc2.s11();
  const double e1 = s1.e * rc1.s11(), e2 = s2.e * rc2.s11();
  const double d1 = s1.d * rc1.s11(), d2 = s2.d * rc2.s11();
  const double g1 = rc1.s11() * s1.c - rc1.s12();
  const double g2 = rc2.s11() * s2.c - rc2.s12();

  DundursParams p;
  p.H11 = b1 + b2;
  p.H22 = e1 + e2;
  if (p.H11 <= 0.0 || p.H22 <= 0.0) {
    throw std::invalid_argument("dundurs_parameters: H11 and H22 must be positive");
  }
  const double s = std::sqrt(p.H11 * p.H22);
  p.alpha = (d1 + d2) / s;
  p.beta = (g1 - g2) / s;
  p.delta1 = (b1 - b2) / p.H11;
  p.delta2 = (e1 - e2) / p.H22;
  p.lambda = (d1 - d2) / s;
  p.gamma = -(g1 + g2) / s;
  return p;
}

double oscillation_index(double beta) {
  if (!(std::abs(beta) < 1.0)) {
    throw std::invalid_argument("oscillation_index: |beta| must be < 1");
  }
  return std::log((1.0 - beta) / (1.0 + beta)) / (2.0 * std::numbers::pi);
}

WeightFunctionTransforms weight_function_transforms(double xi,
                                                    const Matrix3cd& H,
                                                    const Matrix3cd& W) {
  if (xi == 0.0) {
    throw std::invalid_argument("weight_function_transforms: xi must be nonzero");
  }
  const double sgn = xi > 0.0 ? 1.0 : -1.0;
  const double axi = std::abs(xi);
  const Complex i(0.0, 1.0);
  WeightFunctionTransforms t;
  t.jump_multiplier =
      -(H.real().cast<Complex>() - i * sgn * H.imag().cast<Complex>()) / axi;
  t.average_multiplier =
      -(W.real().cast<Complex>() - i * sgn * W.imag().cast<Complex>()) /
      (2.0 * axi);
  return t;
}

PlaneOperatorMatrices identity_operator_matrices(const BimaterialParams& bp) {
  const double a = bp.alpha, b = bp.beta;
  const double pole = a * a + b * b - 1.0;
  if (std::abs(pole) < 1e-12 * (1.0 + a * a + b * b)) {
    throw std::domain_error(
        "identity_operator_matrices: alpha^2 + beta^2 = 1 (operator pole)");
  }
  const double s = std::sqrt(bp.H11 * bp.H22);
  PlaneOperatorMatrices m;
  m.E = kE;
  m.prefactor = 1.0 / (s * pole);
  m.Aprime << s * (a * bp.lambda - b * bp.gamma - bp.delta1),
      bp.H22 * (bp.lambda - a * bp.delta2),
      bp.H11 * (bp.lambda - a * bp.delta1),
      s * (a * bp.lambda - b * bp.gamma - bp.delta2);
  m.Asecond << -s * (a * bp.gamma + b * bp.lambda),
      bp.H22 * (bp.gamma + b * bp.delta2),
      -bp.H11 * (bp.gamma + b * bp.delta1),
      s * (a * bp.gamma + b * bp.lambda);
  m.Bprime << std::sqrt(bp.H22 / bp.H11), a, a, std::sqrt(bp.H11 / bp.H22);
  return m;
}

std::pair<Matrix2cd, Matrix2cd> plane_admittance_from_params(
    double H11, double H22, double alpha, double beta, double delta1,
    double delta2, double lambda, double gamma) {
  const double s = std::sqrt(H11 * H22);
  Matrix2d Hp, Wp;
  Hp << H11, alpha * s, alpha * s, H22;
  Wp << delta1 * H11, lambda * s, lambda * s, delta2 * H22;
  const Complex i(0.0, 1.0);
  Matrix2cd H = Hp.cast<Complex>() + i * beta * s * kE.cast<Complex>();
  Matrix2cd W = Wp.cast<Complex>() - i * gamma * s * kE.cast<Complex>();
  Matrix2cd Y1 = 0.5 * (H + W);
  Matrix2cd Y2 = (0.5 * (H - W)).conjugate();
  return {Y1, Y2};
}

AlphaInterval alpha_admissible_interval(double H11, double H22, double delta1,
                                        double delta2, double lambda,
                                        double beta, double gamma, double tol) {
  if (H11 <= 0.0 || H22 <= 0.0) {
    throw std::invalid_argument("alpha_admissible_interval: H11, H22 > 0 required");
  }
  auto admissible = [&](double alpha) {
    auto [Y1, Y2] = plane_admittance_from_params(H11, H22, alpha, beta, delta1,
                                                 delta2, lambda, gamma);
    return min_eigenvalue_2x2(Y1) > 0.0 && min_eigenvalue_2x2(Y2) > 0.0;
  };
  if (!admissible(0.0)) {
    throw std::domain_error(
        "alpha_admissible_interval: parameter set inadmissible at alpha = 0");
  }
  // PD fails for |alpha| beyond this bound regardless of the other terms.
  const double cap =
      std::abs(lambda) +
      std::sqrt((1.0 + std::abs(delta1)) * (1.0 + std::abs(delta2))) + 1.0;

  auto bisect = [&](double sgn) {
    double good = 0.0, bad = sgn * cap;
    while (std::abs(bad - good) > tol) {
      double mid = 0.5 * (good + bad);
      (admissible(mid) ? good : bad) = mid;
    }
    return good;
  };
  return AlphaInterval{bisect(-1.0), bisect(+1.0)};
}

BimaterialParams make_bimaterial(const StrohSystem& s1,
                                 const ReducedCompliance& rc1,
                                 const StrohSystem& s2,
                                 const ReducedCompliance& rc2) {
  BimaterialParams bp;
  std::tie(bp.H, bp.W) = bimaterial_matrices(s1.Y, s2.Y);

  const AntiplaneParams ap = antiplane_parameters(
      rc1.antiplane_discriminant_root(), rc2.antiplane_discriminant_root());
  bp.H33 = ap.H33;
  bp.W33 = ap.W33;
  bp.nu = ap.nu;

  const DundursParams dp = dundurs_parameters(s1.summary, rc1, s2.summary, rc2);
  bp.H11 = dp.H11;
  bp.H22 = dp.H22;
  bp.alpha = dp.alpha;
  bp.beta = dp.beta;
  bp.delta1 = dp.delta1;
  bp.delta2 = dp.delta2;
  bp.lambda = dp.lambda;
  bp.gamma = dp.gamma;
  bp.epsilon = oscillation_index(bp.beta);
  return bp;
}

BimaterialParams make_bimaterial(const MaterialSpec& m1, const MaterialSpec& m2) {
  const StrohSystem s1 = make_stroh_system(m1);
  const StrohSystem s2 = make_stroh_system(m2);
  return make_bimaterial(s1, reduced_compliance(m1), s2, reduced_compliance(m2));
}

BimaterialParams make_bimaterial_direct(const DirectParams& p) {
  BimaterialParams bp;
  bp.H11 = p.H11;
  bp.H22 = p.H22;
  if (bp.H11 <= 0.0 || bp.H22 <= 0.0) {
    throw std::invalid_argument("make_bimaterial_direct: H11, H22 > 0 required");
  }
  bp.alpha = p.alpha;
  bp.beta = p.beta;
  bp.delta1 = p.delta1;
  bp.delta2 = p.delta2;
  bp.lambda = p.lambda;
  bp.gamma = p.gamma;
  bp.epsilon = oscillation_index(bp.beta);

  const double s = std::sqrt(bp.H11 * bp.H22);
  Matrix2d Hp, Wp;
  Hp << bp.H11, bp.alpha * s, bp.alpha * s, bp.H22;
  Wp << bp.delta1 * bp.H11, bp.lambda * s, bp.lambda * s, bp.delta2 * bp.H22;
  const Complex i(0.0, 1.0);
  bp.H.topLeftCorner<2, 2>() =
      Hp.cast<Complex>() + i * bp.beta * s * kE.cast<Complex>();
  bp.W.topLeftCorner<2, 2>() =
      Wp.cast<Complex>() - i * bp.gamma * s * kE.cast<Complex>();

  if (p.H33) {
    if (*p.H33 <= 0.0) {
      throw std::invalid_argument("make_bimaterial_direct: H33 must be positive");
    }
    bp.H33 = *p.H33;
    bp.H(2, 2) = bp.H33;
    if (p.nu) {
      if (!(std::abs(*p.nu) < 1.0)) {
        throw std::invalid_argument("make_bimaterial_direct: |nu| must be < 1");
      }
      bp.nu = *p.nu;
      bp.W33 = bp.nu * bp.H33;
      bp.W(2, 2) = bp.W33;
    }
  }
  return bp;
}

}  // namespace ifcrack
