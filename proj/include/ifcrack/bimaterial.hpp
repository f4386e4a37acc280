#pragma once

#include <optional>
#include <utility>

#include "ifcrack/stroh.hpp"
#include "ifcrack/types.hpp"

namespace ifcrack {

// Everything the solvers need about a material pair. The plane 2x2 blocks of
// H and W decompose as
//   H = H' + i beta  sqrt(H11 H22) E,   H' = [[H11, alpha*s], [alpha*s, H22]]
//   W = W' - i gamma sqrt(H11 H22) E,   W' = [[delta1*H11, lambda*s],
//                                             [lambda*s, delta2*H22]]
// with s = sqrt(H11 H22) and E = [[0,-1],[1,0]].
struct BimaterialParams {
  Matrix3cd H = Matrix3cd::Zero();
  Matrix3cd W = Matrix3cd::Zero();
  double H33 = 0.0, W33 = 0.0, nu = 0.0;
  double H11 = 0.0, H22 = 0.0;
  double alpha = 0.0, beta = 0.0;
  double delta1 = 0.0, delta2 = 0.0, lambda = 0.0, gamma = 0.0;
  double epsilon = 0.0;
};

// H = Y1 + conj(Y2), W = Y1 - conj(Y2); H must come out Hermitian PD.
std::pair<Matrix3cd, Matrix3cd> bimaterial_matrices(const Matrix3cd& Y1,
                                                    const Matrix3cd& Y2);

struct AntiplaneParams {
  double H33, W33, nu;
};

// From the per-material antiplane discriminant roots sqrt(s44's55'-s45'^2).
AntiplaneParams antiplane_parameters(double root1, double root2);

struct DundursParams {
  double H11, H22, alpha, beta, delta1, delta2, lambda, gamma;
};

DundursParams dundurs_parameters(const PlaneRootSummary& s1,
                                 const ReducedCompliance& rc1,
                                 const PlaneRootSummary& s2,
                                 const ReducedCompliance& rc2);

// epsilon = (1/2pi) ln((1-beta)/(1+beta)), |beta| < 1.
double oscillation_index(double beta);

// Fourier multipliers taking the transformed interface traction to the
// transformed jump and average of the singular displacement, at frequency xi.
struct WeightFunctionTransforms {
  Matrix3cd jump_multiplier;     // -> [U]^+
  Matrix3cd average_multiplier;  // -> <U>
};

WeightFunctionTransforms weight_function_transforms(double xi,
                                                    const Matrix3cd& H,
                                                    const Matrix3cd& W);

// Constant matrices of the plane-strain operator identities.
struct PlaneOperatorMatrices {
  Matrix2d Aprime;   // A'
  Matrix2d Asecond;  // A''
  Matrix2d Bprime;   // B'
  Matrix2d E;        // [[0,-1],[1,0]]
  double prefactor;  // 1 / (sqrt(H11 H22) (alpha^2 + beta^2 - 1))
};

PlaneOperatorMatrices identity_operator_matrices(const BimaterialParams& bp);

struct AlphaInterval {
  double lo, hi;
};

// Maximal alpha interval keeping both reconstructed plane admittance blocks
// Hermitian positive definite; endpoints located by bisection to `tol`.
AlphaInterval alpha_admissible_interval(double H11, double H22, double delta1,
                                        double delta2, double lambda,
                                        double beta, double gamma,
                                        double tol = 1e-6);

// Plane 2x2 admittance blocks of the two materials reconstructed from the
// nondimensional parameter set (used by the interval search and tests).
std::pair<Matrix2cd, Matrix2cd> plane_admittance_from_params(
    double H11, double H22, double alpha, double beta, double delta1,
    double delta2, double lambda, double gamma);

BimaterialParams make_bimaterial(const MaterialSpec& m1, const MaterialSpec& m2);
BimaterialParams make_bimaterial(const StrohSystem& s1,
                                 const ReducedCompliance& rc1,
                                 const StrohSystem& s2,
                                 const ReducedCompliance& rc2);

// Direct route for parameter-level studies: no elastic constants involved.
// H33/nu stay unset (zero) unless provided; plane blocks of H and W are
// rebuilt from the parameters.
struct DirectParams {
  double H11 = 1.0, H22 = 1.0;
  double alpha = 0.0, beta = 0.0;
  double delta1 = 0.0, delta2 = 0.0, lambda = 0.0, gamma = 0.0;
  std::optional<double> H33;
  std::optional<double> nu;
};

BimaterialParams make_bimaterial_direct(const DirectParams& p);

}  // namespace ifcrack
