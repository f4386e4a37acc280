#pragma once

// Test-only oracles, independent of the library's numerical paths:
//  - adaptive Simpson quadrature and a PV variant built on it,
//  - Durand-Kerner polynomial roots (vs. the companion-matrix route),
//  - random admissible monoclinic material matrices,
//  - second-order finite differences for field residual checks.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "ifcrack/types.hpp"

namespace oracles {

inline double adaptive_simpson_rec(const std::function<double(double)>& f,
                                   double a, double b, double fa, double fm,
                                   double fb, double whole, double tol,
                                   int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0) return left + right;
  if (std::abs(left + right - whole) <= 15.0 * tol) {
    return left + right + (left + right - whole) / 15.0;
  }
  return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a,
                        double b, double tol = 1e-11, int depth = 48) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, depth);
}

// PV int_{-X}^{0} f(eta)/(x-eta) deta for x in (-X, 0), f smooth at x.
inline double pv_cauchy(const std::function<double(double)>& f, double x,
                        double X, double tol = 1e-11) {
  if (!(x < 0.0 && -X < x)) throw std::invalid_argument("pv_cauchy: x in (-X,0)");
  const double fx = f(x);
  auto reg = [&](double eta) {
    const double d = x - eta;
    if (std::abs(d) < 1e-14 * std::abs(x)) return 0.0;  // removable point
    return (f(eta) - fx) / d;
  };
  // split at the singular point so Simpson never brackets it
  const double i1 = integrate(reg, -X, x, tol);
  const double i2 = integrate(reg, x, 0.0, tol);
  return i1 + i2 + fx * std::log((x + X) / (-x));
}

// plain int_{-X}^{0} f(eta)/(x-eta) deta for x > 0
inline double cauchy_regular(const std::function<double(double)>& f, double x,
                             double X, double tol = 1e-11) {
  if (!(x > 0.0)) throw std::invalid_argument("cauchy_regular: x > 0");
  return integrate([&](double eta) { return f(eta) / (x - eta); }, -X, 0.0, tol);
}

// Durand-Kerner: all complex roots of sum_k c[k] z^k, c.back() != 0.
inline std::vector<std::complex<double>> poly_roots(
    const std::vector<double>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<std::complex<double>> z(n);
  const std::complex<double> seed(0.4, 0.9);
  std::complex<double> p(1.0, 0.0);
  for (int i = 0; i < n; ++i) {
    p *= seed;
    z[i] = p;
  }
  auto eval = [&](std::complex<double> x) {
    std::complex<double> acc = 0.0;
    for (int k = n; k >= 0; --k) acc = acc * x + c[k];
    return acc;
  };
  for (int iter = 0; iter < 500; ++iter) {
    double shift = 0.0;
    for (int i = 0; i < n; ++i) {
      std::complex<double> denom = c[n];
      for (int j = 0; j < n; ++j) {
        if (j != i) denom *= (z[i] - z[j]);
      }
      const std::complex<double> dz = eval(z[i]) / denom;
      z[i] -= dz;
      shift = std::max(shift, std::abs(dz));
    }
    if (shift < 1e-14) break;
  }
  return z;
}

// Random stiffness with the monoclinic x3-mirror zero pattern, SPD by
// construction (block Gram matrices plus a diagonal shift).
inline ifcrack::Matrix6d random_monoclinic_stiffness(unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::Matrix4d A;  // in-plane block over indices {1,2,3,6}
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) A(i, j) = u(rng);
  Eigen::Matrix4d B4 = A * A.transpose() + 0.4 * Eigen::Matrix4d::Identity();
  Eigen::Matrix2d C;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) C(i, j) = u(rng);
  Eigen::Matrix2d B2 = C * C.transpose() + 0.4 * Eigen::Matrix2d::Identity();

  ifcrack::Matrix6d m = ifcrack::Matrix6d::Zero();
  const int plane_idx[4] = {0, 1, 2, 5};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(plane_idx[i], plane_idx[j]) = B4(i, j);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m(3 + i, 3 + j) = B2(i, j);
  return m;
}

// Central second differences of a vector field u(x1, x2).
struct FieldHessian {
  Eigen::Vector3d u11, u12, u22;
};

inline FieldHessian second_differences(
    const std::function<Eigen::Vector3d(double, double)>& u, double x1,
    double x2, double h) {
  FieldHessian out;
  out.u11 = (u(x1 + h, x2) - 2.0 * u(x1, x2) + u(x1 - h, x2)) / (h * h);
  out.u22 = (u(x1, x2 + h) - 2.0 * u(x1, x2) + u(x1, x2 - h)) / (h * h);
  out.u12 = (u(x1 + h, x2 + h) - u(x1 + h, x2 - h) - u(x1 - h, x2 + h) +
             u(x1 - h, x2 - h)) /
            (4.0 * h * h);
  return out;
}

}  // namespace oracles
