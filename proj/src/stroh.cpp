#include "ifcrack/stroh.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace ifcrack {

namespace {

constexpr double kDegeneracyTol = 1e-6;

// Roots of sum_k coeff[k] mu^k via the companion-matrix eigenvalues.
std::vector<Complex> polynomial_roots(const std::vector<double>& coeff) {
  int deg = static_cast<int>(coeff.size()) - 1;
  while (deg > 0 && coeff[deg] == 0.0) --deg;
  if (deg < 1) {
    throw std::invalid_argument("polynomial_roots: degree < 1");
  }
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -coeff[i] / coeff[deg];
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, /*computeEigenvectors=*/false);
  std::vector<Complex> roots(deg);
  for (int i = 0; i < deg; ++i) roots[i] = es.eigenvalues()(i);
  return roots;
}

double polynomial_residual(const std::vector<double>& coeff, Complex mu) {
  Complex p = 0.0;
  for (int k = static_cast<int>(coeff.size()) - 1; k >= 0; --k) {
    p = p * mu + coeff[k];
  }
  double scale = 0.0;
  Complex pw = 1.0;
  for (double c : coeff) {
    scale = std::max(scale, std::abs(c) * std::abs(pw));
    pw *= mu;
  }
  return std::abs(p) / (scale > 0.0 ? scale : 1.0);
}

bool upper_half(const Complex& z) { return z.imag() > 0.0; }

}  // namespace

StrohRoots characteristic_roots(const ReducedCompliance& rc) {
  const std::vector<double> quartic = {rc.s22(), -2.0 * rc.s26(),
                                       2.0 * rc.s12() + rc.s66(),
                                       -2.0 * rc.s16(), rc.s11()};
  if (rc.s11() <= 0.0) {
    throw std::invalid_argument("characteristic_roots: s11' must be positive");
  }

  auto all = polynomial_roots(quartic);
  std::vector<Complex> up;
  for (const auto& z : all) {
    if (upper_half(z)) up.push_back(z);
  }
  if (up.size() != 2) {
    throw std::domain_error(
        "characteristic_roots: in-plane equation has real roots; "
        "material data is not elliptic");
  }
  std::sort(up.begin(), up.end(), [](const Complex& p, const Complex& q) {
    if (p.real() != q.real()) return p.real() < q.real();
    return p.imag() < q.imag();
  });

  StrohRoots r;
  r.mu1 = up[0];
  r.mu2 = up[1];
  r.degenerate =
      std::abs(r.mu1 - r.mu2) < kDegeneracyTol * (1.0 + std::abs(r.mu1));

  const double disc = rc.s44() * rc.s55() - rc.s45() * rc.s45();
  if (disc <= 0.0 || rc.s55() <= 0.0) {
    throw std::domain_error(
        "characteristic_roots: antiplane equation has real roots");
  }
  r.mu3 = Complex(rc.s45(), std::sqrt(disc)) / rc.s55();

  r.plane_residual = std::max(polynomial_residual(quartic, r.mu1),
                              polynomial_residual(quartic, r.mu2));
  r.antiplane_residual = polynomial_residual(
      {rc.s44(), -2.0 * rc.s45(), rc.s55()}, r.mu3);
  if (r.plane_residual > 1e-10 || r.antiplane_residual > 1e-10) {
    throw std::domain_error("characteristic_roots: root residual exceeds 1e-10");
  }
  return r;
}

PlaneRootSummary plane_root_summary(Complex mu1, Complex mu2) {
  if (!(upper_half(mu1) && upper_half(mu2))) {
    throw std::invalid_argument("plane_root_summary: roots must have Im > 0");
  }
  PlaneRootSummary s;
  const Complex sum = mu1 + mu2;
  const Complex prod = mu1 * mu2;
  s.a = sum.real();
  s.b = sum.imag();
  s.c = prod.real();
  s.d = prod.imag();
  s.e = s.a * s.d - s.b * s.c;
  return s;
}

Matrix3cd surface_admittance_closed(const ReducedCompliance& rc,
                                    const StrohRoots& roots) {
  const Complex i(0.0, 1.0);
  const Complex prod = roots.mu1 * roots.mu2;
  const PlaneRootSummary s = plane_root_summary(roots.mu1, roots.mu2);

  Matrix3cd Y = Matrix3cd::Zero();
  Y(0, 0) = rc.s11() * s.b;
  Y(0, 1) = i * (rc.s12() - rc.s11() * prod);
  Y(1, 0) = i * (rc.s11() * std::conj(prod) - rc.s12());
  Y(1, 1) = rc.s11() * s.e;
  Y(2, 2) = rc.antiplane_discriminant_root();
  return Y;
}

StrohEigensystem stroh_eigensystem(const StrohMatrices& sm) {
  // Monoclinic block structure: the plane problem is the 2x2 quadratic
  // pencil in rows/columns {1,2}; the antiplane row decouples.
  const Matrix2d Q = sm.Q.topLeftCorner<2, 2>();
  const Matrix2d R = sm.R.topLeftCorner<2, 2>();
  const Matrix2d T = sm.T.topLeftCorner<2, 2>();
  const Matrix2d S = R + R.transpose();

  Eigen::Matrix4d comp = Eigen::Matrix4d::Zero();
  comp.topRightCorner<2, 2>() = Matrix2d::Identity();
  const Matrix2d Tinv = T.inverse();
  comp.bottomLeftCorner<2, 2>() = -Tinv * Q;
  comp.bottomRightCorner<2, 2>() = -Tinv * S;

  Eigen::EigenSolver<Eigen::Matrix4d> es(comp);
  std::vector<std::pair<Complex, Eigen::Vector2cd>> plane;
  for (int k = 0; k < 4; ++k) {
    Complex mu = es.eigenvalues()(k);
    if (upper_half(mu)) {
      plane.emplace_back(mu, es.eigenvectors().col(k).head<2>());
    }
  }
  if (plane.size() != 2) {
    throw std::domain_error("stroh_eigensystem: plane pencil not elliptic");
  }
  std::sort(plane.begin(), plane.end(), [](const auto& p, const auto& q) {
    if (p.first.real() != q.first.real()) return p.first.real() < q.first.real();
    return p.first.imag() < q.first.imag();
  });
  if (std::abs(plane[0].first - plane[1].first) <
      kDegeneracyTol * (1.0 + std::abs(plane[0].first))) {
    throw std::domain_error(
        "stroh_eigensystem: degenerate plane roots; use the closed-form "
        "admittance");
  }

  StrohEigensystem out;
  out.mu1 = plane[0].first;
  out.mu2 = plane[1].first;
  out.F = Matrix3cd::Zero();
  out.L = Matrix3cd::Zero();
  for (int j = 0; j < 2; ++j) {
    Eigen::Vector2cd f = plane[j].second;
    // deterministic scaling: largest component is real and positive
    int imax = std::abs(f(0)) >= std::abs(f(1)) ? 0 : 1;
    f /= f(imax);
    f /= f.norm();
    Eigen::Vector2cd l = (R.transpose() + plane[j].first * T) * f;
    out.F.col(j).head<2>() = f;
    out.L.col(j).head<2>() = l;
  }

  // antiplane column: f = e3, l = (c45 + mu3 c44) e3
  const double c55 = sm.Q(2, 2), c45 = sm.R(2, 2), c44 = sm.T(2, 2);
  const double disc = c44 * c55 - c45 * c45;
  if (disc <= 0.0) {
    throw std::domain_error("stroh_eigensystem: antiplane pencil not elliptic");
  }
  out.mu3 = Complex(-c45, std::sqrt(disc)) / c44;
  out.F(2, 2) = 1.0;
  out.L(2, 2) = c45 + out.mu3 * c44;

  // eigen residual of the full 3x3 pencil
  const Complex mus[3] = {out.mu1, out.mu2, out.mu3};
  const Matrix3d S3 = sm.R + sm.R.transpose();
  double scale = sm.Q.norm() + S3.norm() + sm.T.norm();
  for (int j = 0; j < 3; ++j) {
    Vector3cd res = (sm.Q.cast<Complex>() + mus[j] * S3.cast<Complex>() +
                     mus[j] * mus[j] * sm.T.cast<Complex>()) *
                    out.F.col(j);
    if (res.norm() > 1e-8 * scale * out.F.col(j).norm() *
                         (1.0 + std::norm(mus[j]))) {
      throw std::domain_error("stroh_eigensystem: eigenvector residual too large");
    }
  }
  return out;
}

Matrix3cd surface_admittance_eigen(const StrohEigensystem& es) {
  const Complex i(0.0, 1.0);
  return i * es.F * es.L.inverse();
}

StrohSystem make_stroh_system(const MaterialSpec& m) {
  StrohSystem sys;
  const ReducedCompliance rc = reduced_compliance(m);
  sys.roots = characteristic_roots(rc);
  sys.summary = plane_root_summary(sys.roots.mu1, sys.roots.mu2);
  sys.Y = surface_admittance_closed(rc, sys.roots);
  if (!sys.roots.degenerate) {
    sys.eigen = stroh_eigensystem(stroh_matrices(m));
  }
  return sys;
}

}  // namespace ifcrack
