#pragma once

#include <memory>
#include <vector>

#include "ifcrack/half_line.hpp"

namespace ifcrack {

// Composite Gauss-Legendre quadrature on the image of the algebraic map
//   eta(t) = -scale * t^2 / (1-t)^2,  t in (0, t_max),
// which compresses the half-line and absorbs inverse-square-root tip
// behaviour. t_max corresponds to the truncation depth |eta| = truncation *
// scale. Refinement doubles `panels`.
struct QuadratureScheme {
  double scale = 1.0;        // problem length a
  int panels = 512;          // N >= 16
  int nodes_per_panel = 8;   // Gauss-Legendre points per panel
  double truncation = 1e8;   // X/a >= 50

  void validate() const;
};

// Node set for one scheme plus declared breakpoints of the integrand (panel
// boundaries are inserted at breakpoints so panel integrands stay smooth).
class QuadGrid {
 public:
  QuadGrid(const QuadratureScheme& scheme, const std::vector<double>& breakpoints = {});

  const QuadratureScheme& scheme() const { return scheme_; }
  int panels() const { return static_cast<int>(bounds_.size()) - 1; }
  int nodes_per_panel() const { return m_; }
  std::size_t size() const { return t_.size(); }

  const std::vector<double>& t() const { return t_; }
  const std::vector<double>& eta() const { return eta_; }
  const std::vector<double>& weight() const { return wj_; }  // GL weight * |eta'|
  const std::vector<double>& bounds() const { return bounds_; }
  double eta_bound(int k) const { return eta_bounds_[k]; }

  double t_of(double x1) const;      // inverse map, x1 < 0
  int panel_of(double x1) const;

  // barycentric interpolation/differentiation of nodal data within panel k
  double interpolate(int k, const std::vector<double>& values, double t) const;
  double derivative_at_node(int k, const std::vector<double>& values,
                            int node_in_panel) const;

 private:
  QuadratureScheme scheme_;
  int m_;
  std::vector<double> bounds_, eta_bounds_;
  std::vector<double> t_, eta_, wj_;
  std::vector<double> gl_x_, gl_w_, bary_;
};

// One-sided Cauchy transform of a half-line function:
//   (S phi)(x) = (1/pi) PV int_{-inf}^0 phi(eta) / (x - eta) deta.
// For x < 0 this is the singular restriction, for x > 0 the compact one.
// Construction samples phi once; evaluations are O(nodes) each.
class CauchyOperator {
 public:
  CauchyOperator(const HalfLineFunction& phi, const QuadratureScheme& scheme);
  CauchyOperator(HalfLineFunction phi, std::shared_ptr<const QuadGrid> grid);

  double operator()(double x1) const;  // x1 != 0, |x1| within truncation

  const std::shared_ptr<const QuadGrid>& grid() const { return grid_; }
  const std::vector<double>& node_values() const { return values_; }

 private:
  HalfLineFunction phi_;
  std::shared_ptr<const QuadGrid> grid_;
  std::vector<double> values_;  // compensated remainder at nodes
};

// Spec operations ------------------------------------------------------------

double cauchy_S(const HalfLineFunction& phi, double x1,
                const QuadratureScheme& scheme);

// S^(s) = restriction of S to x1 < 0, returned sampled on the scheme's grid.
HalfLineFunction apply_Ss(const HalfLineFunction& phi,
                          const QuadratureScheme& scheme);

// S^(c) = restriction of S to x1 > 0.
std::function<double(double)> apply_Sc(const HalfLineFunction& phi,
                                       const QuadratureScheme& scheme);

// Inverse of S^(s) on the crack class (inverse-square-root tip behaviour
// allowed, opening-compatible decay at infinity):
//   chi(x) = -(1/pi) PV int_{-inf}^0 sqrt(eta/x) g(eta) / (x - eta) deta,
// so that S^(s)[chi] = g. Point loads c*delta(.+a) map analytically to
// kernel terms -(c/pi) sqrt(-a/x)/(x+a) and are never discretized.
HalfLineField invert_Ss_weighted(const HalfLineLoad& g,
                                 const QuadratureScheme& scheme);

// Sampled smooth inversion of a pole-free density (the numeric core above).
HalfLineFunction invert_Ss_weighted_smooth(const HalfLineFunction& g,
                                           const QuadratureScheme& scheme);

// Cumulative integral from the tip: returns u with u(x) = -int_x^0 w dt for
// the smooth part of a field, plus closed forms for its atoms. u(0-) = 0 by
// construction; decay of u at -inf is a property of w, checked by callers.
std::function<double(double)> opening_from_field(const HalfLineField& w,
                                                 const QuadratureScheme& scheme);

// S applied to a whole field at x1: smooth part and kernel atoms through the
// numeric transform, point loads through their analytic image 1/(pi (x+a)).
class FieldCauchy {
 public:
  FieldCauchy(const HalfLineField& f, const QuadratureScheme& scheme);
  double operator()(double x1) const;

 private:
  std::vector<CauchyOperator> parts_;
  std::vector<PointLoad> diracs_;
};

struct SifExtraction {
  double K = 0.0;
  double fit_residual = 0.0;  // RMS residual / |K|
  bool reliable = false;
};

// K = lim_{x->0+} sqrt(2 pi x) tau(x), extracted from 20 log-spaced samples
// of tau on [1e-4 a, 1e-2 a] by a least-squares fit K + b sqrt(x).
SifExtraction sif_extract(const std::function<double(double)>& traction,
                          double a);

}  // namespace ifcrack
