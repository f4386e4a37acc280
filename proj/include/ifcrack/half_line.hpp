#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace ifcrack {

// Simple pole at x1 = -location (location > 0), coefficient strength:
// contributes strength / (x1 + location).
struct SimplePole {
  double location = 0.0;
  double strength = 0.0;
};

// Scalar function supported on the negative half-line x1 < 0.
//
// Endpoint behaviour is declared, not inferred: f ~ |x|^tip_exponent as
// x -> 0- and f ~ |x|^{-decay_exponent} as x -> -inf. An interior simple
// pole may be declared; the quadrature engine then integrates the pole pair
//   strength/(x + location) - strength/(x - location)
// analytically and quadratures only the compensated remainder, which decays
// one power faster than the bare pole subtraction. `regular` must evaluate
// exactly that remainder; when omitted it is formed naively from `eval`
// (fine away from the pole, cancellation-prone next to it).
class HalfLineFunction {
 public:
  HalfLineFunction() = default;  // zero function

  HalfLineFunction(std::function<double(double)> eval, double tip_exponent,
                   double decay_exponent, std::vector<double> breakpoints = {},
                   std::optional<SimplePole> pole = {},
                   std::function<double(double)> regular = {});

  bool is_zero() const { return !eval_; }
  double operator()(double x1) const;
  double regular_part(double x1) const;

  double tip_exponent() const { return tip_exponent_; }
  double decay_exponent() const { return decay_exponent_; }
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::optional<SimplePole>& pole() const { return pole_; }

  // c1*f1 + c2*f2 for pole-free functions.
  static HalfLineFunction lincomb(double c1, const HalfLineFunction& f1,
                                  double c2, const HalfLineFunction& f2);

 private:
  std::function<double(double)> eval_;
  std::function<double(double)> regular_;
  double tip_exponent_ = 0.0;
  double decay_exponent_ = 2.0;
  std::vector<double> breakpoints_;
  std::optional<SimplePole> pole_;
};

// c * delta(x1 + offset), offset > 0.
struct PointLoad {
  double offset = 0.0;
  double coeff = 0.0;
};

// c * sqrt(-offset/x1) / (x1 + offset): the image of a point load under the
// tip-weighted inversion, and the only non-smooth atom the solvers produce.
struct KernelTerm {
  double offset = 0.0;
  double coeff = 0.0;

  double operator()(double x1) const;
  HalfLineFunction as_function() const;  // with pole metadata and exact remainder
};

// Load side: smooth density plus point loads.
struct HalfLineLoad {
  HalfLineFunction smooth;
  std::vector<PointLoad> diracs;

  bool empty() const { return smooth.is_zero() && diracs.empty(); }
};

// Solution side: smooth part plus analytic atoms.
struct HalfLineField {
  HalfLineFunction smooth;
  std::vector<PointLoad> diracs;     // distributional part
  std::vector<KernelTerm> kernels;

  // pointwise value excluding the distributional part
  double value(double x1) const;
  HalfLineField scaled(double c) const;
};

}  // namespace ifcrack
