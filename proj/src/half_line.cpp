#include "ifcrack/half_line.hpp"

#include <cmath>
#include <utility>

namespace ifcrack {

HalfLineFunction::HalfLineFunction(std::function<double(double)> eval,
                                   double tip_exponent, double decay_exponent,
                                   std::vector<double> breakpoints,
                                   std::optional<SimplePole> pole,
                                   std::function<double(double)> regular)
    : eval_(std::move(eval)),
      regular_(std::move(regular)),
      tip_exponent_(tip_exponent),
      decay_exponent_(decay_exponent),
      breakpoints_(std::move(breakpoints)),
      pole_(pole) {
  for (double b : breakpoints_) {
    if (b >= 0.0) {
      throw std::invalid_argument("HalfLineFunction: breakpoints must be negative");
    }
  }
  if (pole_ && pole_->location <= 0.0) {
    throw std::invalid_argument("HalfLineFunction: pole location must be positive");
  }
}

double HalfLineFunction::operator()(double x1) const {
  if (!eval_) return 0.0;
  return eval_(x1);
}

double HalfLineFunction::regular_part(double x1) const {
  if (!eval_) return 0.0;
  if (!pole_) return eval_(x1);
  if (regular_) return regular_(x1);
  const double a = pole_->location, s = pole_->strength;
  return eval_(x1) - s / (x1 + a) + s / (x1 - a);
}

HalfLineFunction HalfLineFunction::lincomb(double c1, const HalfLineFunction& f1,
                                           double c2, const HalfLineFunction& f2) {
  if (f1.pole_ || f2.pole_) {
    throw std::invalid_argument("HalfLineFunction::lincomb: pole terms unsupported");
  }
  if (f1.is_zero() && f2.is_zero()) return {};
  std::vector<double> breaks = f1.breakpoints_;
  breaks.insert(breaks.end(), f2.breakpoints_.begin(), f2.breakpoints_.end());
  auto g1 = f1, g2 = f2;
  return HalfLineFunction(
      [c1, g1, c2, g2](double x) { return c1 * g1(x) + c2 * g2(x); },
      std::min(f1.is_zero() ? f2.tip_exponent_ : f1.tip_exponent_,
               f2.is_zero() ? f1.tip_exponent_ : f2.tip_exponent_),
      std::min(f1.is_zero() ? f2.decay_exponent_ : f1.decay_exponent_,
               f2.is_zero() ? f1.decay_exponent_ : f2.decay_exponent_),
      std::move(breaks));
}

double KernelTerm::operator()(double x1) const {
  return coeff * std::sqrt(-offset / x1) / (x1 + offset);
}

HalfLineFunction KernelTerm::as_function() const {
  const double a = offset, c = coeff;
  // remainder of the pole pair: c[ (sqrt(-a/x)-1)/(x+a) + 1/(x-a) ]
  //                           = c[ -1/(x(1+sqrt(-a/x))) + 1/(x-a) ]
  auto regular = [a, c](double x) {
    return c * (-1.0 / (x * (1.0 + std::sqrt(-a / x))) + 1.0 / (x - a));
  };
  auto eval = [a, c](double x) { return c * std::sqrt(-a / x) / (x + a); };
  return HalfLineFunction(eval, -0.5, 1.5, {}, SimplePole{a, c}, regular);
}

double HalfLineField::value(double x1) const {
  double v = smooth.is_zero() ? 0.0 : smooth(x1);
  for (const auto& k : kernels) v += k(x1);
  return v;
}

HalfLineField HalfLineField::scaled(double c) const {
  HalfLineField out;
  if (!smooth.is_zero()) {
    out.smooth = HalfLineFunction::lincomb(c, smooth, 0.0, {});
  }
  out.diracs = diracs;
  for (auto& d : out.diracs) d.coeff *= c;
  out.kernels = kernels;
  for (auto& k : out.kernels) k.coeff *= c;
  return out;
}

}  // namespace ifcrack
