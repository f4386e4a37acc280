#include "ifcrack/singular_ops.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ifcrack/kernels.hpp"

namespace ifcrack {

namespace {

constexpr double kPi = std::numbers::pi;

void gauss_legendre(int m, std::vector<double>& x, std::vector<double>& w) {
  x.assign(m, 0.0);
  w.assign(m, 0.0);
  for (int i = 0; i < (m + 1) / 2; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (m + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < m; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = m * (z * p0 - p1) / (z * z - 1.0);
      double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[i] = -z;
    x[m - 1 - i] = z;
    w[i] = w[m - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
  }
}

// PV int_{-inf}^0 deta / ((eta + a)(x - eta)) = ln(a/|x|) / (x + a)
double pole_image_inside(double a, double x) {
  return std::log(a / std::abs(x)) / (x + a);
}

// int_{-inf}^0 deta / ((eta - a)(x - eta)) = ln(a/|x|) / (x - a),
// removable singularity at x = +a.
double pole_image_outside(double a, double x) {
  const double u = (x - a) / a;
  if (std::abs(u) < 1e-4) {
    return -(1.0 - u / 2.0 + u * u / 3.0 - u * u * u / 4.0) / a;
  }
  return std::log(a / std::abs(x)) / (x - a);
}

void check_admissible(const HalfLineFunction& phi) {
  if (phi.tip_exponent() < -0.5 - 1e-12) {
    throw std::invalid_argument(
        "singular_ops: tip exponent below -1/2 is inadmissible");
  }
  if (phi.decay_exponent() <= 0.0) {
    throw std::invalid_argument("singular_ops: non-convergent tail (decay <= 0)");
  }
}

}  // namespace

void QuadratureScheme::validate() const {
  if (scale <= 0.0) throw std::invalid_argument("QuadratureScheme: scale > 0");
  if (panels < 16) throw std::invalid_argument("QuadratureScheme: panels >= 16");
  if (nodes_per_panel < 2 || nodes_per_panel > 24) {
    throw std::invalid_argument("QuadratureScheme: nodes_per_panel in [2, 24]");
  }
  if (truncation < 50.0) {
    throw std::invalid_argument("QuadratureScheme: truncation >= 50");
  }
}

QuadGrid::QuadGrid(const QuadratureScheme& scheme,
                   const std::vector<double>& breakpoints)
    : scheme_(scheme), m_(scheme.nodes_per_panel) {
  scheme.validate();
  const double root = std::sqrt(scheme.truncation);
  const double tmax = root / (1.0 + root);

  bounds_.resize(scheme.panels + 1);
  for (int k = 0; k <= scheme.panels; ++k) {
    bounds_[k] = tmax * k / scheme.panels;
  }
  for (double b : breakpoints) {
    if (b >= 0.0) throw std::invalid_argument("QuadGrid: breakpoints must be negative");
    const double tb = t_of(b);
    if (tb <= 0.0 || tb >= tmax) continue;
    auto it = std::lower_bound(bounds_.begin(), bounds_.end(), tb);
    if (it != bounds_.end() && std::abs(*it - tb) < 1e-12) continue;
    if (it != bounds_.begin() && std::abs(*(it - 1) - tb) < 1e-12) continue;
    bounds_.insert(it, tb);
  }

  gauss_legendre(m_, gl_x_, gl_w_);
  bary_.assign(m_, 1.0);
  for (int i = 0; i < m_; ++i) {
    for (int j = 0; j < m_; ++j) {
      if (i != j) bary_[i] /= (gl_x_[i] - gl_x_[j]);
    }
  }

  const int np = panels();
  const double L = scheme_.scale;
  t_.resize(np * m_);
  eta_.resize(np * m_);
  wj_.resize(np * m_);
  eta_bounds_.resize(np + 1);
  for (int k = 0; k <= np; ++k) {
    const double tb = bounds_[k];
    eta_bounds_[k] = -L * tb * tb / ((1.0 - tb) * (1.0 - tb));
  }
  for (int k = 0; k < np; ++k) {
    const double c = 0.5 * (bounds_[k] + bounds_[k + 1]);
    const double h = 0.5 * (bounds_[k + 1] - bounds_[k]);
    for (int i = 0; i < m_; ++i) {
      const double t = c + h * gl_x_[i];
      const double om = 1.0 - t;
      t_[k * m_ + i] = t;
      eta_[k * m_ + i] = -L * t * t / (om * om);
      wj_[k * m_ + i] = gl_w_[i] * h * 2.0 * L * t / (om * om * om);
    }
  }
}

double QuadGrid::t_of(double x1) const {
  const double rho = std::sqrt(-x1 / scheme_.scale);
  return rho / (1.0 + rho);
}

int QuadGrid::panel_of(double x1) const {
  const double t = t_of(x1);
  auto it = std::upper_bound(bounds_.begin(), bounds_.end(), t);
  int k = static_cast<int>(it - bounds_.begin()) - 1;
  return std::clamp(k, 0, panels() - 1);
}

double QuadGrid::interpolate(int k, const std::vector<double>& values,
                             double t) const {
  const double c = 0.5 * (bounds_[k] + bounds_[k + 1]);
  const double h = 0.5 * (bounds_[k + 1] - bounds_[k]);
  const double xi = (t - c) / h;
  double num = 0.0, den = 0.0;
  for (int i = 0; i < m_; ++i) {
    const double d = xi - gl_x_[i];
    if (std::abs(d) < 1e-14) return values[k * m_ + i];
    const double q = bary_[i] / d;
    num += q * values[k * m_ + i];
    den += q;
  }
  return num / den;
}

double QuadGrid::derivative_at_node(int k, const std::vector<double>& values,
                                    int node_in_panel) const {
  const double h = 0.5 * (bounds_[k + 1] - bounds_[k]);
  const int j = node_in_panel;
  double acc = 0.0;
  for (int i = 0; i < m_; ++i) {
    if (i == j) continue;
    const double dji = (bary_[i] / bary_[j]) / (gl_x_[j] - gl_x_[i]);
    acc += dji * (values[k * m_ + i] - values[k * m_ + j]);
  }
  return acc / h;  // d/dt
}

namespace {

// PV sum of values/(x-eta) over the whole grid with window subtraction:
// panels adjacent to x are integrated with the constant fx removed, the
// constant's principal value over the window is added back in closed form.
double pv_sum(const QuadGrid& g, const std::vector<double>& v, double x,
              double fx) {
  const auto& eta = g.eta();
  const auto& wj = g.weight();
  const int m = g.nodes_per_panel();
  const int k = g.panel_of(x);
  const int lo = std::max(0, k - 1);
  const int hi = std::min(g.panels() - 1, k + 1);
  const std::size_t i0 = static_cast<std::size_t>(lo) * m;
  const std::size_t i1 = static_cast<std::size_t>(hi + 1) * m;

  double acc = kernels::cauchy_sum(v.data(), eta.data(), wj.data(), i0, x);
  acc += kernels::cauchy_sum(v.data() + i1, eta.data() + i1, wj.data() + i1,
                             g.size() - i1, x);

  const double L = g.scheme().scale;
  for (std::size_t i = i0; i < i1; ++i) {
    const double d = x - eta[i];
    if (std::abs(d) > 1e-9 * (std::abs(x) + std::abs(eta[i]))) {
      acc += wj[i] * (v[i] - fx) / d;
    } else {
      // [v(eta) - v(x)] / (x - eta) -> (dv/dt) / J at the coincident node
      const int kp = static_cast<int>(i) / m;
      const double t = g.t()[i];
      const double om = 1.0 - t;
      const double J = 2.0 * L * t / (om * om * om);
      acc += wj[i] * g.derivative_at_node(kp, v, static_cast<int>(i) % m) / J;
    }
  }
  const double w_lo = g.eta_bound(hi + 1);  // most negative window edge
  const double w_hi = g.eta_bound(lo);
  acc += fx * std::log((x - w_lo) / (w_hi - x));
  return acc;
}

}  // namespace

CauchyOperator::CauchyOperator(const HalfLineFunction& phi,
                               const QuadratureScheme& scheme)
    : CauchyOperator(phi, std::make_shared<QuadGrid>(scheme, phi.breakpoints())) {}

CauchyOperator::CauchyOperator(HalfLineFunction phi,
                               std::shared_ptr<const QuadGrid> grid)
    : phi_(std::move(phi)), grid_(std::move(grid)) {
  check_admissible(phi_);
  values_.resize(grid_->size());
  for (std::size_t i = 0; i < grid_->size(); ++i) {
    values_[i] = phi_.regular_part(grid_->eta()[i]);
  }
}

double CauchyOperator::operator()(double x1) const {
  if (x1 == 0.0) {
    throw std::domain_error("CauchyOperator: tip evaluation unsupported");
  }
  const QuadGrid& g = *grid_;
  double acc = 0.0;
  if (const auto& p = phi_.pole()) {
    if (x1 == -p->location) {
      throw std::domain_error("CauchyOperator: evaluation at the pole");
    }
    acc += p->strength *
           (pole_image_inside(p->location, x1) - pole_image_outside(p->location, x1));
  }
  if (x1 > 0.0) {
    acc += kernels::cauchy_sum(values_.data(), g.eta().data(), g.weight().data(),
                               g.size(), x1);
  } else {
    if (g.t_of(x1) >= g.bounds().back()) {
      throw std::domain_error("CauchyOperator: x beyond quadrature truncation");
    }
    acc += pv_sum(g, values_, x1, phi_.regular_part(x1));
  }
  return acc / kPi;
}

double cauchy_S(const HalfLineFunction& phi, double x1,
                const QuadratureScheme& scheme) {
  return CauchyOperator(phi, scheme)(x1);
}

namespace {

// sampled representation f(x) = s(t(x)) * (-x)^{tip}
HalfLineFunction make_sampled(std::shared_ptr<const QuadGrid> grid,
                              std::vector<double> stored, double tip,
                              double decay, std::vector<double> breakpoints) {
  auto sp = std::make_shared<const std::vector<double>>(std::move(stored));
  const double eta_last = grid->eta().back();
  const double f_last = sp->back() * std::pow(-eta_last, tip);
  auto eval = [grid, sp, tip, decay, eta_last, f_last](double x) {
    if (x >= 0.0) {
      throw std::domain_error("sampled half-line function: x must be negative");
    }
    if (x < eta_last) {
      return f_last * std::pow(eta_last / x, decay);  // power-law tail
    }
    const int k = grid->panel_of(x);
    const double s = grid->interpolate(k, *sp, grid->t_of(x));
    return s * std::pow(-x, tip);
  };
  return HalfLineFunction(eval, tip, decay, std::move(breakpoints));
}

}  // namespace

HalfLineFunction apply_Ss(const HalfLineFunction& phi,
                          const QuadratureScheme& scheme) {
  CauchyOperator op(phi, scheme);
  const QuadGrid& g = *op.grid();
  std::vector<double> out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    out[i] = op(g.eta()[i]);
  }
  return make_sampled(op.grid(), std::move(out), 0.0, 1.0, phi.breakpoints());
}

std::function<double(double)> apply_Sc(const HalfLineFunction& phi,
                                       const QuadratureScheme& scheme) {
  auto op = std::make_shared<CauchyOperator>(phi, scheme);
  return [op](double x) {
    if (x <= 0.0) {
      throw std::domain_error("apply_Sc: defined for x > 0");
    }
    return (*op)(x);
  };
}

HalfLineFunction invert_Ss_weighted_smooth(const HalfLineFunction& g,
                                           const QuadratureScheme& scheme) {
  check_admissible(g);
  if (g.pole()) {
    throw std::invalid_argument("invert_Ss_weighted: density must be pole-free");
  }
  if (g.decay_exponent() <= 1.0) {
    throw std::invalid_argument(
        "invert_Ss_weighted: load tail decay too slow (need decay > 1)");
  }
  auto grid = std::make_shared<QuadGrid>(scheme, g.breakpoints());
  const std::size_t n = grid->size();
  std::vector<double> sv(n);  // sqrt(-eta) g(eta)
  for (std::size_t i = 0; i < n; ++i) {
    sv[i] = std::sqrt(-grid->eta()[i]) * g(grid->eta()[i]);
  }
  // stored values are already the sqrt-weighted samples of the result:
  // chi(x) = -pv(x) / (pi sqrt(-x)),  stored s = chi * sqrt(-x) = -pv/pi
  std::vector<double> stored(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = grid->eta()[i];
    stored[i] = -pv_sum(*grid, sv, x, sv[i]) / kPi;
  }
  return make_sampled(grid, std::move(stored), -0.5, 1.5, g.breakpoints());
}

HalfLineField invert_Ss_weighted(const HalfLineLoad& g,
                                 const QuadratureScheme& scheme) {
  HalfLineField out;
  if (!g.smooth.is_zero()) {
    out.smooth = invert_Ss_weighted_smooth(g.smooth, scheme);
  }
  out.kernels.reserve(g.diracs.size());
  for (const auto& d : g.diracs) {
    if (d.offset <= 0.0) {
      throw std::invalid_argument("invert_Ss_weighted: point load offset must be > 0");
    }
    out.kernels.push_back(KernelTerm{d.offset, -d.coeff / kPi});
  }
  return out;
}

std::function<double(double)> opening_from_field(const HalfLineField& w,
                                                 const QuadratureScheme& scheme) {
  struct SmoothPart {
    std::shared_ptr<const QuadGrid> grid;
    std::vector<double> values;      // w at nodes
    std::vector<double> prefix;      // integral of w J dt over panels [0,k)
  };
  std::shared_ptr<SmoothPart> sp;
  if (!w.smooth.is_zero()) {
    sp = std::make_shared<SmoothPart>();
    sp->grid = std::make_shared<QuadGrid>(scheme, w.smooth.breakpoints());
    const QuadGrid& g = *sp->grid;
    sp->values.resize(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      sp->values[i] = w.smooth(g.eta()[i]);
    }
    sp->prefix.assign(g.panels() + 1, 0.0);
    const int m = g.nodes_per_panel();
    for (int k = 0; k < g.panels(); ++k) {
      sp->prefix[k + 1] =
          sp->prefix[k] + kernels::weighted_sum(sp->values.data() + k * m,
                                                g.weight().data() + k * m, m);
    }
  }
  auto kernels_copy = w.kernels;
  auto diracs_copy = w.diracs;
  const double L = scheme.scale;
  auto qrule = std::make_shared<std::pair<std::vector<double>, std::vector<double>>>();
  gauss_legendre(8, qrule->first, qrule->second);

  return [sp, kernels_copy, diracs_copy, L, qrule](double x) {
    if (x >= 0.0) {
      throw std::domain_error("opening: defined for x < 0");
    }
    double acc = 0.0;
    if (sp) {
      const QuadGrid& g = *sp->grid;
      const double t = std::min(g.t_of(x), g.bounds().back());
      const int k = std::min(
          static_cast<int>(std::upper_bound(g.bounds().begin(), g.bounds().end(), t) -
                           g.bounds().begin()) - 1,
          g.panels() - 1);
      double integral = sp->prefix[std::max(k, 0)];
      if (k >= 0 && t > g.bounds()[k]) {
        // partial panel via local Gauss rule on (bounds[k], t)
        const auto& [qx, qw] = *qrule;
        const int mq = static_cast<int>(qx.size());
        const double c = 0.5 * (g.bounds()[k] + t), h = 0.5 * (t - g.bounds()[k]);
        for (int i = 0; i < mq; ++i) {
          const double tt = c + h * qx[i];
          const double om = 1.0 - tt;
          const double J = 2.0 * L * tt / (om * om * om);
          integral += qw[i] * h * g.interpolate(k, sp->values, tt) * J;
        }
      }
      acc -= integral;
    }
    for (const auto& kt : kernels_copy) {
      const double a = kt.offset;
      const double arc = (x > -a) ? 2.0 * std::atanh(std::sqrt(-x / a))
                                  : 2.0 * std::atanh(std::sqrt(-a / x));
      acc -= kt.coeff * arc;
    }
    for (const auto& d : diracs_copy) {
      if (x < -d.offset) acc -= d.coeff;
    }
    return acc;
  };
}

FieldCauchy::FieldCauchy(const HalfLineField& f, const QuadratureScheme& scheme) {
  if (!f.smooth.is_zero()) {
    parts_.emplace_back(f.smooth, scheme);
  }
  for (const auto& k : f.kernels) {
    parts_.emplace_back(k.as_function(), scheme);
  }
  diracs_ = f.diracs;
}

double FieldCauchy::operator()(double x1) const {
  double acc = 0.0;
  for (const auto& op : parts_) acc += op(x1);
  for (const auto& d : diracs_) acc += d.coeff / (kPi * (x1 + d.offset));
  return acc;
}

SifExtraction sif_extract(const std::function<double(double)>& traction,
                          double a) {
  if (a <= 0.0) throw std::invalid_argument("sif_extract: a > 0 required");
  constexpr int n = 20;
  const double lo = 1e-4 * a, hi = 1e-2 * a;
  double s00 = 0, s01 = 0, s11 = 0, b0 = 0, b1 = 0;
  double qmax = 0.0;
  std::vector<double> xs(n), qs(n);
  for (int i = 0; i < n; ++i) {
    const double x = lo * std::pow(hi / lo, i / (n - 1.0));
    const double q = std::sqrt(2.0 * kPi * x) * traction(x);
    const double r = std::sqrt(x);
    xs[i] = x;
    qs[i] = q;
    s00 += 1.0;
    s01 += r;
    s11 += r * r;
    b0 += q;
    b1 += q * r;
    qmax = std::max(qmax, std::abs(q));
  }
  const double det = s00 * s11 - s01 * s01;
  SifExtraction out;
  out.K = (s11 * b0 - s01 * b1) / det;
  const double slope = (s00 * b1 - s01 * b0) / det;
  double ss = 0.0;
  for (int i = 0; i < n; ++i) {
    const double r = qs[i] - out.K - slope * std::sqrt(xs[i]);
    ss += r * r;
  }
  const double rms = std::sqrt(ss / n);
  out.fit_residual = rms / std::max(std::abs(out.K), 1e-300);
  out.reliable = out.fit_residual <= 0.01 && std::abs(out.K) > 1e-12 * qmax;
  return out;
}

}  // namespace ifcrack
