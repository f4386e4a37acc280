#include "ifcrack/kernels.hpp"

namespace ifcrack::kernels::detail {

double cauchy_sum_scalar(const double* v, const double* e, const double* w,
                         std::size_t n, double x) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += w[i] * v[i] / (x - e[i]);
  }
  return acc;
}

double weighted_sum_scalar(const double* v, const double* w, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += w[i] * v[i];
  }
  return acc;
}

}  // namespace ifcrack::kernels::detail
