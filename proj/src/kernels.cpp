#include "ifcrack/kernels.hpp"

#include <atomic>
#include <stdexcept>

namespace ifcrack::kernels {

namespace detail {
double cauchy_sum_scalar(const double* v, const double* e, const double* w,
                         std::size_t n, double x);
double weighted_sum_scalar(const double* v, const double* w, std::size_t n);
#if defined(IFCRACK_BUILD_AVX2)
double cauchy_sum_avx2(const double* v, const double* e, const double* w,
                       std::size_t n, double x);
double weighted_sum_avx2(const double* v, const double* w, std::size_t n);
#endif
}  // namespace detail

bool avx2_supported() {
#if defined(IFCRACK_BUILD_AVX2)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {

Backend detect() { return avx2_supported() ? Backend::avx2 : Backend::scalar; }

std::atomic<Backend> g_backend{detect()};

}  // namespace

Backend active_backend() { return g_backend.load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (b == Backend::avx2 && !avx2_supported()) {
    throw std::invalid_argument("kernels: AVX2 backend not supported on this host");
  }
  g_backend.store(b, std::memory_order_relaxed);
}

double cauchy_sum(const double* v, const double* e, const double* w,
                  std::size_t n, double x) {
#if defined(IFCRACK_BUILD_AVX2)
  if (active_backend() == Backend::avx2) {
    return detail::cauchy_sum_avx2(v, e, w, n, x);
  }
#endif
  return detail::cauchy_sum_scalar(v, e, w, n, x);
}

double weighted_sum(const double* v, const double* w, std::size_t n) {
#if defined(IFCRACK_BUILD_AVX2)
  if (active_backend() == Backend::avx2) {
    return detail::weighted_sum_avx2(v, w, n);
  }
#endif
  return detail::weighted_sum_scalar(v, w, n);
}

}  // namespace ifcrack::kernels
