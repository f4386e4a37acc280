#include <immintrin.h>

#include <cstddef>

// AVX2 variants of the quadrature reduction primitives. Four independent
// accumulator lanes; lanes are combined pairwise at the end so the result
// does not depend on n beyond the usual reassociation of the reduction.

namespace ifcrack::kernels::detail {

namespace {

inline double hsum(__m256d acc) {
  __m128d lo = _mm256_castpd256_pd128(acc);
  __m128d hi = _mm256_extractf128_pd(acc, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

}  // namespace

double cauchy_sum_avx2(const double* v, const double* e, const double* w,
                       std::size_t n, double x) {
  const __m256d xv = _mm256_set1_pd(x);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vv = _mm256_loadu_pd(v + i);
    __m256d ev = _mm256_loadu_pd(e + i);
    __m256d wv = _mm256_loadu_pd(w + i);
    __m256d num = _mm256_mul_pd(wv, vv);
    __m256d den = _mm256_sub_pd(xv, ev);
    acc = _mm256_add_pd(acc, _mm256_div_pd(num, den));
  }
  double tail = 0.0;
  for (; i < n; ++i) {
    tail += w[i] * v[i] / (x - e[i]);
  }
  return hsum(acc) + tail;
}

double weighted_sum_avx2(const double* v, const double* w, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_pd(
        acc, _mm256_mul_pd(_mm256_loadu_pd(v + i), _mm256_loadu_pd(w + i)));
  }
  double tail = 0.0;
  for (; i < n; ++i) {
    tail += w[i] * v[i];
  }
  return hsum(acc) + tail;
}

}  // namespace ifcrack::kernels::detail
