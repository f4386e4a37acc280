#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "ifcrack/kernels.hpp"

using namespace ifcrack;

namespace {

struct Arrays {
  std::vector<double> v, e, w;
};

Arrays random_arrays(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> val(-2.0, 2.0);
  std::uniform_real_distribution<double> pos(0.1, 50.0);
  Arrays a;
  a.v.resize(n);
  a.e.resize(n);
  a.w.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    a.v[i] = val(rng);
    a.e[i] = -pos(rng);  // nodes on the negative axis, away from x
    a.w[i] = std::abs(val(rng)) + 1e-3;
  }
  return a;
}

}  // namespace

TEST(Kernels, ScalarCauchySumMatchesDirectLoop) {
  auto a = random_arrays(137, 1);
  kernels::set_backend(kernels::Backend::scalar);
  const double x = 3.7;
  double want = 0.0;
  for (std::size_t i = 0; i < a.v.size(); ++i) {
    want += a.w[i] * a.v[i] / (x - a.e[i]);
  }
  EXPECT_DOUBLE_EQ(kernels::cauchy_sum(a.v.data(), a.e.data(), a.w.data(),
                                       a.v.size(), x),
                   want);
}

TEST(Kernels, BackendEquivalenceCauchySum) {
  if (!kernels::avx2_supported()) GTEST_SKIP() << "no AVX2 on this host";
  for (unsigned seed : {1u, 2u, 3u, 4u}) {
    for (std::size_t n : {1u, 4u, 7u, 64u, 1001u}) {
      auto a = random_arrays(n, seed);
      for (double x : {5.0, -0.05, -123.0}) {
        kernels::set_backend(kernels::Backend::scalar);
        const double s = kernels::cauchy_sum(a.v.data(), a.e.data(), a.w.data(),
                                             n, x);
        kernels::set_backend(kernels::Backend::avx2);
        const double v = kernels::cauchy_sum(a.v.data(), a.e.data(), a.w.data(),
                                             n, x);
        EXPECT_NEAR(v, s, 1e-13 * (std::abs(s) + 1.0))
            << "n=" << n << " x=" << x << " seed=" << seed;
      }
    }
  }
  kernels::set_backend(kernels::avx2_supported() ? kernels::Backend::avx2
                                                 : kernels::Backend::scalar);
}

TEST(Kernels, BackendEquivalenceWeightedSum) {
  if (!kernels::avx2_supported()) GTEST_SKIP() << "no AVX2 on this host";
  for (std::size_t n : {2u, 5u, 400u}) {
    auto a = random_arrays(n, 7);
    kernels::set_backend(kernels::Backend::scalar);
    const double s = kernels::weighted_sum(a.v.data(), a.w.data(), n);
    kernels::set_backend(kernels::Backend::avx2);
    const double v = kernels::weighted_sum(a.v.data(), a.w.data(), n);
    EXPECT_NEAR(v, s, 1e-13 * (std::abs(s) + 1.0));
  }
  kernels::set_backend(kernels::avx2_supported() ? kernels::Backend::avx2
                                                 : kernels::Backend::scalar);
}

TEST(Kernels, SameBackendIsDeterministic) {
  auto a = random_arrays(513, 11);
  const double r1 =
      kernels::cauchy_sum(a.v.data(), a.e.data(), a.w.data(), a.v.size(), 2.5);
  const double r2 =
      kernels::cauchy_sum(a.v.data(), a.e.data(), a.w.data(), a.v.size(), 2.5);
  EXPECT_EQ(r1, r2);
}

TEST(Kernels, SetBackendRejectsUnsupported) {
  if (kernels::avx2_supported()) GTEST_SKIP() << "AVX2 available here";
  EXPECT_THROW(kernels::set_backend(kernels::Backend::avx2),
               std::invalid_argument);
}
