#pragma once

#include <cstddef>

// Data-parallel inner loops of the quadrature engine. Each primitive has a
// scalar reference implementation and, on x86-64, an AVX2 variant selected
// at runtime. The two are equivalence-tested against each other; they may
// differ by reduction order, so agreement is to rounding, not bitwise.

namespace ifcrack::kernels {

enum class Backend { scalar, avx2 };

// Backend in effect (auto-detected at startup, overridable for tests).
Backend active_backend();
void set_backend(Backend b);  // throws std::invalid_argument if unsupported
bool avx2_supported();

// sum_i w[i] * v[i] / (x - e[i])
double cauchy_sum(const double* v, const double* e, const double* w,
                  std::size_t n, double x);

// sum_i w[i] * v[i]
double weighted_sum(const double* v, const double* w, std::size_t n);

}  // namespace ifcrack::kernels
