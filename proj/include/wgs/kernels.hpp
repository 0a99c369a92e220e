#pragma once

#include <cstddef>

// Dense double-precision kernels for the simplex tableau updates. Scalar
// reference implementations always exist; on x86-64 an AVX2 variant is
// selected at runtime when the CPU supports it. The two variants are kept
// bitwise-equivalent (no FMA, no reassociation) so they are interchangeable
// and equivalence-testable.

namespace wgs::kern {

struct Kernels {
  // y[i] += a * x[i]
  void (*axpy)(double* y, const double* x, double a, size_t n);
  // y[i] *= a
  void (*scale)(double* y, double a, size_t n);
  const char* name;
};

// selected-at-startup implementation (scalar or avx2)
const Kernels& active();

// always available, used as the equivalence-test reference
const Kernels& scalar();

// avx2 table when compiled in and supported at runtime, else nullptr
const Kernels* avx2();

}  // namespace wgs::kern
