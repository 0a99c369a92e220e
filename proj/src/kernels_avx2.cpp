// Compiled with -mavx2 (see CMakeLists). Only dispatched to when the running
// CPU reports AVX2. Deliberately uses mul+add rather than FMA so results are
// bitwise identical to the scalar reference.

#include "wgs/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define WGS_HAVE_AVX2_BUILD 1
#include <immintrin.h>
#else
#define WGS_HAVE_AVX2_BUILD 0
#endif

namespace wgs::kern {

#if WGS_HAVE_AVX2_BUILD

namespace {

void axpy_avx2(double* y, const double* x, double a, size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256d y0 = _mm256_loadu_pd(y + i);
    __m256d y1 = _mm256_loadu_pd(y + i + 4);
    __m256d x0 = _mm256_loadu_pd(x + i);
    __m256d x1 = _mm256_loadu_pd(x + i + 4);
    y0 = _mm256_add_pd(y0, _mm256_mul_pd(va, x0));
    y1 = _mm256_add_pd(y1, _mm256_mul_pd(va, x1));
    _mm256_storeu_pd(y + i, y0);
    _mm256_storeu_pd(y + i + 4, y1);
  }
  for (; i + 4 <= n; i += 4) {
    __m256d y0 = _mm256_loadu_pd(y + i);
    __m256d x0 = _mm256_loadu_pd(x + i);
    _mm256_storeu_pd(y + i, _mm256_add_pd(y0, _mm256_mul_pd(va, x0)));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void scale_avx2(double* y, double a, size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_mul_pd(va, _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) y[i] *= a;
}

const Kernels kAvx2{axpy_avx2, scale_avx2, "avx2"};

}  // namespace

const Kernels* avx2() {
  static const Kernels* available =
      __builtin_cpu_supports("avx2") ? &kAvx2 : nullptr;
  return available;
}

#else

const Kernels* avx2() { return nullptr; }

#endif

}  // namespace wgs::kern
