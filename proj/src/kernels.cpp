#include "wgs/kernels.hpp"

namespace wgs::kern {

namespace {

void axpy_scalar(double* y, const double* x, double a, size_t n) {
  for (size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale_scalar(double* y, double a, size_t n) {
  for (size_t i = 0; i < n; ++i) y[i] *= a;
}

const Kernels kScalar{axpy_scalar, scale_scalar, "scalar"};

}  // namespace

const Kernels& scalar() { return kScalar; }

const Kernels& active() {
  static const Kernels* selected = [] {
    if (const Kernels* k = avx2()) return k;
    return &kScalar;
  }();
  return *selected;
}

}  // namespace wgs::kern
