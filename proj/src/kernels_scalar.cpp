#include "messyseg/kernels.hpp"

// Reference kernels. These define the semantics the SIMD variants must match;
// keep the association of every expression exactly as written.

namespace messyseg::kernels {
namespace {

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale_scalar(double a, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

void add_scalar(const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += x[i];
}

void mul_axpy_scalar(double a, const double* x, const double* y, double* z,
                     std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) z[i] += (a * x[i]) * y[i];
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{"scalar",     dot_scalar, axpy_scalar,
                       scale_scalar, add_scalar, mul_axpy_scalar};
  return ops;
}

}  // namespace messyseg::kernels
