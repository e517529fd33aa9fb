#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace messyseg::kernels {

// Data-parallel primitives behind the tensor and layer code. Every variant is
// interchangeable with the scalar reference: elementwise kernels (axpy, scale,
// add, mul_axpy) are bit-identical to scalar, reductions (dot) may reassociate
// and are held to a tight relative tolerance by the equivalence tests.
struct Ops {
  const char* name;
  // sum_i x[i]*y[i]
  double (*dot)(const double* x, const double* y, std::size_t n);
  // y[i] += a * x[i]
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  // x[i] *= a
  void (*scale)(double a, double* x, std::size_t n);
  // y[i] += x[i]
  void (*add)(const double* x, double* y, std::size_t n);
  // z[i] += (a * x[i]) * y[i]
  void (*mul_axpy)(double a, const double* x, const double* y, double* z,
                   std::size_t n);
};

const Ops& scalar_ops();

// Scalar first, then every SIMD variant the running CPU supports.
std::vector<const Ops*> available_ops();

// The active variant. Selected once on first use: the MESSYSEG_KERNELS
// environment variable ("scalar", "avx2", "neon", "auto") wins, otherwise the
// widest supported variant is picked. Stable for the life of the process
// unless select() is called (tests only).
const Ops& active();

void select(const std::string& name);

}  // namespace messyseg::kernels
