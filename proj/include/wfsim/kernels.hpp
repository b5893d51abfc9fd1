#pragma once

#include <complex>
#include <cstddef>

// Low-level complex-double kernels. Scalar reference implementations define
// the semantics; the AVX2 variants must agree with them to floating-point
// reordering accuracy (FMA contraction), which the test suite enforces.
// Everything above this layer is backend-agnostic.

namespace wfsim::kernels {

using cd = std::complex<double>;

struct Backend {
  const char* name;
  // y[i] += a * x[i]
  void (*axpy)(std::size_t n, cd a, const cd* x, cd* y);
  // x[i] *= a
  void (*scale)(std::size_t n, cd a, cd* x);
  // sum_i x[i] * y[i]  (unconjugated)
  cd (*dotu)(std::size_t n, const cd* x, const cd* y);
  // sum_i conj(x[i]) * y[i]
  cd (*dotc)(std::size_t n, const cd* x, const cd* y);
  // C += A * B, row-major dense, A is m x k, B is k x n, C is m x n
  void (*gemm_acc)(std::size_t m, std::size_t k, std::size_t n, const cd* a,
                   const cd* b, cd* c);
};

// The scalar reference backend; always available.
const Backend& scalar_backend();

// The AVX2 backend, or nullptr when the build or the CPU lacks support.
const Backend* avx2_backend();

// Backend selected once per process: WFSIM_KERNELS=scalar|avx2 wins if set
// (falling back to scalar with a stderr note when avx2 is unavailable),
// otherwise CPU detection picks the widest supported variant.
const Backend& active();

}  // namespace wfsim::kernels
