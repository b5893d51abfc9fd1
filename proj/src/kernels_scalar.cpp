#include "wfsim/kernels.hpp"

// Reference semantics for every kernel. Deliberately plain loops: this
// backend defines correctness and runs on any target.

namespace wfsim::kernels {
namespace {

void axpy_scalar(std::size_t n, cd a, const cd* x, cd* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale_scalar(std::size_t n, cd a, cd* x) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

cd dotu_scalar(std::size_t n, const cd* x, const cd* y) {
  cd acc{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

cd dotc_scalar(std::size_t n, const cd* x, const cd* y) {
  cd acc{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

// Row-major accumulate: each A entry scales one B row into one C row, so the
// inner loop is the axpy kernel and stays contiguous.
void gemm_acc_scalar(std::size_t m, std::size_t k, std::size_t n, const cd* a,
                     const cd* b, cd* c) {
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t l = 0; l < k; ++l)
      axpy_scalar(n, a[i * k + l], b + l * n, c + i * n);
}

}  // namespace

const Backend& scalar_backend() {
  static const Backend backend{"scalar",      axpy_scalar, scale_scalar,
                               dotu_scalar,   dotc_scalar, gemm_acc_scalar};
  return backend;
}

}  // namespace wfsim::kernels
