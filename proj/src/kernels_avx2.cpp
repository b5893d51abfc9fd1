#include "wfsim/kernels.hpp"

// AVX2+FMA variants. A __m256d holds two interleaved complex doubles
// [re0 im0 re1 im1]; the complex product against a broadcast scalar a is
//   re' = re·ar − im·ai,  im' = im·ar + re·ai
// which fmaddsub computes in one shot after swapping re/im pairs. Results
// may differ from the scalar backend by FMA contraction only; the
// equivalence tests bound that difference.

#include <immintrin.h>

namespace wfsim::kernels {
namespace {

// a*x for one packed pair of complex values.
inline __m256d cmul_broadcast(__m256d x, __m256d ar, __m256d ai) {
  __m256d swapped = _mm256_permute_pd(x, 0x5);  // [im0 re0 im1 re1]
  return _mm256_fmaddsub_pd(x, ar, _mm256_mul_pd(swapped, ai));
}

void axpy_avx2(std::size_t n, cd a, const cd* x, cd* y) {
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  auto* xd = reinterpret_cast<const double*>(x);
  auto* yd = reinterpret_cast<double*>(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(yv, cmul_broadcast(xv, ar, ai)));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void scale_avx2(std::size_t n, cd a, cd* x) {
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  auto* xd = reinterpret_cast<double*>(x);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    _mm256_storeu_pd(xd + 2 * i, cmul_broadcast(xv, ar, ai));
  }
  for (; i < n; ++i) x[i] *= a;
}

// Packed complex product x*y:
//   re' = xr·yr − xi·yi,  im' = xr·yi + xi·yr
// via duplicating xr across each pair (movedup) and xi (via permute).
inline __m256d cmul_packed(__m256d x, __m256d y) {
  __m256d xr = _mm256_movedup_pd(x);                       // [xr0 xr0 xr1 xr1]
  __m256d xi = _mm256_permute_pd(x, 0xF);                  // [xi0 xi0 xi1 xi1]
  __m256d ys = _mm256_permute_pd(y, 0x5);                  // [yi0 yr0 yi1 yr1]
  return _mm256_fmaddsub_pd(xr, y, _mm256_mul_pd(xi, ys));
}

cd dotu_avx2(std::size_t n, const cd* x, const cd* y) {
  auto* xd = reinterpret_cast<const double*>(x);
  auto* yd = reinterpret_cast<const double*>(y);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    acc = _mm256_add_pd(acc, cmul_packed(xv, yv));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  cd out{lanes[0] + lanes[2], lanes[1] + lanes[3]};
  for (; i < n; ++i) out += x[i] * y[i];
  return out;
}

cd dotc_avx2(std::size_t n, const cd* x, const cd* y) {
  // conj(x)*y: re' = xr·yr + xi·yi, im' = xr·yi − xi·yr. Using fmsubadd
  // (sub on odd lanes, add on even) with the roles arranged accordingly:
  // even lane target re' needs +, odd lane target im' needs −, so compute
  // xr·y ∓ (xi·ys) with fmsubadd giving [+,−,+,−]... fmsubadd computes
  // even: a·b−c, odd: a·b+c — the opposite. Swap by negating xi instead.
  auto* xd = reinterpret_cast<const double*>(x);
  auto* yd = reinterpret_cast<const double*>(y);
  const __m256d negodd = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    // conj(x)*y equals cmul_packed with x's imaginary lanes negated.
    __m256d xc = _mm256_xor_pd(xv, negodd);
    acc = _mm256_add_pd(acc, cmul_packed(xc, yv));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  cd out{lanes[0] + lanes[2], lanes[1] + lanes[3]};
  for (; i < n; ++i) out += std::conj(x[i]) * y[i];
  return out;
}

void gemm_acc_avx2(std::size_t m, std::size_t k, std::size_t n, const cd* a,
                   const cd* b, cd* c) {
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t l = 0; l < k; ++l)
      axpy_avx2(n, a[i * k + l], b + l * n, c + i * n);
}

bool cpu_supported() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

}  // namespace

const Backend* avx2_backend() {
  static const Backend backend{"avx2",      axpy_avx2, scale_avx2,
                               dotu_avx2,   dotc_avx2, gemm_acc_avx2};
  static const bool ok = cpu_supported();
  return ok ? &backend : nullptr;
}

}  // namespace wfsim::kernels
