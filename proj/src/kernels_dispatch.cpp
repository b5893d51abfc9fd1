#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "wfsim/kernels.hpp"

namespace wfsim::kernels {

#if !WFSIM_HAVE_AVX2_TU
// Build had no AVX2 translation unit (non-x86 target or unsupported
// compiler); runtime selection degrades to the scalar reference.
const Backend* avx2_backend() { return nullptr; }
#endif

namespace {

const Backend& pick() {
  if (const char* env = std::getenv("WFSIM_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) return scalar_backend();
    if (std::strcmp(env, "avx2") == 0) {
      if (const Backend* b = avx2_backend()) return *b;
      std::fprintf(stderr,
                   "wfsim: WFSIM_KERNELS=avx2 requested but unavailable; "
                   "using scalar kernels\n");
      return scalar_backend();
    }
    std::fprintf(stderr, "wfsim: unknown WFSIM_KERNELS value '%s' ignored\n",
                 env);
  }
  if (const Backend* b = avx2_backend()) return *b;
  return scalar_backend();
}

}  // namespace

const Backend& active() {
  static const Backend& chosen = pick();
  return chosen;
}

}  // namespace wfsim::kernels
