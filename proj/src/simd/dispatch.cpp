#include <cstdlib>
#include <string>

#include "cyclomat/simd/mod_kernels.hpp"

namespace cyclomat::simd {

#if defined(CYCLOMAT_HAVE_AVX2_KERNELS)
const ModKernels& avx2_kernel_table();
#endif
#if defined(CYCLOMAT_HAVE_NEON_KERNELS)
const ModKernels& neon_kernel_table();
#endif

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "unknown";
}

const ModKernels* avx2_kernels() {
#if defined(CYCLOMAT_HAVE_AVX2_KERNELS)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &avx2_kernel_table() : nullptr;
#else
  return nullptr;
#endif
}

const ModKernels* neon_kernels() {
#if defined(CYCLOMAT_HAVE_NEON_KERNELS)
  return &neon_kernel_table();
#else
  return nullptr;
#endif
}

namespace {

const ModKernels& select_kernels() {
  const ModKernels* best = avx2_kernels();
  if (best == nullptr) best = neon_kernels();
  if (best == nullptr) best = &scalar_kernels();
  if (const char* env = std::getenv("CYCLOMAT_SIMD")) {
    const std::string want(env);
    if (want == "scalar") return scalar_kernels();
    if (want == "avx2" && avx2_kernels() != nullptr) return *avx2_kernels();
    if (want == "neon" && neon_kernels() != nullptr) return *neon_kernels();
  }
  return *best;
}

}  // namespace

const ModKernels& active_kernels() {
  static const ModKernels& chosen = select_kernels();
  return chosen;
}

}  // namespace cyclomat::simd
