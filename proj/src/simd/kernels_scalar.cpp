#include "cyclomat/simd/mod_kernels.hpp"

namespace cyclomat::simd {

namespace {

void submul_scalar(std::uint32_t* y, const std::uint32_t* x, std::size_t len, std::uint32_t f, std::uint32_t f_pre,
                   std::uint32_t ell) {
  for (std::size_t i = 0; i < len; ++i) {
    const std::uint32_t t = shoup_mul(x[i], f, f_pre, ell);
    const std::uint32_t d = y[i] - t;
    y[i] = y[i] >= t ? d : d + ell;
  }
}

void horner_step_scalar(std::uint32_t* acc, const std::uint32_t* w, const std::uint32_t* w_pre, std::size_t len,
                        std::uint32_t c, std::uint32_t ell) {
  for (std::size_t i = 0; i < len; ++i) {
    const std::uint32_t s = shoup_mul(acc[i], w[i], w_pre[i], ell) + c;
    acc[i] = s >= ell ? s - ell : s;
  }
}

}  // namespace

const ModKernels& scalar_kernels() {
  static const ModKernels kernels{Isa::scalar, &submul_scalar, &horner_step_scalar};
  return kernels;
}

}  // namespace cyclomat::simd
