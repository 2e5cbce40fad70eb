// AArch64 Advanced SIMD variant; NEON is baseline on AArch64.

#include <arm_neon.h>

#include "cyclomat/simd/mod_kernels.hpp"

namespace cyclomat::simd {

namespace {

inline uint32x4_t mulhi_u32(uint32x4_t a, uint32x4_t b) {
  const uint64x2_t lo = vmull_u32(vget_low_u32(a), vget_low_u32(b));
  const uint64x2_t hi = vmull_high_u32(a, b);
  return vuzp2q_u32(vreinterpretq_u32_u64(lo), vreinterpretq_u32_u64(hi));
}

inline uint32x4_t mulmod(uint32x4_t a, uint32x4_t b, uint32x4_t b_pre, uint32x4_t ell) {
  const uint32x4_t q = mulhi_u32(a, b_pre);
  const uint32x4_t r = vmlsq_u32(vmulq_u32(a, b), q, ell);
  return vminq_u32(r, vsubq_u32(r, ell));
}

void submul_neon(std::uint32_t* y, const std::uint32_t* x, std::size_t len, std::uint32_t f, std::uint32_t f_pre,
                 std::uint32_t ell) {
  const uint32x4_t vf = vdupq_n_u32(f);
  const uint32x4_t vf_pre = vdupq_n_u32(f_pre);
  const uint32x4_t vell = vdupq_n_u32(ell);
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    const uint32x4_t t = mulmod(vld1q_u32(x + i), vf, vf_pre, vell);
    const uint32x4_t d = vsubq_u32(vld1q_u32(y + i), t);
    vst1q_u32(y + i, vminq_u32(d, vaddq_u32(d, vell)));
  }
  for (; i < len; ++i) {
    const std::uint32_t t = shoup_mul(x[i], f, f_pre, ell);
    const std::uint32_t d = y[i] - t;
    y[i] = y[i] >= t ? d : d + ell;
  }
}

void horner_step_neon(std::uint32_t* acc, const std::uint32_t* w, const std::uint32_t* w_pre, std::size_t len,
                      std::uint32_t c, std::uint32_t ell) {
  const uint32x4_t vc = vdupq_n_u32(c);
  const uint32x4_t vell = vdupq_n_u32(ell);
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    const uint32x4_t s = vaddq_u32(mulmod(vld1q_u32(acc + i), vld1q_u32(w + i), vld1q_u32(w_pre + i), vell), vc);
    vst1q_u32(acc + i, vminq_u32(s, vsubq_u32(s, vell)));
  }
  for (; i < len; ++i) {
    const std::uint32_t s = shoup_mul(acc[i], w[i], w_pre[i], ell) + c;
    acc[i] = s >= ell ? s - ell : s;
  }
}

}  // namespace

const ModKernels& neon_kernel_table() {
  static const ModKernels kernels{Isa::neon, &submul_neon, &horner_step_neon};
  return kernels;
}

}  // namespace cyclomat::simd
