// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include "cyclomat/simd/mod_kernels.hpp"

namespace cyclomat::simd {

namespace {

// hi32(a[i] * b[i]) for eight unsigned lanes.
inline __m256i mulhi_epu32(__m256i a, __m256i b) {
  const __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(a, b), 32);
  const __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(a, 32), _mm256_srli_epi64(b, 32));
  return _mm256_blend_epi32(even, odd, 0xAA);
}

// a * b mod ell in [0, ell), Shoup form.
inline __m256i mulmod(__m256i a, __m256i b, __m256i b_pre, __m256i ell) {
  const __m256i q = mulhi_epu32(a, b_pre);
  const __m256i r = _mm256_sub_epi32(_mm256_mullo_epi32(a, b), _mm256_mullo_epi32(q, ell));
  return _mm256_min_epu32(r, _mm256_sub_epi32(r, ell));
}

void submul_avx2(std::uint32_t* y, const std::uint32_t* x, std::size_t len, std::uint32_t f, std::uint32_t f_pre,
                 std::uint32_t ell) {
  const __m256i vf = _mm256_set1_epi32(static_cast<int>(f));
  const __m256i vf_pre = _mm256_set1_epi32(static_cast<int>(f_pre));
  const __m256i vell = _mm256_set1_epi32(static_cast<int>(ell));
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    const __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    const __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    const __m256i t = mulmod(vx, vf, vf_pre, vell);
    const __m256i d = _mm256_sub_epi32(vy, t);
    // y < t wraps d above 2^31 while d + ell lands in [0, ell).
    const __m256i out = _mm256_min_epu32(d, _mm256_add_epi32(d, vell));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), out);
  }
  for (; i < len; ++i) {
    const std::uint32_t t = shoup_mul(x[i], f, f_pre, ell);
    const std::uint32_t d = y[i] - t;
    y[i] = y[i] >= t ? d : d + ell;
  }
}

void horner_step_avx2(std::uint32_t* acc, const std::uint32_t* w, const std::uint32_t* w_pre, std::size_t len,
                      std::uint32_t c, std::uint32_t ell) {
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i vell = _mm256_set1_epi32(static_cast<int>(ell));
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
    const __m256i vw = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + i));
    const __m256i vw_pre = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w_pre + i));
    const __m256i s = _mm256_add_epi32(mulmod(va, vw, vw_pre, vell), vc);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), _mm256_min_epu32(s, _mm256_sub_epi32(s, vell)));
  }
  for (; i < len; ++i) {
    const std::uint32_t s = shoup_mul(acc[i], w[i], w_pre[i], ell) + c;
    acc[i] = s >= ell ? s - ell : s;
  }
}

}  // namespace

const ModKernels& avx2_kernel_table() {
  static const ModKernels kernels{Isa::avx2, &submul_avx2, &horner_step_avx2};
  return kernels;
}

}  // namespace cyclomat::simd
