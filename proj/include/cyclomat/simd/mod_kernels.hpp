#pragma once

// Word-size modular arithmetic kernels used by the multimodular determinant.
//
// All kernels work on residues modulo an odd prime ell < 2^31 stored as
// uint32_t, and use Shoup's precomputed-quotient multiplication so that a
// product a*b mod ell needs no 64-bit division: with b' = floor(b * 2^32 / ell),
//   q = hi32(a * b'),  r = a*b - q*ell (mod 2^32) in [0, 2*ell).
// The scalar kernels are the reference; the AVX2 and NEON variants must
// produce bit-identical output and are selected at runtime.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace cyclomat::simd {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa);

inline std::uint32_t shoup_precompute(std::uint32_t b, std::uint32_t ell) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(b) << 32) / ell);
}

/// a * b mod ell given b' = shoup_precompute(b, ell); a < 2^32, b < ell.
inline std::uint32_t shoup_mul(std::uint32_t a, std::uint32_t b, std::uint32_t b_pre, std::uint32_t ell) {
  const auto q = static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b_pre) >> 32);
  std::uint32_t r = a * b - q * ell;
  return r >= ell ? r - ell : r;
}

struct ModKernels {
  Isa isa;
  /// y[i] = (y[i] - f * x[i]) mod ell, with f_pre = shoup_precompute(f, ell).
  void (*submul)(std::uint32_t* y, const std::uint32_t* x, std::size_t len, std::uint32_t f, std::uint32_t f_pre,
                 std::uint32_t ell);
  /// acc[i] = (acc[i] * w[i] + c) mod ell, with w_pre[i] = shoup_precompute(w[i], ell).
  /// One Horner step evaluating a polynomial at many points at once.
  void (*horner_step)(std::uint32_t* acc, const std::uint32_t* w, const std::uint32_t* w_pre, std::size_t len,
                      std::uint32_t c, std::uint32_t ell);
};

const ModKernels& scalar_kernels();
/// nullptr when the variant was not compiled in or the CPU lacks the ISA.
const ModKernels* avx2_kernels();
const ModKernels* neon_kernels();

/// Best kernels for this CPU. CYCLOMAT_SIMD=scalar|avx2|neon overrides the
/// choice when the requested variant is available.
const ModKernels& active_kernels();

}  // namespace cyclomat::simd
