#pragma once

// Exact determinants over Z[zeta_m] by reduction modulo word-size primes.
//
// For a prime ell = 1 (mod m), Phi_m splits into distinct linear factors over
// F_ell, so Z[zeta_m]/(ell) is a product of phi(m) copies of F_ell: one per
// root w^j (w a primitive m-th root of unity mod ell, gcd(j, m) = 1). A
// determinant is computed in each copy, interpolated back to a polynomial of
// degree < phi(m) mod ell, and the coordinates are recovered over Z by CRT
// once the product of the primes exceeds twice an a-priori coefficient bound.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cyclomat/cyclotomic.hpp"
#include "cyclomat/simd/mod_kernels.hpp"

namespace cyclomat {

struct CrtPrime {
  std::uint32_t ell = 0;
  /// A primitive m-th root of unity modulo ell.
  std::uint32_t root = 0;
};

/// Primes ell = 1 (mod m), ell < 2^31, taken downward from 2^31, whose
/// product has at least `bits` bits. Throws CapacityError if the supply runs out.
std::vector<CrtPrime> crt_primes(std::uint64_t m, double bits);

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t ell);

/// Determinant of the n x n row-major matrix `a` over F_ell by Gaussian
/// elimination; `a` is overwritten.
std::uint32_t det_mod_prime(std::vector<std::uint32_t>& a, std::size_t n, std::uint32_t ell,
                            const simd::ModKernels& kernels);

/// Values of the power-basis polynomial `coeffs` (residues mod ell) at every
/// point of `points`, using the batched Horner kernel.
std::vector<std::uint32_t> evaluate_at(std::span<const std::uint32_t> coeffs, std::span<const std::uint32_t> points,
                                       std::span<const std::uint32_t> points_pre, std::uint32_t ell,
                                       const simd::ModKernels& kernels);

struct MultimodularStats {
  std::size_t primes = 0;
  /// log2 of the certified bound on the determinant's integer coordinates.
  double bound_bits = 0.0;
};

/// Exact determinant of an n x n matrix (row-major) whose entries all lie in
/// Q(zeta_m). Rational coordinates are handled by clearing row denominators.
CycNum det_multimodular(std::span<const CycNum> entries, std::size_t n, std::uint64_t m,
                        const simd::ModKernels& kernels = simd::active_kernels(), MultimodularStats* stats = nullptr);

}  // namespace cyclomat
