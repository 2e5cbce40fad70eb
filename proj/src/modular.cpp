#include "cyclomat/modular.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "cyclomat/arith.hpp"
#include "cyclomat/errors.hpp"

namespace cyclomat {

namespace {

constexpr std::uint64_t kPrimeCeiling = 1ULL << 31;

std::uint32_t primitive_root_of_unity(std::uint64_t m, std::uint32_t ell) {
  const auto factors = prime_divisors(ell - 1);
  for (std::uint64_t g = 2; g < ell; ++g) {
    bool generator = true;
    for (std::uint64_t r : factors) {
      if (pow_mod(g, (ell - 1) / r, ell) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return static_cast<std::uint32_t>(pow_mod(g, (ell - 1) / m, ell));
  }
  throw DomainError("no primitive root modulo " + std::to_string(ell));
}

// Primes are generated lazily per conductor and shared between calls.
struct PrimeSupply {
  std::vector<CrtPrime> primes;
  std::uint64_t next_candidate = 0;
  bool exhausted = false;
};

std::mutex supply_mutex;
std::map<std::uint64_t, PrimeSupply> supplies;

}  // namespace

std::vector<CrtPrime> crt_primes(std::uint64_t m, double bits) {
  if (m == 0) throw InvalidParameter("conductor must be positive");
  if (m >= kPrimeCeiling / 4) throw CapacityError("conductor too large for word-size CRT primes");
  std::lock_guard lock(supply_mutex);
  auto [it, inserted] = supplies.try_emplace(m);
  PrimeSupply& supply = it->second;
  if (inserted) {
    // Largest value below 2^31 congruent to 1 mod m (m = 1, 2 allowed).
    supply.next_candidate = (kPrimeCeiling - 2) / m * m + 1;
  }
  std::vector<CrtPrime> out;
  double have = 0.0;
  std::size_t index = 0;
  while (have < bits) {
    if (index == supply.primes.size()) {
      while (!supply.exhausted) {
        const std::uint64_t c = supply.next_candidate;
        if (c < 3) {
          supply.exhausted = true;
          break;
        }
        supply.next_candidate -= m;
        if (c % 2 == 1 && is_prime(c)) {
          const auto ell = static_cast<std::uint32_t>(c);
          supply.primes.push_back({ell, primitive_root_of_unity(m, ell)});
          break;
        }
      }
      if (index == supply.primes.size()) throw CapacityError("ran out of CRT primes for conductor " + std::to_string(m));
    }
    out.push_back(supply.primes[index]);
    have += std::log2(static_cast<double>(supply.primes[index].ell));
    ++index;
  }
  return out;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t ell) {
  if (a % ell == 0) throw DivisionByZero("inverse of zero modulo " + std::to_string(ell));
  return static_cast<std::uint32_t>(pow_mod(a, ell - 2, ell));
}

std::uint32_t det_mod_prime(std::vector<std::uint32_t>& a, std::size_t n, std::uint32_t ell,
                            const simd::ModKernels& kernels) {
  std::uint64_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot * n + c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(c * n), a.begin() + static_cast<std::ptrdiff_t>((c + 1) * n),
                       a.begin() + static_cast<std::ptrdiff_t>(pivot * n));
      det = det == 0 ? 0 : ell - det;
    }
    const std::uint32_t p = a[c * n + c];
    det = det * p % ell;
    const std::uint64_t p_inv = inv_mod(p, ell);
    const std::uint32_t* pivot_row = a.data() + c * n + c;
    for (std::size_t r = c + 1; r < n; ++r) {
      std::uint32_t* row = a.data() + r * n + c;
      if (row[0] == 0) continue;
      const auto f = static_cast<std::uint32_t>(row[0] * p_inv % ell);
      kernels.submul(row, pivot_row, n - c, f, simd::shoup_precompute(f, ell), ell);
    }
  }
  return static_cast<std::uint32_t>(det);
}

std::vector<std::uint32_t> evaluate_at(std::span<const std::uint32_t> coeffs, std::span<const std::uint32_t> points,
                                       std::span<const std::uint32_t> points_pre, std::uint32_t ell,
                                       const simd::ModKernels& kernels) {
  std::vector<std::uint32_t> acc(points.size(), 0);
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    kernels.horner_step(acc.data(), points.data(), points_pre.data(), points.size(), coeffs[k], ell);
  }
  return acc;
}

}  // namespace cyclomat
