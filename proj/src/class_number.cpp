#include <cstdlib>
#include <numeric>
#include <string>

#include "cyclomat/arith.hpp"
#include "cyclomat/errors.hpp"
#include "cyclomat/theorems.hpp"

namespace cyclomat {

namespace {

void require_discriminant(std::uint64_t p) {
  if (!is_prime(p) || p % 4 != 3 || p <= 3) {
    throw InvalidParameter("class number needs a prime p = 3 (mod 4), p > 3; got " + std::to_string(p));
  }
}

}  // namespace

std::uint64_t class_number(std::uint64_t p) {
  require_discriminant(p);
  const auto disc = static_cast<std::int64_t>(p);
  std::uint64_t count = 0;
  // Reduced: |b| <= a <= c, so 3a^2 <= p.
  for (std::int64_t a = 1; 3 * a * a <= disc; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      const std::int64_t num = b * b + disc;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      if (c < a) continue;
      if (a == c && b < 0) continue;
      if (std::gcd(std::gcd(a, std::abs(b)), c) != 1) continue;
      ++count;
    }
  }
  return count;
}

std::uint64_t class_number_analytic(std::uint64_t p) {
  require_discriminant(p);
  const std::uint64_t half = (p - 1) / 2;
  std::int64_t sum = 0;
  for (std::uint64_t a = 1; a < p; ++a) {
    const bool residue = pow_mod(a, half, p) == 1;
    sum += residue ? static_cast<std::int64_t>(a) : -static_cast<std::int64_t>(a);
  }
  return static_cast<std::uint64_t>(-sum / static_cast<std::int64_t>(p));
}

std::uint32_t binomial_mod_prime(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
  if (k > n) return 0;
  // v_p(binom) by Legendre's formula.
  auto valuation = [p](std::uint64_t x) {
    std::uint64_t v = 0;
    for (std::uint64_t pk = p; pk <= x; pk *= p) {
      v += x / pk;
      if (pk > x / p) break;
    }
    return v;
  };
  if (valuation(n) > valuation(k) + valuation(n - k)) return 0;
  // Unit parts of the factorials.
  auto unit_factorial = [p](std::uint64_t x) {
    std::uint64_t acc = 1;
    for (std::uint64_t i = 2; i <= x; ++i) {
      std::uint64_t u = i;
      while (u % p == 0) u /= p;
      acc = acc * (u % p) % p;
    }
    return acc;
  };
  const std::uint64_t num = unit_factorial(n);
  const std::uint64_t den = unit_factorial(k) * unit_factorial(n - k) % p;
  return static_cast<std::uint32_t>(num * pow_mod(den, p - 2, p) % p);
}

}  // namespace cyclomat
