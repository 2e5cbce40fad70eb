#pragma once

// Independent reference implementations used only by the tests. They share
// no code with the library beyond CycNum's ring operations, and are chosen
// to be slow but obviously correct.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "cyclomat/cyclotomic.hpp"

namespace oracle {

using cx = std::complex<long double>;

// Laplace expansion along the first row.
inline cyclomat::CycNum cofactor_det(const std::vector<cyclomat::CycNum>& a, std::size_t n, std::uint64_t m) {
  if (n == 0) return cyclomat::CycNum::one(m);
  if (n == 1) return a[0];
  cyclomat::CycNum total = cyclomat::CycNum::zero(m);
  for (std::size_t col = 0; col < n; ++col) {
    if (a[col].is_zero()) continue;
    std::vector<cyclomat::CycNum> minor;
    minor.reserve((n - 1) * (n - 1));
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (j != col) minor.push_back(a[i * n + j]);
    cyclomat::CycNum term = a[col] * cofactor_det(minor, n - 1, m);
    if (col % 2 == 0) total += term;
    else total -= term;
  }
  return total;
}

// Partial-pivot elimination in long double complex.
inline cx complex_det(std::vector<cx> a, std::size_t n) {
  cx det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t i = c + 1; i < n; ++i)
      if (std::abs(a[i * n + c]) > std::abs(a[piv * n + c])) piv = i;
    if (std::abs(a[piv * n + c]) == 0) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[c * n + j], a[piv * n + j]);
      det = -det;
    }
    det *= a[c * n + c];
    for (std::size_t i = c + 1; i < n; ++i) {
      const cx f = a[i * n + c] / a[c * n + c];
      for (std::size_t j = c; j < n; ++j) a[i * n + j] -= f * a[c * n + j];
    }
  }
  return det;
}

// sum_i c_i zeta_m^i from the power-basis coordinates, in long double.
inline cx embed(const cyclomat::CycNum& a) {
  const long double m = static_cast<long double>(a.conductor());
  cx acc = 0;
  for (std::size_t i = 0; i < a.degree(); ++i) {
    const long double angle = 2 * std::numbers::pi_v<long double> * static_cast<long double>(i) / m;
    acc += static_cast<long double>(a.coeff(i).get_d()) * cx(std::cos(angle), std::sin(angle));
  }
  return acc;
}

inline cx root_of_unity(std::int64_t e, std::uint64_t m) {
  const long double angle = 2 * std::numbers::pi_v<long double> * static_cast<long double>(e) / static_cast<long double>(m);
  return {std::cos(angle), std::sin(angle)};
}

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

// Prime field Z/p with discrete logs by brute force from the smallest
// primitive root; this is the whole oracle for n = 1 character sums.
struct PrimeField {
  std::uint64_t p;
  std::uint64_t g = 0;
  std::vector<std::int64_t> log;  // log[x] for x in [1, p); log[0] = -1

  explicit PrimeField(std::uint64_t prime) : p(prime), log(prime, -1) {
    for (std::uint64_t cand = 2; cand < p; ++cand) {
      std::uint64_t x = 1, order = 0;
      do {
        x = x * cand % p;
        ++order;
      } while (x != 1);
      if (order == p - 1) {
        g = cand;
        break;
      }
    }
    std::uint64_t x = 1;
    for (std::uint64_t e = 0; e + 1 < p; ++e) {
      log[x] = static_cast<std::int64_t>(e);
      x = x * g % p;
    }
  }

  // chi^r(x) as a complex number (0 at x = 0, 1 for r = 0 elsewhere).
  cx chi(std::int64_t r, std::uint64_t x) const {
    x %= p;
    if (x == 0) return 0;
    return root_of_unity(r * log[x], p - 1);
  }

  cx jacobi(std::int64_t a, std::int64_t b) const {
    cx s = 0;
    for (std::uint64_t x = 0; x < p; ++x) s += chi(a, x) * chi(b, (p + 1 - x) % p);
    return s;
  }

  cx gauss(std::int64_t r) const {
    cx s = 0;
    for (std::uint64_t x = 1; x < p; ++x) s += chi(r, x) * root_of_unity(static_cast<std::int64_t>(x), p);
    return s;
  }
};

// binom(n, k) mod p digit by digit.
inline std::uint64_t lucas_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  std::uint64_t result = 1;
  while (n || k) {
    const std::uint64_t ni = n % p, ki = k % p;
    if (ki > ni) return 0;
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t i = 0; i < ki; ++i) {
      num = num * ((ni - i) % p) % p;
      den = den * ((i + 1) % p) % p;
    }
    result = result * num % p * pow_mod(den, p - 2, p) % p;
    n /= p;
    k /= p;
  }
  return result;
}

// h(-p) for p = 3 (mod 4), p > 3, from the half-range Dirichlet sum
// h = sum_{a < p/2} (a/p) / (2 - (2/p)).
inline std::int64_t dirichlet_class_number(std::uint64_t p) {
  std::int64_t s = 0;
  for (std::uint64_t a = 1; a < (p + 1) / 2; ++a) s += pow_mod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
  const std::int64_t two = pow_mod(2, (p - 1) / 2, p) == 1 ? 1 : -1;
  return s / (2 - two);
}

inline bool naive_is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Random element of Q(zeta_m) with small integer numerators over a small
// denominator; `density` is the chance each coordinate is nonzero.
inline cyclomat::CycNum random_cyc(std::mt19937_64& rng, std::uint64_t m, int bound = 5, double density = 0.7,
                                   bool integral = false) {
  const auto field = cyclomat::CyclotomicField::get(m);
  std::uniform_int_distribution<int> coef(-bound, bound);
  std::uniform_int_distribution<int> denom(1, 4);
  std::bernoulli_distribution keep(density);
  std::vector<mpz_class> nums(field->degree());
  for (auto& c : nums) c = keep(rng) ? coef(rng) : 0;
  return cyclomat::CycNum::from_integers(m, std::move(nums), integral ? 1 : denom(rng));
}

}  // namespace oracle
