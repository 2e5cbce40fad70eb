#include <algorithm>
#include <cmath>
#include <numeric>

#include "cyclomat/arith.hpp"
#include "cyclomat/errors.hpp"
#include "cyclomat/modular.hpp"

namespace cyclomat {

namespace {

double log2_mpz(const mpz_class& v) {
  if (v == 0) return -INFINITY;
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log2(std::fabs(mant)) + static_cast<double>(exp);
}

// log2(sum 2^x_i), robust to very large exponents.
double log2_sum_exp2(const std::vector<double>& xs) {
  const double top = *std::max_element(xs.begin(), xs.end());
  if (std::isinf(top)) return top;
  double s = 0.0;
  for (double x : xs) s += std::exp2(x - top);
  return top + std::log2(s);
}

}  // namespace

CycNum det_multimodular(std::span<const CycNum> entries, std::size_t n, std::uint64_t m,
                        const simd::ModKernels& kernels, MultimodularStats* stats) {
  if (entries.size() != n * n) throw InvalidParameter("entry count does not match dimension");
  if (n == 0) return CycNum::one(m);
  for (const CycNum& e : entries) {
    if (e.conductor() != m) throw ConductorMismatch("matrix entry has conductor " + std::to_string(e.conductor()));
  }
  const auto field = CyclotomicField::get(m);
  const std::size_t phi = field->degree();

  // Clear denominators row by row: det A = det A' / prod L_i.
  std::vector<std::vector<mpz_class>> ints(n * n);
  mpz_class den_product = 1;
  std::vector<double> row_log2(n);
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class lcm = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), entries[i * n + j].denominator().get_mpz_t());
    den_product *= lcm;
    std::vector<double> norms;
    for (std::size_t j = 0; j < n; ++j) {
      const CycNum& e = entries[i * n + j];
      const mpz_class scale = lcm / e.denominator();
      auto& out = ints[i * n + j];
      out.resize(phi);
      mpz_class l1 = 0;
      for (std::size_t k = 0; k < phi; ++k) {
        out[k] = e.numerators()[k] * scale;
        l1 += abs(out[k]);
      }
      norms.push_back(2.0 * log2_mpz(l1));
    }
    row_log2[i] = 0.5 * log2_sum_exp2(norms);
    if (std::isinf(row_log2[i])) {
      if (stats != nullptr) *stats = {};
      return CycNum::zero(m);
    }
  }

  // On |z| = 1 every entry is bounded by its l1 norm, so Hadamard bounds the
  // unreduced determinant polynomial (degree <= n(phi-1)) coefficientwise by
  // H; folding each x^k back into the power basis costs at most the monomial
  // sup norm per term.
  double bound = std::accumulate(row_log2.begin(), row_log2.end(), 0.0);
  bound += std::log2(static_cast<double>(n * (phi - 1) + 1));
  bound += std::log2(static_cast<double>(field->monomial_sup_norm()));
  const double needed = bound + 1.0 /* sign */ + 8.0 /* floating-point slack */;
  const auto primes = crt_primes(m, needed);
  if (stats != nullptr) *stats = {primes.size(), bound};

  std::vector<std::uint64_t> exponents;
  for (std::uint64_t j = 0; j < m; ++j) {
    if (std::gcd(j, m) == 1) exponents.push_back(j);
  }

  std::vector<mpz_class> result(phi, 0);
  mpz_class modulus = 1;
  std::vector<std::uint32_t> residues(phi);
  for (const CrtPrime& prime : primes) {
    const std::uint32_t ell = prime.ell;
    std::vector<std::uint32_t> points(phi), points_pre(phi);
    for (std::size_t t = 0; t < phi; ++t) {
      points[t] = static_cast<std::uint32_t>(pow_mod(prime.root, exponents[t], ell));
      points_pre[t] = simd::shoup_precompute(points[t], ell);
    }

    // Evaluate every entry at every root, then one determinant per root.
    std::vector<std::vector<std::uint32_t>> mats(phi, std::vector<std::uint32_t>(n * n));
    std::vector<std::uint32_t> coeffs(phi);
    for (std::size_t idx = 0; idx < n * n; ++idx) {
      for (std::size_t k = 0; k < phi; ++k) coeffs[k] = static_cast<std::uint32_t>(mpz_fdiv_ui(ints[idx][k].get_mpz_t(), ell));
      const auto values = evaluate_at(coeffs, points, points_pre, ell, kernels);
      for (std::size_t t = 0; t < phi; ++t) mats[t][idx] = values[t];
    }
    std::vector<std::uint32_t> dets(phi);
    for (std::size_t t = 0; t < phi; ++t) dets[t] = det_mod_prime(mats[t], n, ell, kernels);

    // Lagrange interpolation with master polynomial Phi_m mod ell.
    std::vector<std::uint64_t> master(phi + 1);
    for (std::size_t k = 0; k <= phi; ++k) {
      const std::int64_t c = field->modulus()[k] % static_cast<std::int64_t>(ell);
      master[k] = static_cast<std::uint64_t>(c < 0 ? c + ell : c);
    }
    std::vector<std::uint64_t> interp(phi, 0), quotient(phi);
    for (std::size_t t = 0; t < phi; ++t) {
      const std::uint64_t r = points[t];
      quotient[phi - 1] = 1;
      for (std::size_t k = phi - 1; k-- > 0;) quotient[k] = (master[k + 1] + r * quotient[k + 1]) % ell;
      std::uint64_t deriv = 0;
      for (std::size_t k = phi; k-- > 0;) deriv = (deriv * r + quotient[k]) % ell;
      const std::uint64_t w = dets[t] * static_cast<std::uint64_t>(inv_mod(static_cast<std::uint32_t>(deriv), ell)) % ell;
      for (std::size_t k = 0; k < phi; ++k) interp[k] = (interp[k] + w * quotient[k]) % ell;
    }

    // Incremental CRT: x += M * ((v - x) * M^{-1} mod ell).
    const auto m_mod = static_cast<std::uint32_t>(mpz_fdiv_ui(modulus.get_mpz_t(), ell));
    const std::uint64_t m_inv = inv_mod(m_mod, ell);
    for (std::size_t k = 0; k < phi; ++k) {
      const std::uint64_t x_mod = mpz_fdiv_ui(result[k].get_mpz_t(), ell);
      const std::uint64_t diff = (interp[k] + ell - x_mod) % ell;
      const std::uint64_t h = diff * m_inv % ell;
      result[k] += modulus * static_cast<unsigned long>(h);
    }
    modulus *= ell;
  }

  const mpz_class half = modulus / 2;
  for (auto& c : result) {
    if (c > half) c -= modulus;
  }
  return CycNum::from_integers(m, std::move(result), den_product);
}

}  // namespace cyclomat
