// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
//
// Tolerances are pinned here rather than taken from the environment:
// 192-bit MPFR precision and relative tolerance 1e-6 for every numeric check.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cyclomat/arith.hpp"
#include "cyclomat/char_sums.hpp"
#include "cyclomat/matrices.hpp"
#include "cyclomat/theorems.hpp"
#include "../oracles.hpp"

using namespace cyclomat;

namespace {

constexpr int kPrecision = 192;
constexpr double kRelTol = 1e-6;

FiniteField field_of(std::uint32_t q) {
  const auto pp = as_prime_power(q);
  return FiniteField::make(static_cast<std::uint32_t>(pp.p), pp.n);
}

bool is_odd_prime_power(std::uint32_t q) {
  const auto pp = as_prime_power(q);
  return pp.p != 0 && pp.p != 2;
}

VerifyOptions options(Backend backend) {
  VerifyOptions o;
  o.precision_bits = kPrecision;
  o.rel_tol = kRelTol;
  o.backend = backend;
  return o;
}

// Counts reports by status and remembers the first failure.
struct Tally {
  std::size_t pass = 0, fail = 0, skipped = 0;
  std::string first_failure;

  void add(const VerificationReport& r) {
    if (r.status == Status::pass) ++pass;
    else if (r.status == Status::skipped) ++skipped;
    else {
      ++fail;
      if (first_failure.empty()) {
        std::ostringstream s;
        s << r.claim_id;
        for (const auto& [k, v] : r.parameters) s << ' ' << k << '=' << v.dump();
        s << ": " << r.reason;
        first_failure = s.str();
      }
    }
  }
  // A criterion over a nonempty domain: something ran and nothing failed.
  bool ok() const { return fail == 0 && pass > 0; }
  std::string summary() const {
    std::ostringstream s;
    s << pass << " pass, " << fail << " fail, " << skipped << " skipped";
    if (!first_failure.empty()) s << "; first failure: " << first_failure;
    return s.str();
  }
};

const VerificationReport* find_check(const VerificationReport& r, const std::string& id) {
  for (const auto& c : r.checks)
    if (c.claim_id == id) return &c;
  return nullptr;
}

// Folds the named subcheck of `r` into `t`; a missing subcheck is a failure.
void add_subcheck(Tally& t, const VerificationReport& r, const std::string& id) {
  if (const auto* c = find_check(r, id)) {
    t.add(*c);
  } else {
    VerificationReport missing = r;
    missing.fail("subcheck " + id + " missing");
    t.add(missing);
  }
}

int failures = 0;

void criterion(int number, const std::string& title, const std::function<std::pair<bool, std::string>()>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::pair<bool, std::string> result;
  try {
    result = body();
  } catch (const std::exception& e) {
    result = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!result.first) ++failures;
  std::printf("%s  criterion %2d: %s [%s] (%.1f s)\n", result.first ? "PASS" : "FAIL", number, title.c_str(),
              result.second.c_str(), secs);
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

const std::vector<std::uint32_t> kThreeModFourModuli = {7, 11, 19, 23, 27, 31, 43, 47, 59, 67};
const std::vector<std::uint32_t> kFourthModuli = {5, 13, 29, 37, 53};

}  // namespace

int main() {
  std::printf("precision %d bits, relative tolerance %g\n", kPrecision, kRelTol);

  criterion(1, "det B_{q,2} equals the Jacobi product exactly, q = 3 (mod 4) <= 67, under 10 min", [] {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    for (std::uint32_t q : kThreeModFourModuli) {
      const auto f = field_of(q);
      for (std::int64_t r = 1; r <= q - 2; ++r) add_subcheck(t, verify_thm1_i(f, r, options(Backend::exact)), "thm1.i.jacobi_product");
    }
    const double secs = seconds_since(start);
    return std::pair{t.ok() && secs < 600.0,
                     t.summary() + ", " + std::to_string(static_cast<int>(secs)) + " s of 600"};
  });

  criterion(2, "embedded det B_{q,2} matches the Gauss-sum closed form at 192 bits", [] {
    Tally t;
    for (std::uint32_t q : kThreeModFourModuli) {
      const auto f = field_of(q);
      for (std::int64_t r = 1; r <= q - 2; ++r) add_subcheck(t, verify_thm1_i(f, r, options(Backend::numeric)), "thm1.i.gauss_closed_form");
    }
    return std::pair{t.ok(), t.summary()};
  });

  criterion(3, "B and T singular for all q <= 81, k with (q-1)/k even, all r", [] {
    Tally t;
    for (std::uint32_t q = 3; q <= 81; ++q) {
      if (!is_odd_prime_power(q)) continue;
      const auto f = field_of(q);
      for (std::uint64_t k : divisors(q - 1)) {
        if (k <= 1 || k >= q - 1 || ((q - 1) / k) % 2 != 0) continue;
        t.add(verify_thm1_ii(f, static_cast<std::uint32_t>(k), options(Backend::exact)));
        t.add(verify_thm3_i(f, static_cast<std::uint32_t>(k)));
      }
    }
    return std::pair{t.ok(), t.summary()};
  });

  criterion(4, "det B_{q,4} equals both the 2F1 and binomial-pair products, under 2 min", [] {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    for (std::uint32_t q : kFourthModuli) {
      const auto f = field_of(q);
      for (std::int64_t r = 1; r <= q - 2; ++r) {
        const auto rep = verify_thm2(f, r, options(Backend::exact));
        add_subcheck(t, rep, "thm2.hyp2f1_product");
        add_subcheck(t, rep, "thm2.binomial_pair_product");
      }
    }
    const double secs = seconds_since(start);
    return std::pair{t.ok() && secs < 120.0, t.summary() + ", " + std::to_string(static_cast<int>(secs)) + " s of 120"};
  });

  criterion(5, "det T_{p,2}(1), det T_{p,2}(2) closed forms and the nonsingularity scan", [] {
    Tally t;
    for (std::uint32_t q : {7u, 11u, 19u, 23u, 31u, 43u, 47u, 49u, 121u}) {
      const auto rep = verify_thm3_ii(field_of(q));
      t.add(rep);
      if (q < 49) {
        add_subcheck(t, rep, "thm3.ii.det_T1");
        add_subcheck(t, rep, "thm3.ii.det_T2");
      }
    }
    return std::pair{t.ok(), t.summary()};
  });

  criterion(6, "det T_{q,4}(r) equals 2^{-(q-1)/4} times the binomial product and lies in F_p", [] {
    Tally stated, membership, corrected;
    for (std::uint32_t q : kFourthModuli) {
      const auto f = field_of(q);
      for (std::int64_t r = 1; r <= q - 2; ++r) {
        const auto rep = verify_thm3_iii(f, r);
        stated.add(rep);
        add_subcheck(membership, rep, "thm3.iii.prime_subfield");
        corrected.add(verify_thm3_iii_corrected(f, r));
      }
    }
    std::printf("INFO  criterion  6: with the sign (-1)^{(q-1)/4} restored: %s\n", corrected.summary().c_str());
    std::printf("INFO  criterion  6: prime-subfield membership: %s\n", membership.summary().c_str());
    return std::pair{stated.ok() && membership.ok(), "as stated: " + stated.summary()};
  });

  criterion(7, "Jacobi sums reduce to -binom(a+b, a) mod p, all (a, b), including both degenerate clauses", [] {
    Tally t, b_zero, vanishing;
    for (std::uint32_t q : {7u, 9u, 11u, 13u, 25u, 27u, 49u}) {
      const auto f = field_of(q);
      for (std::int64_t a = 1; a <= q - 2; ++a) {
        for (std::int64_t b = 0; b <= q - 2; ++b) {
          const auto rep = verify_lemma31(f, a, b);
          t.add(rep);
          if (b == 0) add_subcheck(b_zero, rep, "lemma3.1.b_zero");
          if (a + b >= static_cast<std::int64_t>(q)) add_subcheck(vanishing, rep, "lemma3.1.vanishing");
        }
      }
    }
    return std::pair{t.ok() && b_zero.ok() && vanishing.ok(),
                     t.summary() + "; b = 0: " + std::to_string(b_zero.pass) + ", a + b >= q: " +
                         std::to_string(vanishing.pass)};
  });

  criterion(8, "Hasse-Davenport and Gauss-Jacobi relations for q <= 31, quadratic Gauss sums for q <= 199", [] {
    Tally hd, gj, quad;
    for (std::uint32_t q = 3; q <= 199; ++q) {
      if (!is_odd_prime_power(q)) continue;
      const auto f = field_of(q);
      quad.add(verify_quadratic_gauss(f, options(Backend::numeric)));
      if (q > 31) continue;
      for (std::uint64_t m : divisors(q - 1)) {
        if (m <= 1) continue;
        for (std::int64_t psi = 0; psi <= q - 2; ++psi)
          hd.add(verify_lemma21(f, static_cast<std::uint32_t>(m), psi, options(Backend::numeric)));
      }
      for (std::int64_t a = 1; a <= q - 2; ++a)
        for (std::int64_t b = 1; b <= q - 2; ++b) gj.add(verify_lemma22(f, a, b, options(Backend::both)));
    }
    return std::pair{hd.ok() && gj.ok() && quad.ok(),
                     "product formula: " + hd.summary() + "; relations: " + gj.summary() + "; quadratic: " + quad.summary()};
  });

  criterion(9, "Carlitz determinant for p <= 31 and all nontrivial psi; det C_5 = 5, det C_7 = 49", [] {
    Tally t;
    for (std::uint32_t p = 3; p <= 31; ++p) {
      if (!oracle::naive_is_prime(p)) continue;
      const auto f = FiniteField::make(p, 1);
      for (std::int64_t psi = 1; psi <= p - 2; ++psi) t.add(verify_carlitz(f, psi, kPrecision, kRelTol, false));
    }
    const bool c5 = det_exact(build_carlitz(FiniteField::make(5, 1), 2)) == CycNum::rational(4, 5);
    const bool c7 = det_exact(build_carlitz(FiniteField::make(7, 1), 3)) == CycNum::rational(6, 49);
    return std::pair{t.ok() && c5 && c7, t.summary() + std::string("; det C_5(phi) = 5: ") + (c5 ? "yes" : "no") +
                                             ", det C_7(phi) = 49: " + (c7 ? "yes" : "no")};
  });

  criterion(10, "eigenpairs of M (q = 3 mod 4, q <= 31) and N (q = 5, 13, 29), every r", [] {
    Tally t;
    for (std::uint32_t q = 3; q <= 31; ++q) {
      if (!is_odd_prime_power(q) || q % 4 != 3) continue;
      const auto f = field_of(q);
      for (std::int64_t r = 1; r <= q - 2; ++r) t.add(eigen_structure_check(f, r, EigenVariant::M));
    }
    for (std::uint32_t q : {5u, 13u, 29u}) {
      const auto f = field_of(q);
      for (std::int64_t r = 1; r <= q - 2; ++r) t.add(eigen_structure_check(f, r, EigenVariant::N));
    }
    return std::pair{t.ok(), t.summary()};
  });

  criterion(11, "det_exact vs cofactor oracle on 200 random matrices; class number vs Mordell sign, p < 500", [] {
    std::mt19937_64 rng(0xacce97);
    static const std::uint64_t conductors[] = {1, 3, 4, 5, 6, 7, 8, 9, 12, 15, 20, 24};
    std::size_t agree = 0;
    for (int it = 0; it < 200; ++it) {
      const std::size_t n = 1 + rng() % 5;
      const std::uint64_t m = conductors[rng() % std::size(conductors)];
      CycMatrix mat(n, m);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) mat.at(i, j) = oracle::random_cyc(rng, m, 7, 0.75);
      const std::vector<CycNum> entries(mat.entries().begin(), mat.entries().end());
      agree += det_exact(mat) == oracle::cofactor_det(entries, n, m);
    }
    Tally mordell;
    for (std::uint64_t p = 7; p < 500; p += 4)
      if (oracle::naive_is_prime(p)) mordell.add(verify_mordell(p));
    return std::pair{agree == 200 && mordell.ok(),
                     std::to_string(agree) + "/200 determinants agree; Mordell: " + mordell.summary()};
  });

  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
