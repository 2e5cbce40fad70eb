#include <doctest.h>

#include <random>

#include "cyclomat/arith.hpp"
#include "cyclomat/cyclotomic.hpp"
#include "cyclomat/errors.hpp"
#include "cyclomat/finite_field.hpp"
#include "oracles.hpp"

using namespace cyclomat;

namespace {

// Integer polynomial evaluation at zeta_m inside Q(zeta_m), by Horner.
CycNum eval_at_zeta(const IntPoly& poly, std::uint64_t m) {
  CycNum acc = CycNum::zero(m);
  const CycNum z = CycNum::zeta_power(m, 1);
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * z + CycNum::rational(m, mpq_class(*it));
  return acc;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == IntPoly{-1, 1});
  CHECK(cyclotomic_polynomial(4) == IntPoly{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == IntPoly{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == IntPoly{1, 0, -1, 0, 1});
  for (std::uint64_t m = 1; m <= 200; ++m) {
    CHECK(eval_at_zeta(cyclotomic_polynomial(m), m).is_zero());
    CHECK(cyclotomic_polynomial(m).size() == euler_phi(m) + 1);
  }
  // Phi_105 is the first with a coefficient of absolute value 2
  const IntPoly p105 = cyclotomic_polynomial(105);
  bool has_two = false;
  for (auto c : p105) has_two = has_two || c == -2;
  CHECK(has_two);
}

TEST_CASE("small identities") {
  const auto i = CycNum::zeta_power(4, 1);
  CHECK(i * i == CycNum::rational(4, -1));
  const auto w = CycNum::zeta_power(3, 1);
  CHECK((CycNum::one(3) + w) * (CycNum::one(3) + w * w) == CycNum::one(3));
  CHECK(CycNum::zeta_power(9, 1).inverse() == CycNum::zeta_power(9, 8));
  CHECK(CycNum::rational(5, 2).inverse() == CycNum::rational(5, mpq_class(1, 2)));
  const auto one_plus_i = CycNum::one(4) + i;
  CHECK(one_plus_i.inverse() == (CycNum::one(4) - i) * mpq_class(1, 2));
  CHECK(one_plus_i.inverse().to_string() == "(1 - z4)/2");
  CHECK((w + w * w) == CycNum::rational(3, -1));
  CHECK_THROWS_AS(CycNum::zero(5).inverse(), DivisionByZero);
  CHECK_THROWS_AS(CycNum::one(4) + CycNum::one(6), ConductorMismatch);
}

TEST_CASE("ring axioms on random elements, conductors up to 60") {
  std::mt19937_64 rng(20261015);
  for (std::uint64_t m = 1; m <= 60; ++m) {
    for (int it = 0; it < 6; ++it) {
      const auto a = oracle::random_cyc(rng, m), b = oracle::random_cyc(rng, m), c = oracle::random_cyc(rng, m);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a + (-a) == CycNum::zero(m));
      if (!a.is_zero()) CHECK(a * a.inverse() == CycNum::one(m));
      CHECK((a * b).conj() == a.conj() * b.conj());
    }
  }
}

TEST_CASE("lifting preserves the complex value") {
  std::mt19937_64 rng(7);
  for (std::uint64_t m : {3, 4, 5, 6, 12}) {
    const auto a = oracle::random_cyc(rng, m);
    const auto lifted = a.lift(m * 5);
    CHECK(std::abs(oracle::embed(a) - oracle::embed(lifted)) < 1e-12L);
    CHECK(lifted.lift(m * 10) == a.lift(m * 10));
  }
  CHECK_THROWS_AS(CycNum::one(4).lift(6), InvalidParameter);
}

TEST_CASE("embedding is a ring homomorphism within tolerance") {
  std::mt19937_64 rng(99);
  const int prec = 192;
  CHECK(approx_equal(embed_complex(CycNum::one(7), prec), ComplexApprox(1.0, 0.0, prec), 0, 1e-50));
  const auto i = embed_complex(CycNum::zeta_power(4, 1), prec);
  CHECK(approx_equal(i, ComplexApprox(0.0, 1.0, prec), 0, std::ldexp(1.0, -prec + 2)));
  const auto w = CycNum::zeta_power(3, 1);
  CHECK(approx_equal(embed_complex(w + w * w, prec), ComplexApprox(-1.0, 0.0, prec), 1e-30));
  for (std::uint64_t m : {5, 7, 12, 15, 24, 36, 60}) {
    for (int it = 0; it < 10; ++it) {
      const auto a = oracle::random_cyc(rng, m), b = oracle::random_cyc(rng, m);
      const auto lhs = embed_complex(a * b, prec);
      const auto rhs = embed_complex(a, prec) * embed_complex(b, prec);
      CHECK((lhs - rhs).abs().to_double() < std::ldexp(1.0, -prec / 2));
      // agrees with the long double oracle
      const auto ld = oracle::embed(a);
      const auto ea = embed_complex(a, prec);
      CHECK(std::abs(ea.re().to_double() - static_cast<double>(ld.real())) < 1e-9);
      CHECK(std::abs(ea.im().to_double() - static_cast<double>(ld.imag())) < 1e-9);
    }
  }
}

TEST_CASE("reduction at the Teichmuller prime is a ring homomorphism, q <= 49") {
  std::mt19937_64 rng(4242);
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {3, 1}, {5, 1}, {7, 1}, {11, 1}, {13, 1}, {3, 2}, {5, 2}, {3, 3}, {7, 2}, {17, 1}, {29, 1}, {37, 1}}) {
    const auto f = FiniteField::make(p, n);
    const std::uint64_t m = f.group_order();
    CHECK(reduce_mod_prime(CycNum::zeta_power(m, 1), f) == f.generator());
    CHECK(reduce_mod_prime(CycNum::rational(m, 12), f) == f.from_int(12));
    for (int it = 0; it < 40; ++it) {
      const auto a = oracle::random_cyc(rng, m, 9, 0.7, true), b = oracle::random_cyc(rng, m, 9, 0.7, true);
      CHECK(reduce_mod_prime(a * b, f) == f.mul(reduce_mod_prime(a, f), reduce_mod_prime(b, f)));
      CHECK(reduce_mod_prime(a + b, f) == f.add(reduce_mod_prime(a, f), reduce_mod_prime(b, f)));
    }
    // divisors of q - 1 reduce through gamma^{(q-1)/d}
    for (std::uint64_t d : divisors(m)) {
      CHECK(reduce_mod_prime(CycNum::zeta_power(d, 1), f) == f.decode(f.exp_code(m / d)));
    }
  }
  const auto f7 = FiniteField::make(7, 1);
  CHECK_THROWS_AS(reduce_mod_prime(CycNum::rational(6, mpq_class(1, 2)), f7), DomainError);
}
