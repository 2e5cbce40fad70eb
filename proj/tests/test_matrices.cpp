#include <doctest.h>

#include <random>

#include "cyclomat/arith.hpp"
#include "cyclomat/char_sums.hpp"
#include "cyclomat/errors.hpp"
#include "cyclomat/matrices.hpp"
#include "oracles.hpp"

using namespace cyclomat;

namespace {

CycMatrix random_matrix(std::mt19937_64& rng, std::size_t n, std::uint64_t m, double density) {
  CycMatrix mat(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mat.at(i, j) = oracle::random_cyc(rng, m, 6, density);
  return mat;
}

std::vector<CycNum> to_vec(const CycMatrix& mat) { return {mat.entries().begin(), mat.entries().end()}; }

// Image of x under the isomorphism F_1 -> F_2 sending the class of t to `root`.
FieldElement map_element(const FiniteField& to, const FieldElement& x, const FieldElement& root) {
  FieldElement acc = to.zero();
  FieldElement power = to.one();
  for (std::uint32_t c : x.coeffs) {
    acc = to.add(acc, to.mul(to.from_int(c), power));
    power = to.mul(power, root);
  }
  return acc;
}

}  // namespace

TEST_CASE("determinant examples") {
  CycMatrix id(4, 12);
  for (std::size_t i = 0; i < 4; ++i) id.at(i, i) = CycNum::one(12);
  CHECK(det_exact(id) == CycNum::one(12));

  CycMatrix diag(2, 7);
  diag.at(0, 0) = CycNum::zeta_power(7, 1);
  diag.at(1, 1) = CycNum::zeta_power(7, 6);
  CHECK(det_exact(diag) == CycNum::one(7));

  std::mt19937_64 rng(11);
  CycMatrix dup = random_matrix(rng, 4, 9, 0.8);
  for (std::size_t i = 0; i < 4; ++i) dup.at(i, 3) = dup.at(i, 1);
  CHECK(det_exact(dup).is_zero());
  CHECK(det_elimination(dup).is_zero());

  CycMatrix zero_row = random_matrix(rng, 3, 5, 1.0);
  for (std::size_t j = 0; j < 3; ++j) zero_row.at(1, j) = CycNum::zero(5);
  CHECK(det_exact(zero_row).is_zero());
  CHECK(det_exact(CycMatrix(0, 5)) == CycNum::one(5));
}

TEST_CASE("det_exact, elimination and cofactor expansion agree") {
  std::mt19937_64 rng(0xdec0de);
  for (int it = 0; it < 120; ++it) {
    const std::size_t n = 1 + rng() % 5;
    static const std::uint64_t conductors[] = {1, 3, 4, 5, 6, 8, 10, 12, 15, 24, 30, 60};
    const std::uint64_t m = conductors[rng() % std::size(conductors)];
    const double density = (rng() % 3 == 0) ? 0.3 : 0.9;
    const CycMatrix mat = random_matrix(rng, n, m, density);
    const CycNum oracle_det = oracle::cofactor_det(to_vec(mat), n, m);
    CHECK(det_exact(mat) == oracle_det);
    CHECK(det_elimination(mat) == oracle_det);
  }
}

TEST_CASE("field determinant") {
  std::mt19937_64 rng(5);
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{7, 1}, {3, 2}, {5, 2}, {13, 1}}) {
    const auto f = FiniteField::make(p, n);
    std::uniform_int_distribution<FiniteField::Code> pick(0, f.q() - 1);
    for (int it = 0; it < 50; ++it) {
      FieldMatrix m2(f, 2);
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) m2.at(i, j) = pick(rng);
      const auto ad = f.mul_code(m2.at(0, 0), m2.at(1, 1));
      const auto bc = f.mul_code(m2.at(0, 1), m2.at(1, 0));
      CHECK(det_field(m2) == f.decode(f.sub_code(ad, bc)));
    }
    FieldMatrix id(f, 3);
    for (std::size_t i = 0; i < 3; ++i) id.at(i, i) = f.from_int_code(1);
    CHECK(det_field(id) == f.one());
    FieldMatrix dup(f, 3);
    for (std::size_t i = 0; i < 3; ++i) dup.at(i, 0) = dup.at(i, 2) = pick(rng);
    CHECK(det_field(dup) == f.zero());
  }
}

TEST_CASE("B, T, M, N shapes and entries") {
  const auto f7 = FiniteField::make(7, 1);
  for (std::int64_t r = 1; r <= 5; ++r) {
    const CycMatrix b = build_B(f7, 2, r);
    CHECK(b.dim() == 3);
    const auto s = residue_set(f7, 2);
    for (std::size_t i = 0; i < 3; ++i) CHECK(b.at(i, i) == char_value(f7, r, f7.decode(f7.add_code(s[i], s[i]))));
  }
  const auto t = build_T(f7, 2, 1);
  CHECK(t.dim() == 3);
  const auto s = residue_set(f7, 2);
  for (std::size_t i = 0; i < 3; ++i) CHECK(t.at(i, i) == f7.pow_code(f7.add_code(s[i], s[i]), 5));

  // -1 in D_2 for q = 9 duplicates columns
  const auto f9 = FiniteField::make(3, 2);
  const CycMatrix b9 = build_B(f9, 2, 1);
  const auto s9 = residue_set(f9, 2);
  const auto minus_one = f9.from_int_code(-1);
  for (std::size_t j = 0; j < s9.size(); ++j) {
    const auto neg = f9.mul_code(minus_one, s9[j]);
    const auto jp = std::find(s9.begin(), s9.end(), neg) - s9.begin();
    for (std::size_t i = 0; i < s9.size(); ++i) CHECK(b9.at(i, j) == b9.at(i, static_cast<std::size_t>(jp)));
  }

  const auto f13 = FiniteField::make(13, 1);
  const CycMatrix b13 = build_B(f13, 4, 1);
  CHECK(b13.dim() == 3);
  CHECK(b13.conductor() == 12);
  CHECK(build_N(f13, 1).dim() == 3);
  CHECK(build_B(FiniteField::make(5, 1), 4, 1).dim() == 1);

  CHECK_THROWS_AS(build_B(f7, 4, 1), InvalidParameter);
  CHECK_THROWS_AS(build_B(f7, 2, 0), InvalidParameter);
  CHECK_THROWS_AS(build_B(f7, 2, 6), InvalidParameter);
  CHECK_THROWS_AS(build_N(f7, 1), InvalidParameter);
  CHECK_THROWS_AS(build_carlitz(f9, 1), InvalidParameter);
  CHECK_THROWS_AS(build_carlitz(f7, 0), InvalidParameter);
}

TEST_CASE("B and M determinants differ by (-1)^{(q+1)r/2}, q <= 31") {
  for (std::uint32_t q : {7u, 11u, 19u, 23u, 27u, 31u}) {
    const auto pp = as_prime_power(q);
    const auto f = FiniteField::make(static_cast<std::uint32_t>(pp.p), pp.n);
    for (std::int64_t r = 1; r <= q - 2; ++r) {
      const CycNum db = det_exact(build_B(f, 2, r));
      const CycNum dm = det_exact(build_M(f, r));
      CHECK(db == (((q + 1) * r / 2) % 2 == 0 ? dm : -dm));
    }
  }
  // q = 13: the D_4 product is 1, so det B_{13,4} = det N
  const auto f13 = FiniteField::make(13, 1);
  for (std::int64_t r = 1; r <= 11; ++r) CHECK(det_exact(build_B(f13, 4, r)) == det_exact(build_N(f13, r)));
}

TEST_CASE("exact determinants agree with a long double determinant, q <= 67") {
  for (std::uint32_t q : {7u, 11u, 19u, 23u, 27u, 31u, 43u, 47u, 59u, 67u}) {
    const auto pp = as_prime_power(q);
    const auto f = FiniteField::make(static_cast<std::uint32_t>(pp.p), pp.n);
    for (std::int64_t r : {std::int64_t{1}, std::int64_t{2}, std::int64_t(q - 1) / 2, std::int64_t(q) - 2}) {
      const CycMatrix b = build_B(f, 2, r);
      std::vector<oracle::cx> embedded;
      for (const auto& e : b.entries()) embedded.push_back(oracle::embed(e));
      const oracle::cx ref = oracle::complex_det(embedded, b.dim());
      const auto exact = embed_complex(det_exact(b), 192).to_std();
      const double rel = std::abs(std::complex<double>(static_cast<double>(ref.real()), static_cast<double>(ref.imag())) -
                                  exact) /
                         std::abs(exact);
      CHECK(rel < 1e-6);
      // the MPFR determinant too
      CHECK(approx_equal(det_numeric(b, 192), embed_complex(det_exact(b), 192), 1e-30));
    }
  }
}

TEST_CASE("determinants do not depend on the model of F_q once generators match") {
  // q = 9 with t^2 + t + 2 and q = 27 with t^3 + 2t + 2 as alternative moduli
  for (auto [p, alt] : std::vector<std::pair<std::uint32_t, std::vector<std::uint32_t>>>{{3, {2, 1, 1}},
                                                                                         {3, {2, 2, 0, 1}}}) {
    REQUIRE(is_irreducible_mod_p(alt, p));
    const std::uint32_t n = static_cast<std::uint32_t>(alt.size() - 1);
    const auto f1 = FiniteField::make(p, n);
    const auto f2 = FiniteField::with_modulus(p, alt);
    REQUIRE(f1.modulus() != f2.modulus());
    // a root of f1's modulus inside f2 fixes an isomorphism
    FieldElement root;
    for (FiniteField::Code c = 0; c < f2.q(); ++c) {
      const auto x = f2.decode(c);
      FieldElement value = f2.zero(), power = f2.one();
      for (std::uint32_t coef : f1.modulus()) {
        value = f2.add(value, f2.mul(f2.from_int(coef), power));
        power = f2.mul(power, x);
      }
      if (value.is_zero()) {
        root = x;
        break;
      }
    }
    REQUIRE(!root.coeffs.empty());
    const std::uint64_t order = f1.group_order();
    const std::uint64_t u = f2.dlog(map_element(f2, f1.generator(), root));
    REQUIRE(std::gcd(u, order) == 1);
    std::uint64_t u_inv = 1;
    while (u * u_inv % order != 1) ++u_inv;
    for (std::uint32_t k : {2u, 13u}) {
      if (order % k != 0) continue;
      for (std::int64_t r = 1; r <= static_cast<std::int64_t>(order) - 1; ++r) {
        const auto r2 = static_cast<std::int64_t>(r * u_inv % order);
        const CycNum d1 = det_exact(build_B(f1, k, r));
        const CycNum d2 = det_exact(build_B(f2, k, r2));
        CHECK(d1 == d2);
        CHECK(jacobi_sum(f1, r, 1) == jacobi_sum(f2, r2, static_cast<std::int64_t>(u_inv)));
      }
    }
  }
}

TEST_CASE("Carlitz determinants for p = 5 and 7") {
  const auto f5 = FiniteField::make(5, 1);
  const auto f7 = FiniteField::make(7, 1);
  const CycMatrix c5 = build_carlitz(f5, 2);
  CHECK(c5.dim() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(c5.at(i, i).is_zero());
  CHECK(det_exact(c5) == CycNum::rational(4, 5));
  CHECK(det_exact(build_carlitz(f7, 3)) == CycNum::rational(6, 49));
  CHECK(oracle::cofactor_det(to_vec(c5), 4, 4) == CycNum::rational(4, 5));
}

TEST_CASE("eigenstructure examples") {
  const auto f7 = FiniteField::make(7, 1);
  const auto rep = eigen_structure_check(f7, 1, EigenVariant::M);
  CHECK(rep.status == Status::pass);
  std::size_t pairs = 0;
  for (const auto& c : rep.checks) pairs += c.claim_id == "eigen.M.pair";
  CHECK(pairs == 3);

  const auto f13 = FiniteField::make(13, 1);
  const auto repn = eigen_structure_check(f13, 2, EigenVariant::N);
  CHECK(repn.status == Status::pass);
  CHECK_THROWS_AS(eigen_structure_check(f13, 1, EigenVariant::M), InvalidParameter);
}

TEST_CASE("matrix-vector products") {
  std::mt19937_64 rng(3);
  const CycMatrix a = random_matrix(rng, 3, 8, 0.8);
  std::vector<CycNum> e1(3, CycNum::zero(8));
  e1[1] = CycNum::one(8);
  const auto col = multiply(a, e1);
  for (std::size_t i = 0; i < 3; ++i) CHECK(col[i] == a.at(i, 1));
}
