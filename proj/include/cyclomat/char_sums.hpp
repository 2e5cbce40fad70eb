#pragma once

// Multiplicative characters of F_q and the sums built from them.
//
// chi denotes the generator of the character group fixed by chi(gamma) =
// zeta_{q-1}, gamma being the field's generator; chi^r is addressed by its
// exponent r, reduced mod q-1 (negative exponents are accepted). Every
// character, the trivial one included, vanishes at 0.
//
// Jacobi sums, Greene binomials and 2F1 values are exact elements of
// Q(zeta_{q-1}). Gauss sums need zeta_p as well and are numeric by default.

#include <cstdint>
#include <vector>

#include "cyclomat/complex_approx.hpp"
#include "cyclomat/cyclotomic.hpp"
#include "cyclomat/finite_field.hpp"

namespace cyclomat {

/// chi^r, with r normalized to [0, q-2].
class Character {
 public:
  Character(FiniteField field, std::int64_t r);

  const FiniteField& field() const { return field_; }
  std::uint32_t exponent() const { return r_; }
  bool is_trivial() const { return r_ == 0; }
  /// Smallest f >= 1 with chi^{rf} trivial.
  std::uint32_t order() const;

  /// Value as an exponent e of zeta_{q-1}, or -1 at x = 0.
  std::int64_t value_exponent(FiniteField::Code x) const;
  CycNum value(const FieldElement& x) const;

 private:
  FiniteField field_;
  std::uint32_t r_;
};

/// chi^r(x) in Q(zeta_{q-1}); 0 at x = 0.
CycNum char_value(const FiniteField& field, std::int64_t r, const FieldElement& x);

/// J_q(chi^a, chi^b) = sum_x chi^a(x) chi^b(1 - x), by direct summation.
CycNum jacobi_sum(const FiniteField& field, std::int64_t a, std::int64_t b);

/// G_q(chi^r) = sum_x chi^r(x) zeta_p^{Tr x}, numerically.
ComplexApprox gauss_sum(const FiniteField& field, std::int64_t r, int precision_bits = kDefaultPrecisionBits);

inline constexpr std::uint64_t kDefaultExactGaussDegreeBound = 2000;

/// G_q(chi^r) exactly in Q(zeta_{p(q-1)}); throws CapacityError when
/// phi(p(q-1)) exceeds degree_bound.
CycNum gauss_sum_exact(const FiniteField& field, std::int64_t r,
                       std::uint64_t degree_bound = kDefaultExactGaussDegreeBound);

/// Conductor of exact Gauss sums over `field`: lcm(p, q-1) = p(q-1).
std::uint64_t gauss_conductor(const FiniteField& field);

/// All G_q(chi^r), r in [0, q-2], at one precision; built in O(q^2) once.
class GaussSumTable {
 public:
  GaussSumTable(const FiniteField& field, int precision_bits = kDefaultPrecisionBits);
  const ComplexApprox& operator[](std::int64_t r) const;
  int precision() const { return precision_; }

 private:
  std::uint32_t order_;
  int precision_;
  std::vector<ComplexApprox> values_;
};

/// Greene's binomial (chi^a over chi^b) = chi^b(-1)/q * J_q(chi^a, chi^{-b}).
CycNum greene_binomial(const FiniteField& field, std::int64_t a, std::int64_t b);

/// 2F1(chi^a, chi^b; chi^c | lambda)_q
///   = q/(q-1) * sum_j (chi^{a+j} over chi^j) (chi^{b+j} over chi^{c+j}) chi^j(lambda).
CycNum hyp2f1(const FiniteField& field, std::int64_t a, std::int64_t b, std::int64_t c, const FieldElement& lambda);

/// (1/2) sum_x chi^e(x) chi^r(1 - x) chi^r(1 + x).
CycNum quadratic_pair_sum(const FiniteField& field, std::int64_t e, std::int64_t r);

/// 1 if x is a nonzero fourth power, else 0. Evaluated both as the character
/// average (1/4) sum_j chi^{j(q-1)/4}(x) and by membership in D_4; a
/// disagreement throws std::logic_error. Requires 4 | q-1.
int fourth_power_indicator(const FiniteField& field, const FieldElement& x);

}  // namespace cyclomat
