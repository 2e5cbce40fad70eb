#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_m) = Q[x]/Phi_m(x).
//
// Values are stored as an integer numerator vector over the power basis
// 1, zeta, ..., zeta^{phi(m)-1} and one positive common denominator, kept in
// lowest terms so that equality is structural. Operands must share a
// conductor; use CycNum::lift to move a value to a multiple conductor.

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cyclomat/complex_approx.hpp"
#include "cyclomat/finite_field.hpp"

namespace cyclomat {

/// Integer polynomial, low degree first.
using IntPoly = std::vector<std::int64_t>;

/// Phi_m(x), by exact division of x^m - 1 by Phi_d for the proper divisors d.
IntPoly cyclotomic_polynomial(std::uint64_t m);

/// Shared, immutable description of Q(zeta_m). Obtain through get(); the
/// registry hands out one instance per conductor.
class CyclotomicField {
 public:
  static std::shared_ptr<const CyclotomicField> get(std::uint64_t m);

  std::uint64_t conductor() const { return m_; }
  std::size_t degree() const { return degree_; }
  const IntPoly& modulus() const { return phi_; }

  /// Power-basis coordinates of zeta^e (e reduced mod m).
  std::vector<mpz_class> monomial(std::int64_t e) const;
  /// max over e of the sup-norm of zeta^e in the power basis.
  std::int64_t monomial_sup_norm() const;

  /// Reduces an integer polynomial of any degree modulo Phi_m in place and
  /// truncates it to degree() coordinates.
  void reduce(std::vector<mpz_class>& poly) const;

  explicit CyclotomicField(std::uint64_t m);

 private:
  std::uint64_t m_;
  std::size_t degree_;
  IntPoly phi_;
  // zeta^e for e < m; filled eagerly when m * degree is small.
  std::vector<std::vector<std::int64_t>> monomials_;
  mutable std::once_flag sup_once_;
  mutable std::int64_t sup_norm_ = 0;
};

class CycNum {
 public:
  /// Zero of Q(zeta_1) = Q.
  CycNum();

  static CycNum zero(std::uint64_t m);
  static CycNum one(std::uint64_t m);
  static CycNum rational(std::uint64_t m, const mpq_class& value);
  /// zeta_m^e; negative exponents are reduced mod m.
  static CycNum zeta_power(std::uint64_t m, std::int64_t e);
  static CycNum from_coeffs(std::uint64_t m, const std::vector<mpq_class>& coeffs);
  static CycNum from_integers(std::uint64_t m, std::vector<mpz_class> numerators, mpz_class denominator = 1);
  /// sum_e counts[e] * zeta_m^e for e in [0, counts.size()); counts.size() <= m.
  static CycNum from_exponent_counts(std::uint64_t m, std::span<const std::int64_t> counts);

  std::uint64_t conductor() const { return field_->conductor(); }
  std::size_t degree() const { return num_.size(); }
  const std::shared_ptr<const CyclotomicField>& field() const { return field_; }

  mpq_class coeff(std::size_t i) const;
  std::vector<mpq_class> coeffs() const;
  const std::vector<mpz_class>& numerators() const { return num_; }
  const mpz_class& denominator() const { return den_; }

  bool is_zero() const;
  bool is_rational() const;
  /// All coordinates are integers.
  bool is_integral() const { return den_ == 1; }

  /// The same number viewed in Q(zeta_{new_m}), zeta_m -> zeta_{new_m}^{new_m/m}.
  CycNum lift(std::uint64_t new_m) const;
  CycNum inverse() const;
  CycNum pow(std::uint64_t e) const;
  /// Complex conjugate, zeta -> zeta^{-1}.
  CycNum conj() const;

  CycNum& operator+=(const CycNum& b);
  CycNum& operator-=(const CycNum& b);
  CycNum& operator*=(const CycNum& b);
  CycNum& operator*=(const mpq_class& s);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator*(CycNum a, const mpq_class& s) { return a *= s; }
  friend CycNum operator*(const mpq_class& s, CycNum a) { return a *= s; }
  friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }
  friend CycNum operator-(CycNum a);
  friend bool operator==(const CycNum& a, const CycNum& b);

  /// Human-readable form such as "3 - z6" or "(1 - z4)/2".
  std::string to_string() const;

 private:
  CycNum(std::shared_ptr<const CyclotomicField> field, std::vector<mpz_class> num, mpz_class den);
  void normalize();
  void require_same_conductor(const CycNum& b) const;

  std::shared_ptr<const CyclotomicField> field_;
  std::vector<mpz_class> num_;
  mpz_class den_;
};

/// Helper shared by cyc_add / cyc_mul / cyc_neg / cyc_inv style call sites.
inline CycNum cyc_add(const CycNum& a, const CycNum& b) { return a + b; }
inline CycNum cyc_mul(const CycNum& a, const CycNum& b) { return a * b; }
inline CycNum cyc_neg(const CycNum& a) { return -a; }
inline CycNum cyc_inv(const CycNum& a) { return a.inverse(); }

/// Table of zeta_m^e, e in [0, m), at a fixed precision; reused across many
/// embeddings of values with the same conductor.
class RootTable {
 public:
  RootTable(std::uint64_t m, int precision_bits);
  const ComplexApprox& operator[](std::uint64_t e) const { return roots_[e % roots_.size()]; }
  std::uint64_t conductor() const { return roots_.size(); }
  int precision() const { return precision_; }

 private:
  std::vector<ComplexApprox> roots_;
  int precision_;
};

/// Evaluates the representing polynomial at zeta_m = e^{2 pi i/m}.
ComplexApprox embed_complex(const CycNum& a, int precision_bits);
ComplexApprox embed_complex(const CycNum& a, const RootTable& roots);

/// Ring map Z[zeta_m] -> F_q sending zeta_m to gamma^{(q-1)/m}, gamma the
/// field's generator. Requires integral coordinates and m | q - 1.
FieldElement reduce_mod_prime(const CycNum& a, const FiniteField& field);

}  // namespace cyclomat
