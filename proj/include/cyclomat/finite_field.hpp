#pragma once

// Explicit models of F_{p^n}: elements are coefficient vectors over F_p with
// respect to the power basis of a fixed irreducible modulus. Every field
// carries a fixed generator of F_q^x together with full exp/log tables, so
// desk-scale fields (q up to about 10^6) get O(1) multiplication and dlog.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace cyclomat {

/// Element of a FiniteField. coeffs[i] is the coordinate of t^i, always in
/// [0, p-1] and of length n, so equality is coordinate-wise.
struct FieldElement {
  std::vector<std::uint32_t> coeffs;

  bool is_zero() const;
  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

class FiniteField {
 public:
  /// Integer encoding of an element: sum of coeffs[i] * p^i, in [0, q).
  using Code = std::uint32_t;

  /// Deterministic model of F_{p^n}: the lexicographically smallest monic
  /// irreducible modulus (coefficients compared from the constant term up)
  /// and the generator with the smallest encoding.
  static FiniteField make(std::uint32_t p, std::uint32_t n);

  /// Model with a caller-chosen monic irreducible modulus given low degree
  /// first (length n + 1, last entry 1). The generator is still the smallest
  /// element of full order.
  static FiniteField with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t p() const;
  std::uint32_t n() const;
  std::uint32_t q() const;
  /// Order of the multiplicative group, q - 1.
  std::uint32_t group_order() const;
  const std::vector<std::uint32_t>& modulus() const;
  FieldElement generator() const;
  Code generator_code() const;

  FieldElement zero() const;
  FieldElement one() const;
  /// Image of an integer under Z -> F_p -> F_q.
  FieldElement from_int(std::int64_t value) const;

  Code encode(const FieldElement& x) const;
  FieldElement decode(Code code) const;

  FieldElement add(const FieldElement& x, const FieldElement& y) const;
  FieldElement sub(const FieldElement& x, const FieldElement& y) const;
  FieldElement neg(const FieldElement& x) const;
  FieldElement mul(const FieldElement& x, const FieldElement& y) const;
  FieldElement inv(const FieldElement& x) const;
  FieldElement pow(const FieldElement& x, std::uint64_t e) const;

  // Table-driven arithmetic on encodings; the matrix kernels work here.
  Code add_code(Code x, Code y) const;
  Code sub_code(Code x, Code y) const;
  Code neg_code(Code x) const;
  Code mul_code(Code x, Code y) const;
  Code inv_code(Code x) const;
  Code pow_code(Code x, std::uint64_t e) const;
  Code from_int_code(std::int64_t value) const;

  /// gamma^a for any a (reduced mod q - 1).
  Code exp_code(std::uint64_t a) const;
  /// a in [0, q-2] with gamma^a = x; throws DomainError for x = 0.
  std::uint32_t dlog(const FieldElement& x) const;
  std::uint32_t dlog_code(Code x) const;

  /// Tr_{F_q/F_p}(x) as a residue in [0, p-1].
  std::uint32_t trace(const FieldElement& x) const;
  std::uint32_t trace_code(Code x) const;

  /// The (q-1)/k nonzero k-th powers, ordered gamma^{k*i} for i = 1..(q-1)/k.
  /// Requires k | q-1 and k < q-1.
  std::vector<FieldElement> power_residues(std::uint32_t k) const;
  std::vector<Code> power_residue_codes(std::uint32_t k) const;

  /// True when the element lies in the prime subfield F_p.
  bool in_prime_field(const FieldElement& x) const;

  friend bool operator==(const FiniteField& a, const FiniteField& b) { return a.data_ == b.data_; }

 private:
  struct Data;
  explicit FiniteField(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  static FiniteField build(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::shared_ptr<const Data> data_;
};

/// Monic irreducibility over F_p of a polynomial given low degree first, by
/// the x^{p^d} gcd test.
bool is_irreducible_mod_p(std::span<const std::uint32_t> poly, std::uint32_t p);

}  // namespace cyclomat
