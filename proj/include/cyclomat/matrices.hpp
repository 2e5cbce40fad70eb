#pragma once

// Cyclotomic matrices over Q(zeta_{q-1}) and their power-residue analogues
// over F_q, with exact, modular and numeric determinants.
//
// For a set {a_1, ..., a_d} of k-th power residues (ordered gamma^{k i}):
//   B_{q,k}(chi^r) = [chi^r(a_i + a_j) + chi^r(a_i - a_j)]
//   T_{q,k}(r)     = [(a_i + a_j)^{q-1-r} + (a_i - a_j)^{q-1-r}]  over F_q
//   M_q(chi^r)     = [chi^r(1 + s_j/s_i) + chi^r(1 - s_j/s_i)],  s over squares
//   N_q(chi^r)     = the same shape over fourth powers b_j
//   C_p            = [psi(j - i)],  1 <= i, j <= p - 1

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cyclomat/complex_approx.hpp"
#include "cyclomat/cyclotomic.hpp"
#include "cyclomat/finite_field.hpp"
#include "cyclomat/modular.hpp"
#include "cyclomat/report.hpp"

namespace cyclomat {

class CycMatrix {
 public:
  /// dim x dim zero matrix over Q(zeta_m).
  CycMatrix(std::size_t dim, std::uint64_t m);

  std::size_t dim() const { return dim_; }
  std::uint64_t conductor() const { return m_; }
  CycNum& at(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  const CycNum& at(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  std::span<const CycNum> entries() const { return entries_; }

  /// Every entry lifted to Q(zeta_{new_m}).
  CycMatrix lifted(std::uint64_t new_m) const;

 private:
  std::size_t dim_;
  std::uint64_t m_;
  std::vector<CycNum> entries_;
};

class FieldMatrix {
 public:
  FieldMatrix(FiniteField field, std::size_t dim);

  const FiniteField& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  FiniteField::Code& at(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  FiniteField::Code at(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  FieldElement element(std::size_t i, std::size_t j) const { return field_.decode(at(i, j)); }

 private:
  FiniteField field_;
  std::size_t dim_;
  std::vector<FiniteField::Code> entries_;
};

/// D_k ordered gamma^{k i}, i = 1..(q-1)/k. Unlike FiniteField::power_residues
/// this also admits k = q - 1 (D_k = {1}), which the q = 5 fourth-power case needs.
std::vector<FiniteField::Code> residue_set(const FiniteField& field, std::uint32_t k);

/// Requires k | q-1, 1 < k <= q-1 and 1 <= r <= q-2.
CycMatrix build_B(const FiniteField& field, std::uint32_t k, std::int64_t r);
FieldMatrix build_T(const FiniteField& field, std::uint32_t k, std::int64_t r);
CycMatrix build_M(const FiniteField& field, std::int64_t r);
/// Requires q = 5 (mod 8).
CycMatrix build_N(const FiniteField& field, std::int64_t r);
/// Requires n = 1 and a nontrivial psi = chi^psi_exponent.
CycMatrix build_carlitz(const FiniteField& field, std::int64_t psi_exponent);

/// Exact determinant over Q(zeta_m) by the multimodular route.
CycNum det_exact(const CycMatrix& mat, MultimodularStats* stats = nullptr);
/// Exact determinant by Gaussian elimination over Q(zeta_m), first nonzero
/// pivot in column order. Slower reference for det_exact.
CycNum det_elimination(const CycMatrix& mat);
FieldElement det_field(const FieldMatrix& mat);
/// Determinant of the embedded matrix, partial pivoting by magnitude.
ComplexApprox det_numeric(const CycMatrix& mat, int precision_bits = kDefaultPrecisionBits);

std::vector<CycNum> multiply(const CycMatrix& mat, const std::vector<CycNum>& v);

enum class EigenVariant { M, N };

/// Checks mat * v_k = lambda_k * v_k exactly for the explicit eigenpairs of
/// M_q(chi^r) (q = 3 mod 4) or N_q(chi^r) (q = 5 mod 8), the independence of
/// the eigenvectors, and prod lambda_k = det. Throws InvalidParameter when
/// the congruence condition fails.
VerificationReport eigen_structure_check(const FiniteField& field, std::int64_t r, EigenVariant variant);

/// det C_p = (-1)^t G_p(psi)^{p-1}/p numerically, plus the characteristic
/// polynomial (x^f - G^f)^{t-1}(x^f - G^f/p) at x in {0, +-1, +-2}. With
/// `exact`, the determinant identity is also checked in Q(zeta_{p(p-1)}).
VerificationReport verify_carlitz(const FiniteField& field, std::int64_t psi_exponent,
                                  int precision_bits = kDefaultPrecisionBits, double rel_tol = 1e-6,
                                  bool exact = false);

}  // namespace cyclomat
