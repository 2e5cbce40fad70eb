#include "cyclomat/matrices.hpp"

#include <cmath>
#include <string>

#include "cyclomat/arith.hpp"
#include "cyclomat/char_sums.hpp"
#include "cyclomat/errors.hpp"

namespace cyclomat {

namespace {

// chi^r(x) + chi^r(y) as a single CycNum; codes of 0 contribute nothing.
CycNum character_pair(const FiniteField& field, std::uint64_t r, FiniteField::Code x, FiniteField::Code y) {
  const std::uint64_t m = field.group_order();
  std::vector<std::int64_t> counts(m, 0);
  if (x != 0) ++counts[r * field.dlog_code(x) % m];
  if (y != 0) ++counts[r * field.dlog_code(y) % m];
  return CycNum::from_exponent_counts(m, counts);
}

void check_k(const FiniteField& field, std::uint32_t k) {
  const std::uint32_t order = field.group_order();
  if (k <= 1 || order % k != 0) {
    throw InvalidParameter("k = " + std::to_string(k) + " must be a divisor of q - 1 = " + std::to_string(order) +
                           " greater than 1");
  }
}

std::uint64_t check_r(const FiniteField& field, std::int64_t r) {
  if (r < 1 || r > static_cast<std::int64_t>(field.q()) - 2) {
    throw InvalidParameter("r = " + std::to_string(r) + " must lie in [1, q - 2]");
  }
  return static_cast<std::uint64_t>(r);
}

// [chi^r(1 + a_j/a_i) + chi^r(1 - a_j/a_i)] over the given residues.
CycMatrix normalized_matrix(const FiniteField& field, const std::vector<FiniteField::Code>& a, std::uint64_t r) {
  const std::size_t d = a.size();
  CycMatrix out(d, field.group_order());
  const FiniteField::Code one = field.from_int_code(1);
  for (std::size_t i = 0; i < d; ++i) {
    const FiniteField::Code inv_ai = field.inv_code(a[i]);
    for (std::size_t j = 0; j < d; ++j) {
      const FiniteField::Code ratio = field.mul_code(a[j], inv_ai);
      out.at(i, j) = character_pair(field, r, field.add_code(one, ratio), field.sub_code(one, ratio));
    }
  }
  return out;
}

}  // namespace

CycMatrix::CycMatrix(std::size_t dim, std::uint64_t m) : dim_(dim), m_(m), entries_(dim * dim, CycNum::zero(m)) {}

CycMatrix CycMatrix::lifted(std::uint64_t new_m) const {
  CycMatrix out(dim_, new_m);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i].lift(new_m);
  return out;
}

FieldMatrix::FieldMatrix(FiniteField field, std::size_t dim)
    : field_(std::move(field)), dim_(dim), entries_(dim * dim, 0) {}

std::vector<FiniteField::Code> residue_set(const FiniteField& field, std::uint32_t k) {
  if (k == field.group_order()) return {field.from_int_code(1)};
  return field.power_residue_codes(k);
}

CycMatrix build_B(const FiniteField& field, std::uint32_t k, std::int64_t r) {
  check_k(field, k);
  const std::uint64_t er = check_r(field, r);
  const auto a = residue_set(field, k);
  CycMatrix out(a.size(), field.group_order());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      out.at(i, j) = character_pair(field, er, field.add_code(a[i], a[j]), field.sub_code(a[i], a[j]));
    }
  }
  return out;
}

FieldMatrix build_T(const FiniteField& field, std::uint32_t k, std::int64_t r) {
  check_k(field, k);
  const std::uint64_t er = check_r(field, r);
  const std::uint64_t e = field.q() - 1 - er;  // >= 1, so 0^e = 0
  const auto a = residue_set(field, k);
  FieldMatrix out(field, a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      out.at(i, j) = field.add_code(field.pow_code(field.add_code(a[i], a[j]), e),
                                    field.pow_code(field.sub_code(a[i], a[j]), e));
    }
  }
  return out;
}

CycMatrix build_M(const FiniteField& field, std::int64_t r) {
  const std::uint64_t er = check_r(field, r);
  return normalized_matrix(field, residue_set(field, 2), er);
}

CycMatrix build_N(const FiniteField& field, std::int64_t r) {
  if (field.q() % 8 != 5) throw InvalidParameter("N_q needs q = 5 (mod 8), got q = " + std::to_string(field.q()));
  const std::uint64_t er = check_r(field, r);
  return normalized_matrix(field, residue_set(field, 4), er);
}

CycMatrix build_carlitz(const FiniteField& field, std::int64_t psi_exponent) {
  if (field.n() != 1) throw InvalidParameter("the Carlitz matrix is defined over a prime field");
  const Character psi(field, psi_exponent);
  if (psi.is_trivial()) throw InvalidParameter("psi must be nontrivial");
  const std::uint32_t p = field.p();
  const std::uint64_t m = field.group_order();
  CycMatrix out(p - 1, m);
  for (std::uint32_t i = 1; i < p; ++i) {
    for (std::uint32_t j = 1; j < p; ++j) {
      const std::int64_t e = psi.value_exponent(field.from_int_code(static_cast<std::int64_t>(j) - i));
      out.at(i - 1, j - 1) = e < 0 ? CycNum::zero(m) : CycNum::zeta_power(m, e);
    }
  }
  return out;
}

CycNum det_exact(const CycMatrix& mat, MultimodularStats* stats) {
  return det_multimodular(mat.entries(), mat.dim(), mat.conductor(), simd::active_kernels(), stats);
}

CycNum det_elimination(const CycMatrix& mat) {
  const std::size_t n = mat.dim();
  std::vector<CycNum> a(mat.entries().begin(), mat.entries().end());
  CycNum det = CycNum::one(mat.conductor());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot * n + c].is_zero()) ++pivot;
    if (pivot == n) return CycNum::zero(mat.conductor());
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[c * n + j], a[pivot * n + j]);
      det = -det;
    }
    det *= a[c * n + c];
    const CycNum inv = a[c * n + c].inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r * n + c].is_zero()) continue;
      const CycNum f = a[r * n + c] * inv;
      for (std::size_t j = c + 1; j < n; ++j) a[r * n + j] -= f * a[c * n + j];
    }
  }
  return det;
}

FieldElement det_field(const FieldMatrix& mat) {
  const FiniteField& field = mat.field();
  const std::size_t n = mat.dim();
  std::vector<FiniteField::Code> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = mat.at(i, j);
  FiniteField::Code det = field.from_int_code(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot * n + c] == 0) ++pivot;
    if (pivot == n) return field.zero();
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[c * n + j], a[pivot * n + j]);
      det = field.neg_code(det);
    }
    det = field.mul_code(det, a[c * n + c]);
    const FiniteField::Code inv = field.inv_code(a[c * n + c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r * n + c] == 0) continue;
      const FiniteField::Code f = field.mul_code(a[r * n + c], inv);
      for (std::size_t j = c + 1; j < n; ++j) {
        a[r * n + j] = field.sub_code(a[r * n + j], field.mul_code(f, a[c * n + j]));
      }
    }
  }
  return field.decode(det);
}

namespace {

ComplexApprox det_complex(std::vector<ComplexApprox> a, std::size_t n, int precision_bits) {
  ComplexApprox det(1.0, 0.0, precision_bits);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    Real best = a[c * n + c].abs();
    for (std::size_t r = c + 1; r < n; ++r) {
      Real v = a[r * n + c].abs();
      if (best < v) {
        best = v;
        pivot = r;
      }
    }
    if (best.is_zero()) return ComplexApprox(precision_bits);
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[c * n + j], a[pivot * n + j]);
      det = -det;
    }
    det *= a[c * n + c];
    const ComplexApprox inv = a[c * n + c].inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      const ComplexApprox f = a[r * n + c] * inv;
      for (std::size_t j = c + 1; j < n; ++j) a[r * n + j] = a[r * n + j] - f * a[c * n + j];
    }
  }
  return det;
}

std::vector<ComplexApprox> embed_entries(const CycMatrix& mat, int precision_bits) {
  const RootTable roots(mat.conductor(), precision_bits);
  std::vector<ComplexApprox> out;
  out.reserve(mat.entries().size());
  for (const CycNum& e : mat.entries()) out.push_back(embed_complex(e, roots));
  return out;
}

}  // namespace

ComplexApprox det_numeric(const CycMatrix& mat, int precision_bits) {
  return det_complex(embed_entries(mat, precision_bits), mat.dim(), precision_bits);
}

std::vector<CycNum> multiply(const CycMatrix& mat, const std::vector<CycNum>& v) {
  if (v.size() != mat.dim()) throw InvalidParameter("vector length does not match matrix dimension");
  std::vector<CycNum> out(mat.dim(), CycNum::zero(mat.conductor()));
  for (std::size_t i = 0; i < mat.dim(); ++i) {
    for (std::size_t j = 0; j < mat.dim(); ++j) out[i] += mat.at(i, j) * v[j];
  }
  return out;
}

VerificationReport eigen_structure_check(const FiniteField& field, std::int64_t r, EigenVariant variant) {
  const std::uint32_t q = field.q();
  const std::uint64_t m = field.group_order();
  VerificationReport report;
  report.claim_id = variant == EigenVariant::M ? "eigen.M" : "eigen.N";
  report.parameters = {{"p", field.p()}, {"n", field.n()}, {"q", q}, {"r", r}};
  if (variant == EigenVariant::M && q % 4 != 3) throw InvalidParameter("variant M needs q = 3 (mod 4)");
  if (variant == EigenVariant::N && q % 8 != 5) throw InvalidParameter("variant N needs q = 5 (mod 8)");

  const std::uint32_t k_res = variant == EigenVariant::M ? 2 : 4;
  const auto s = residue_set(field, k_res);
  const std::size_t d = s.size();
  const CycMatrix mat = variant == EigenVariant::M ? build_M(field, r) : build_N(field, r);

  auto eigenvalue = [&](std::uint64_t k) {
    if (variant == EigenVariant::M) {
      return k % 2 == 0 ? jacobi_sum(field, r, static_cast<std::int64_t>(k))
                        : jacobi_sum(field, r, static_cast<std::int64_t>(k + m / 2));
    }
    const mpq_class half(1, 2);
    if (k % 2 == 1) {
      return (jacobi_sum(field, r, static_cast<std::int64_t>(m / 4 + k)) +
              jacobi_sum(field, r, static_cast<std::int64_t>(3 * m / 4 + k))) *
             half;
    }
    return (jacobi_sum(field, r, static_cast<std::int64_t>(k)) +
            jacobi_sum(field, r, static_cast<std::int64_t>(k + m / 2))) *
           half;
  };

  CycNum product = CycNum::one(m);
  CycMatrix vandermonde(d, m);
  for (std::uint64_t k = 1; k <= d; ++k) {
    std::vector<CycNum> v(d);
    for (std::size_t i = 0; i < d; ++i) {
      v[i] = CycNum::zeta_power(m, static_cast<std::int64_t>(k * field.dlog_code(s[i]) % m));
      vandermonde.at(k - 1, i) = v[i];
    }
    const CycNum lambda = eigenvalue(k);
    product *= lambda;
    const auto mv = multiply(mat, v);
    VerificationReport check;
    check.claim_id = report.claim_id + ".pair";
    check.parameters = {{"k", k}};
    check.lhs = render(mv[0]);
    check.rhs = render(lambda * v[0]);
    for (std::size_t i = 0; i < d; ++i) {
      if (!(mv[i] == lambda * v[i])) {
        check.fail("matrix * v_k differs from eigenvalue * v_k at row " + std::to_string(i));
        break;
      }
    }
    if (variant == EigenVariant::N) {
      // The eigenvalue in 2F1 form: (-1)^r (q/2) 2F1(chi^{-r}, chi^{e}; chi^{r+e} | -1).
      const std::int64_t e = static_cast<std::int64_t>(k % 2 == 1 ? 2 * k + m / 2 : 2 * k);
      CycNum via_hyp = hyp2f1(field, -r, e, r + e, field.from_int(-1)) * mpq_class(q, 2);
      if (r % 2 != 0) via_hyp = -via_hyp;
      if (!(via_hyp == lambda)) check.fail("eigenvalue differs from its 2F1 form");
    }
    report.add_check(std::move(check));
  }

  VerificationReport independence;
  independence.claim_id = report.claim_id + ".independence";
  const CycNum vdet = det_exact(vandermonde);
  independence.lhs = render(vdet);
  if (vdet.is_zero()) independence.fail("eigenvectors are linearly dependent");
  report.add_check(std::move(independence));

  VerificationReport det_check;
  det_check.claim_id = report.claim_id + ".product";
  const CycNum det = det_exact(mat);
  det_check.lhs = render(det);
  det_check.rhs = render(product);
  if (!(det == product)) det_check.fail("product of eigenvalues differs from the determinant");
  report.add_check(std::move(det_check));

  report.lhs = render(det);
  report.rhs = render(product);
  return report;
}

VerificationReport verify_carlitz(const FiniteField& field, std::int64_t psi_exponent, int precision_bits,
                                  double rel_tol, bool exact) {
  VerificationReport report;
  report.claim_id = "eq1.2";
  report.backend = exact ? Backend::both : Backend::numeric;
  const CycMatrix c = build_carlitz(field, psi_exponent);
  const Character psi(field, psi_exponent);
  const std::uint32_t p = field.p();
  const std::uint32_t f = psi.order();
  const std::uint32_t t = (p - 1) / f;
  report.parameters = {{"p", p}, {"n", 1}, {"q", p}, {"psi", psi.exponent()}, {"f", f}, {"t", t}};

  const ComplexApprox g = gauss_sum(field, psi.exponent(), precision_bits);
  const Real inv_p = Real(mpq_class(1, p), precision_bits);
  ComplexApprox rhs = g.pow(p - 1) * inv_p;
  if (t % 2 == 1) rhs = -rhs;
  const auto embedded = embed_entries(c, precision_bits);
  const ComplexApprox lhs = det_complex(embedded, c.dim(), precision_bits);
  report.lhs = render(lhs);
  report.rhs = render(rhs);
  if (!approx_equal(lhs, rhs, rel_tol)) {
    report.fail("det C_p differs from (-1)^t G^{p-1}/p (relative " + std::to_string(relative_difference(lhs, rhs)) +
                ")");
  }

  // det(x I - C_p) = (x^f - G^f)^{t-1} (x^f - G^f/p).
  const ComplexApprox gf = g.pow(f);
  for (int x : {0, 1, -1, 2, -2}) {
    std::vector<ComplexApprox> shifted = embedded;
    for (auto& e : shifted) e = -e;
    const ComplexApprox xc(static_cast<double>(x), 0.0, precision_bits);
    for (std::size_t i = 0; i < c.dim(); ++i) shifted[i * c.dim() + i] = shifted[i * c.dim() + i] + xc;
    const ComplexApprox char_lhs = det_complex(std::move(shifted), c.dim(), precision_bits);
    ComplexApprox xf(1.0, 0.0, precision_bits);
    for (std::uint32_t i = 0; i < f; ++i) xf = xf * xc;
    const ComplexApprox char_rhs = (xf - gf).pow(t - 1) * (xf - gf * inv_p);
    VerificationReport check;
    check.claim_id = "eq1.2.charpoly";
    check.backend = Backend::numeric;
    check.parameters = {{"x", x}};
    check.lhs = render(char_lhs);
    check.rhs = render(char_rhs);
    // The polynomial vanishes at some x (e.g. x = +-1 when psi is quadratic),
    // so error is measured against Hadamard's bound (x^2 + p - 1)^{(p-1)/2}.
    const double hadamard = std::pow(static_cast<double>(x * x) + p - 1, (p - 1) / 2.0);
    if (!approx_equal(char_lhs, char_rhs, rel_tol, rel_tol * hadamard)) check.fail("characteristic polynomial mismatch");
    report.add_check(std::move(check));
  }

  if (exact) {
    const std::uint64_t big = gauss_conductor(field);
    CycNum g_exact = gauss_sum_exact(field, psi.exponent());
    CycNum rhs_exact = g_exact.pow(p - 1) * mpq_class(t % 2 == 1 ? -1 : 1, p);
    const CycNum det = det_exact(c).lift(big);
    VerificationReport check;
    check.claim_id = "eq1.2.exact";
    check.lhs = render(det);
    check.rhs = render(rhs_exact);
    if (!(det == rhs_exact)) check.fail("exact determinant differs from (-1)^t G^{p-1}/p");
    report.add_check(std::move(check));
  }
  return report;
}

}  // namespace cyclomat
