#include "cyclomat/char_sums.hpp"

#include <algorithm>
#include <stdexcept>

#include "cyclomat/arith.hpp"
#include "cyclomat/errors.hpp"

namespace cyclomat {

namespace {

std::uint32_t reduce_exponent(const FiniteField& field, std::int64_t r) {
  return static_cast<std::uint32_t>(normalize_exponent(r, field.group_order()));
}

// chi(-1) = zeta_{q-1}^{(q-1)/2} = -1, so chi^b(-1) = (-1)^b.
int sign_at_minus_one(std::uint32_t b) { return b % 2 == 0 ? 1 : -1; }

}  // namespace

Character::Character(FiniteField field, std::int64_t r)
    : field_(std::move(field)), r_(reduce_exponent(field_, r)) {}

std::uint32_t Character::order() const {
  const std::uint32_t m = field_.group_order();
  return m / std::gcd(m, r_);
}

std::int64_t Character::value_exponent(FiniteField::Code x) const {
  if (x == 0) return -1;
  const std::uint64_t m = field_.group_order();
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(r_) * field_.dlog_code(x) % m);
}

CycNum Character::value(const FieldElement& x) const {
  const std::int64_t e = value_exponent(field_.encode(x));
  const std::uint64_t m = field_.group_order();
  return e < 0 ? CycNum::zero(m) : CycNum::zeta_power(m, e);
}

CycNum char_value(const FiniteField& field, std::int64_t r, const FieldElement& x) {
  return Character(field, r).value(x);
}

CycNum jacobi_sum(const FiniteField& field, std::int64_t a, std::int64_t b) {
  const std::uint64_t m = field.group_order();
  const std::uint64_t ea = reduce_exponent(field, a);
  const std::uint64_t eb = reduce_exponent(field, b);
  std::vector<std::int64_t> counts(m, 0);
  const FiniteField::Code one = field.from_int_code(1);
  for (FiniteField::Code x = 1; x < field.q(); ++x) {
    if (x == one) continue;
    const FiniteField::Code y = field.sub_code(one, x);
    ++counts[(ea * field.dlog_code(x) + eb * field.dlog_code(y)) % m];
  }
  return CycNum::from_exponent_counts(m, counts);
}

std::uint64_t gauss_conductor(const FiniteField& field) {
  return static_cast<std::uint64_t>(field.p()) * field.group_order();
}

ComplexApprox gauss_sum(const FiniteField& field, std::int64_t r, int precision_bits) {
  // Collect exponents of zeta_{p(q-1)} first so every root is computed once.
  const std::uint64_t m = field.group_order();
  const std::uint64_t p = field.p();
  const std::uint64_t big = gauss_conductor(field);
  const std::uint64_t e = reduce_exponent(field, r);
  std::vector<std::uint64_t> exps;
  exps.reserve(m);
  for (FiniteField::Code x = 1; x < field.q(); ++x) {
    exps.push_back((e * field.dlog_code(x) % m * p + field.trace_code(x) * m) % big);
  }
  std::sort(exps.begin(), exps.end());
  ComplexApprox sum(precision_bits);
  for (std::size_t i = 0; i < exps.size();) {
    std::size_t j = i;
    while (j < exps.size() && exps[j] == exps[i]) ++j;
    const ComplexApprox root = ComplexApprox::root_of_unity(static_cast<std::int64_t>(exps[i]), big, precision_bits);
    sum += root * Real(static_cast<double>(j - i), precision_bits);
    i = j;
  }
  return sum;
}

CycNum gauss_sum_exact(const FiniteField& field, std::int64_t r, std::uint64_t degree_bound) {
  const std::uint64_t big = gauss_conductor(field);
  if (euler_phi(big) > degree_bound) {
    throw CapacityError("exact Gauss sum needs degree " + std::to_string(euler_phi(big)) + " > bound " +
                        std::to_string(degree_bound));
  }
  const std::uint64_t m = field.group_order();
  const std::uint64_t p = field.p();
  const std::uint64_t e = reduce_exponent(field, r);
  std::vector<std::int64_t> counts(big, 0);
  for (FiniteField::Code x = 1; x < field.q(); ++x) {
    ++counts[(e * field.dlog_code(x) % m * p + field.trace_code(x) * m) % big];
  }
  return CycNum::from_exponent_counts(big, counts);
}

GaussSumTable::GaussSumTable(const FiniteField& field, int precision_bits)
    : order_(field.group_order()), precision_(precision_bits) {
  // G(chi^r) = sum_a zeta_{q-1}^{ra} * w_a with w_a = zeta_p^{Tr gamma^a}.
  const std::uint32_t p = field.p();
  std::vector<ComplexApprox> additive;
  additive.reserve(p);
  for (std::uint32_t t = 0; t < p; ++t) additive.push_back(ComplexApprox::root_of_unity(t, p, precision_bits));
  std::vector<ComplexApprox> roots;
  roots.reserve(order_);
  for (std::uint32_t j = 0; j < order_; ++j) roots.push_back(ComplexApprox::root_of_unity(j, order_, precision_bits));
  std::vector<std::uint32_t> traces(order_);
  for (std::uint32_t a = 0; a < order_; ++a) traces[a] = field.trace_code(field.exp_code(a));

  values_.reserve(order_);
  for (std::uint32_t r = 0; r < order_; ++r) {
    // Group by trace value first: sum_t zeta_p^t * (sum_{a: Tr = t} zeta^{ra}).
    std::vector<ComplexApprox> partial(p, ComplexApprox(precision_bits));
    for (std::uint32_t a = 0; a < order_; ++a) {
      partial[traces[a]] += roots[static_cast<std::uint64_t>(r) * a % order_];
    }
    ComplexApprox sum(precision_bits);
    for (std::uint32_t t = 0; t < p; ++t) sum += additive[t] * partial[t];
    values_.push_back(std::move(sum));
  }
}

const ComplexApprox& GaussSumTable::operator[](std::int64_t r) const {
  return values_[normalize_exponent(r, order_)];
}

CycNum greene_binomial(const FiniteField& field, std::int64_t a, std::int64_t b) {
  const std::uint32_t eb = reduce_exponent(field, b);
  CycNum j = jacobi_sum(field, a, -static_cast<std::int64_t>(eb));
  return j * mpq_class(sign_at_minus_one(eb), field.q());
}

CycNum hyp2f1(const FiniteField& field, std::int64_t a, std::int64_t b, std::int64_t c, const FieldElement& lambda) {
  const std::uint64_t m = field.group_order();
  if (lambda.is_zero()) return CycNum::zero(m);
  const std::uint32_t log_lambda = field.dlog(lambda);
  CycNum sum = CycNum::zero(m);
  for (std::int64_t j = 0; j < static_cast<std::int64_t>(m); ++j) {
    CycNum term = greene_binomial(field, a + j, j) * greene_binomial(field, b + j, c + j);
    term *= CycNum::zeta_power(m, static_cast<std::int64_t>(static_cast<std::uint64_t>(j) * log_lambda % m));
    sum += term;
  }
  return sum * mpq_class(field.q(), m);
}

CycNum quadratic_pair_sum(const FiniteField& field, std::int64_t e, std::int64_t r) {
  const std::uint64_t m = field.group_order();
  const std::uint64_t ee = reduce_exponent(field, e);
  const std::uint64_t er = reduce_exponent(field, r);
  const FiniteField::Code one = field.from_int_code(1);
  std::vector<std::int64_t> counts(m, 0);
  for (FiniteField::Code x = 1; x < field.q(); ++x) {
    const FiniteField::Code u = field.sub_code(one, x);
    const FiniteField::Code v = field.add_code(one, x);
    if (u == 0 || v == 0) continue;
    ++counts[(ee * field.dlog_code(x) + er * (field.dlog_code(u) + field.dlog_code(v))) % m];
  }
  return CycNum::from_exponent_counts(m, counts) * mpq_class(1, 2);
}

int fourth_power_indicator(const FiniteField& field, const FieldElement& x) {
  const std::uint32_t m = field.group_order();
  if (m % 4 != 0) throw InvalidParameter("fourth-power indicator needs 4 | q-1");
  CycNum average = CycNum::zero(m);
  for (std::uint32_t j = 0; j < 4; ++j) average += char_value(field, static_cast<std::int64_t>(j * (m / 4)), x);
  average *= mpq_class(1, 4);

  int by_membership = 0;
  if (!x.is_zero()) {
    // D_4 is the subgroup of index 4: discrete logs divisible by 4.
    by_membership = field.dlog(x) % 4 == 0 ? 1 : 0;
  }
  if (!(average == CycNum::rational(m, by_membership))) {
    throw std::logic_error("fourth-power indicator: character average disagrees with D_4 membership");
  }
  return by_membership;
}

}  // namespace cyclomat
