#include "cyclomat/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "cyclomat/arith.hpp"
#include "cyclomat/errors.hpp"

namespace cyclomat {

namespace {

constexpr std::uint64_t kMonomialTableLimit = 1'000'000;

int mobius(std::uint64_t n) {
  int mu = 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

std::int64_t checked_mul_sub(std::int64_t acc, std::int64_t a, std::int64_t b) {
  std::int64_t prod = 0;
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &prod) || __builtin_sub_overflow(acc, prod, &out)) {
    throw CapacityError("cyclotomic coefficient overflow");
  }
  return out;
}

// a -= c * phi, where phi is an int64 coefficient.
void submul_small(mpz_class& a, const mpz_class& c, std::int64_t phi) {
  if (phi > 0) {
    mpz_submul_ui(a.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(phi));
  } else if (phi < 0) {
    mpz_addmul_ui(a.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(-phi));
  }
}

// Polynomials over Q for the extended Euclidean inverse.
using QPoly = std::vector<mpq_class>;

void trim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly qsub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = (i < a.size() ? a[i] : mpq_class(0)) - (i < b.size() ? b[i] : mpq_class(0));
  }
  trim(r);
  return r;
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// Divides a by b (b nonzero); returns quotient, leaves remainder in a.
QPoly qdivmod(QPoly& a, const QPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  QPoly quot(a.size() - b.size() + 1);
  const mpq_class lead = b.back();
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const mpq_class c = a.back() / lead;
    quot[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.back() = 0;
    trim(a);
  }
  return quot;
}

}  // namespace

IntPoly cyclotomic_polynomial(std::uint64_t m) {
  if (m < 1) throw InvalidParameter("cyclotomic polynomial requires m >= 1");
  // Phi_m = prod_{d | m} (x^d - 1)^{mu(m/d)}: multiply the mu = +1 factors,
  // then divide out the mu = -1 factors exactly.
  IntPoly poly{1};
  const auto divs = divisors(m);
  for (std::uint64_t d : divs) {
    if (mobius(m / d) != 1) continue;
    IntPoly next(poly.size() + d, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + d] += poly[i];
      next[i] = checked_mul_sub(next[i], poly[i], 1);
    }
    poly = std::move(next);
  }
  for (std::uint64_t d : divs) {
    if (mobius(m / d) != -1) continue;
    // poly = quot * (x^d - 1)  =>  quot[i] = quot[i - d] - poly[i].
    IntPoly quot(poly.size() - d, 0);
    for (std::size_t i = 0; i < quot.size(); ++i) {
      const std::int64_t prev = i >= d ? quot[i - d] : 0;
      quot[i] = checked_mul_sub(prev, poly[i], 1);
    }
    poly = std::move(quot);
  }
  return poly;
}

CyclotomicField::CyclotomicField(std::uint64_t m) : m_(m), degree_(euler_phi(m)), phi_(cyclotomic_polynomial(m)) {
  if (phi_.size() != degree_ + 1 || phi_.back() != 1) throw std::logic_error("bad cyclotomic polynomial");
  if (m_ * degree_ <= kMonomialTableLimit) {
    monomials_.reserve(m_);
    std::vector<std::int64_t> cur(degree_, 0);
    cur[0] = 1;
    for (std::uint64_t e = 0; e < m_; ++e) {
      monomials_.push_back(cur);
      const std::int64_t top = cur[degree_ - 1];
      for (std::size_t i = degree_ - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      if (top != 0) {
        for (std::size_t i = 0; i < degree_; ++i) cur[i] = checked_mul_sub(cur[i], top, phi_[i]);
      }
    }
  }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(std::uint64_t m) {
  if (m < 1) throw InvalidParameter("conductor must be at least 1");
  static std::mutex mu;
  static std::map<std::uint64_t, std::shared_ptr<const CyclotomicField>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(m);
  if (it != registry.end()) return it->second;
  auto field = std::make_shared<const CyclotomicField>(m);
  registry.emplace(m, field);
  return field;
}

std::vector<mpz_class> CyclotomicField::monomial(std::int64_t e) const {
  const std::uint64_t k = normalize_exponent(e, m_);
  if (!monomials_.empty()) {
    const auto& row = monomials_[k];
    std::vector<mpz_class> out(degree_);
    for (std::size_t i = 0; i < degree_; ++i) out[i] = static_cast<long>(row[i]);
    return out;
  }
  std::vector<mpz_class> poly(std::max<std::size_t>(k + 1, degree_), 0);
  poly[k] = 1;
  reduce(poly);
  return poly;
}

std::int64_t CyclotomicField::monomial_sup_norm() const {
  std::call_once(sup_once_, [this] {
    std::int64_t best = 1;
    if (!monomials_.empty()) {
      for (const auto& row : monomials_) {
        for (auto c : row) best = std::max(best, c < 0 ? -c : c);
      }
    } else {
      for (std::uint64_t e = 0; e < m_; ++e) {
        for (const auto& c : monomial(static_cast<std::int64_t>(e))) {
          best = std::max<std::int64_t>(best, mpz_class(abs(c)).get_si());
        }
      }
    }
    sup_norm_ = best;
  });
  return sup_norm_;
}

void CyclotomicField::reduce(std::vector<mpz_class>& poly) const {
  for (std::size_t i = poly.size(); i-- > degree_;) {
    if (poly[i] == 0) continue;
    const mpz_class c = poly[i];
    const std::size_t base = i - degree_;
    for (std::size_t j = 0; j < degree_; ++j) submul_small(poly[base + j], c, phi_[j]);
    poly[i] = 0;
  }
  poly.resize(degree_, 0);
}

// ---------------------------------------------------------------------------

CycNum::CycNum() : CycNum(CyclotomicField::get(1), {mpz_class(0)}, 1) {}

CycNum::CycNum(std::shared_ptr<const CyclotomicField> field, std::vector<mpz_class> num, mpz_class den)
    : field_(std::move(field)), num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw DivisionByZero("zero denominator");
  normalize();
}

void CycNum::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  if (den_ == 1) return;
  mpz_class g = den_;
  for (const auto& c : num_) {
    if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  if (is_zero()) {
    den_ = 1;
    return;
  }
  den_ /= g;
  for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

void CycNum::require_same_conductor(const CycNum& b) const {
  if (field_->conductor() != b.field_->conductor()) {
    throw ConductorMismatch("conductor mismatch: " + std::to_string(field_->conductor()) + " vs " +
                            std::to_string(b.field_->conductor()));
  }
}

CycNum CycNum::zero(std::uint64_t m) {
  auto f = CyclotomicField::get(m);
  std::vector<mpz_class> num(f->degree(), 0);
  return CycNum(std::move(f), std::move(num), 1);
}

CycNum CycNum::one(std::uint64_t m) { return rational(m, 1); }

CycNum CycNum::rational(std::uint64_t m, const mpq_class& value) {
  auto f = CyclotomicField::get(m);
  std::vector<mpz_class> num(f->degree(), 0);
  num[0] = value.get_num();
  return CycNum(std::move(f), std::move(num), value.get_den());
}

CycNum CycNum::zeta_power(std::uint64_t m, std::int64_t e) {
  auto f = CyclotomicField::get(m);
  auto num = f->monomial(e);
  return CycNum(std::move(f), std::move(num), 1);
}

CycNum CycNum::from_coeffs(std::uint64_t m, const std::vector<mpq_class>& coeffs) {
  auto f = CyclotomicField::get(m);
  mpz_class den = 1;
  for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> num(std::max(coeffs.size(), f->degree()), 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) num[i] = coeffs[i].get_num() * (den / coeffs[i].get_den());
  f->reduce(num);
  return CycNum(std::move(f), std::move(num), den);
}

CycNum CycNum::from_integers(std::uint64_t m, std::vector<mpz_class> numerators, mpz_class denominator) {
  auto f = CyclotomicField::get(m);
  if (numerators.size() < f->degree()) numerators.resize(f->degree(), 0);
  f->reduce(numerators);
  return CycNum(std::move(f), std::move(numerators), std::move(denominator));
}

CycNum CycNum::from_exponent_counts(std::uint64_t m, std::span<const std::int64_t> counts) {
  if (counts.size() > m) throw InvalidParameter("more exponent slots than the conductor");
  auto f = CyclotomicField::get(m);
  std::vector<mpz_class> poly(std::max(counts.size(), f->degree()), 0);
  for (std::size_t e = 0; e < counts.size(); ++e) poly[e] = static_cast<long>(counts[e]);
  f->reduce(poly);
  return CycNum(std::move(f), std::move(poly), 1);
}

mpq_class CycNum::coeff(std::size_t i) const {
  mpq_class r(num_.at(i), den_);
  r.canonicalize();
  return r;
}

std::vector<mpq_class> CycNum::coeffs() const {
  std::vector<mpq_class> out;
  out.reserve(num_.size());
  for (std::size_t i = 0; i < num_.size(); ++i) out.push_back(coeff(i));
  return out;
}

bool CycNum::is_zero() const {
  return std::all_of(num_.begin(), num_.end(), [](const mpz_class& c) { return c == 0; });
}

bool CycNum::is_rational() const {
  return std::all_of(num_.begin() + 1, num_.end(), [](const mpz_class& c) { return c == 0; });
}

CycNum& CycNum::operator+=(const CycNum& b) {
  require_same_conductor(b);
  if (den_ == b.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += b.num_[i];
  } else {
    const mpz_class l = lcm(den_, b.den_);
    const mpz_class sa = l / den_;
    const mpz_class sb = l / b.den_;
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * sa + b.num_[i] * sb;
    den_ = l;
  }
  normalize();
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& b) { return *this += -b; }

CycNum operator-(CycNum a) {
  for (auto& c : a.num_) c = -c;
  return a;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
  a.require_same_conductor(b);
  const std::size_t d = a.num_.size();
  std::vector<mpz_class> prod(2 * d - 1, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (a.num_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b.num_[j] == 0) continue;
      mpz_addmul(prod[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
  }
  a.field_->reduce(prod);
  return CycNum(a.field_, std::move(prod), a.den_ * b.den_);
}

CycNum& CycNum::operator*=(const CycNum& b) { return *this = *this * b; }

CycNum& CycNum::operator*=(const mpq_class& s) {
  for (auto& c : num_) c *= s.get_num();
  den_ *= s.get_den();
  normalize();
  return *this;
}

bool operator==(const CycNum& a, const CycNum& b) {
  return a.field_->conductor() == b.field_->conductor() && a.den_ == b.den_ && a.num_ == b.num_;
}

CycNum CycNum::lift(std::uint64_t new_m) const {
  const std::uint64_t m = conductor();
  if (new_m == 0 || new_m % m != 0) {
    throw InvalidParameter("cannot lift conductor " + std::to_string(m) + " to " + std::to_string(new_m));
  }
  const std::uint64_t s = new_m / m;
  auto f = CyclotomicField::get(new_m);
  std::vector<mpz_class> poly(std::max<std::size_t>((num_.size() - 1) * s + 1, f->degree()), 0);
  for (std::size_t i = 0; i < num_.size(); ++i) poly[i * s] = num_[i];
  f->reduce(poly);
  return CycNum(std::move(f), std::move(poly), den_);
}

CycNum CycNum::conj() const {
  const std::uint64_t m = conductor();
  std::vector<mpz_class> poly(std::max<std::size_t>(m, num_.size()), 0);
  for (std::size_t i = 0; i < num_.size(); ++i) poly[(m - i) % m] += num_[i];
  field_->reduce(poly);
  return CycNum(field_, std::move(poly), den_);
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_m)");
  if (is_rational()) {
    mpq_class r(den_, num_[0]);
    r.canonicalize();
    return rational(conductor(), r);
  }
  // Extended Euclid on (Phi_m, a): track t with t * a = r (mod Phi_m).
  QPoly r0(field_->modulus().begin(), field_->modulus().end());
  QPoly r1(num_.begin(), num_.end());
  trim(r1);
  QPoly t0;
  QPoly t1{mpq_class(1)};
  while (r1.size() > 1) {
    QPoly rem = r0;
    QPoly quot = qdivmod(rem, r1);
    QPoly t2 = qsub(t0, qmul(quot, t1));
    r0 = std::move(r1);
    t0 = std::move(t1);
    r1 = std::move(rem);
    t1 = std::move(t2);
    if (r1.empty()) throw std::logic_error("cyclotomic polynomial is not irreducible");
    // Keep remainders monic to limit rational growth.
    const mpq_class lead = r1.back();
    for (auto& c : r1) c /= lead;
    for (auto& c : t1) c /= lead;
  }
  // Now t1 * num = r1[0] (mod Phi_m), and r1 is monic of degree 0.
  std::vector<mpq_class> coeffs(t1.begin(), t1.end());
  for (auto& c : coeffs) c /= r1[0];
  CycNum inv = from_coeffs(conductor(), coeffs);
  inv *= mpq_class(den_);
  return inv;
}

CycNum CycNum::pow(std::uint64_t e) const {
  CycNum result = one(conductor());
  CycNum base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

std::string CycNum::to_string() const {
  std::ostringstream os;
  const std::string z = "z" + std::to_string(conductor());
  bool first = true;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    const mpz_class& c = num_[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    const mpz_class mag = neg ? mpz_class(-c) : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << z;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) return "0";
  if (den_ == 1) return os.str();
  return "(" + os.str() + ")/" + den_.get_str();
}

// ---------------------------------------------------------------------------

RootTable::RootTable(std::uint64_t m, int precision_bits) : precision_(precision_bits) {
  roots_.reserve(m);
  for (std::uint64_t e = 0; e < m; ++e) {
    roots_.push_back(ComplexApprox::root_of_unity(static_cast<std::int64_t>(e), m, precision_bits));
  }
}

ComplexApprox embed_complex(const CycNum& a, const RootTable& roots) {
  if (roots.conductor() != a.conductor()) throw ConductorMismatch("root table conductor mismatch");
  const int prec = roots.precision();
  ComplexApprox acc(prec);
  for (std::size_t i = 0; i < a.degree(); ++i) {
    const mpz_class& c = a.numerators()[i];
    if (c == 0) continue;
    acc += roots[i] * Real(mpq_class(c), prec);
  }
  return acc * Real(mpq_class(1, a.denominator()), prec);
}

ComplexApprox embed_complex(const CycNum& a, int precision_bits) {
  const int prec = precision_bits;
  const std::uint64_t m = a.conductor();
  ComplexApprox acc(prec);
  for (std::size_t i = 0; i < a.degree(); ++i) {
    const mpz_class& c = a.numerators()[i];
    if (c == 0) continue;
    acc += ComplexApprox::root_of_unity(static_cast<std::int64_t>(i), m, prec) * Real(mpq_class(c), prec);
  }
  return acc * Real(mpq_class(1, a.denominator()), prec);
}

FieldElement reduce_mod_prime(const CycNum& a, const FiniteField& field) {
  if (!a.is_integral()) throw DomainError("reduction mod a prime requires integral coordinates");
  const std::uint64_t m = a.conductor();
  const std::uint32_t order = field.group_order();
  if (order % m != 0) {
    throw InvalidParameter("conductor " + std::to_string(m) + " does not divide q - 1 = " + std::to_string(order));
  }
  const FiniteField::Code w = field.exp_code(order / m);
  FiniteField::Code acc = 0;
  FiniteField::Code wi = 1;
  for (std::size_t i = 0; i < a.degree(); ++i) {
    const unsigned long c = mpz_fdiv_ui(a.numerators()[i].get_mpz_t(), field.p());
    if (c != 0) acc = field.add_code(acc, field.mul_code(static_cast<FiniteField::Code>(c), wi));
    wi = field.mul_code(wi, w);
  }
  return field.decode(acc);
}

}  // namespace cyclomat
