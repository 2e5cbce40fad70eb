#include "cyclomat/finite_field.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "cyclomat/arith.hpp"
#include "cyclomat/errors.hpp"

namespace cyclomat {

namespace {

constexpr std::uint64_t kMaxFieldOrder = 1ULL << 24;

using Poly = std::vector<std::uint32_t>;  // low degree first over F_p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, std::uint32_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint64_t lead_inv = pow_mod(f.back(), p - 2, p);
  while (a.size() > df) {
    const std::size_t shift = a.size() - 1 - df;
    const std::uint64_t c = a.back() * lead_inv % p;
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - c * f[i] % p) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
    }
  }
  Poly out(acc.begin(), acc.end());
  return poly_mod(std::move(out), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
  Poly result = poly_mod(Poly{1}, f, p);
  base = poly_mod(std::move(base), f, p);
  while (e != 0) {
    if (e & 1U) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1U;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly poly_sub(Poly a, const Poly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

/// x^{p^d} mod f by d Frobenius steps.
Poly frobenius_power_of_x(const Poly& f, std::uint32_t p, std::uint32_t d) {
  Poly x = poly_mod(Poly{0, 1}, f, p);
  for (std::uint32_t i = 0; i < d; ++i) x = poly_powmod(x, p, f, p);
  return x;
}

}  // namespace

bool is_irreducible_mod_p(std::span<const std::uint32_t> poly, std::uint32_t p) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2) return false;
  const auto n = static_cast<std::uint32_t>(f.size() - 1);
  if (n == 1) return true;
  const Poly x = poly_mod(Poly{0, 1}, f, p);
  if (frobenius_power_of_x(f, p, n) != x) return false;
  for (std::uint64_t ell : prime_divisors(n)) {
    const Poly h = poly_sub(frobenius_power_of_x(f, p, n / static_cast<std::uint32_t>(ell)), x, p);
    const Poly g = poly_gcd(f, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

bool FieldElement::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](std::uint32_t c) { return c == 0; });
}

struct FiniteField::Data {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::uint32_t q = 0;
  Poly modulus;
  Code generator = 0;
  std::vector<Code> exp;           // exp[a] = gamma^a, a in [0, q-2]
  std::vector<std::uint32_t> log; // log[code]; log[0] unused
  std::vector<std::uint32_t> basis_trace;  // Tr(t^i)
};

namespace {

FiniteField::Code encode_poly(const Poly& a, std::uint32_t p, std::uint32_t n) {
  std::uint64_t code = 0;
  for (std::uint32_t i = n; i-- > 0;) code = code * p + (i < a.size() ? a[i] : 0);
  return static_cast<FiniteField::Code>(code);
}

Poly decode_poly(FiniteField::Code code, std::uint32_t p, std::uint32_t n) {
  Poly a(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    a[i] = code % p;
    code /= p;
  }
  trim(a);
  return a;
}

void check_prime_power(std::uint32_t p, std::uint32_t n) {
  if (p == 2) throw InvalidParameter("characteristic 2 is not supported; p must be an odd prime");
  if (!is_prime(p)) throw InvalidParameter("p = " + std::to_string(p) + " is not prime");
  if (n < 1) throw InvalidParameter("extension degree n must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) {
      throw CapacityError("field order p^n exceeds the table limit of 2^24 elements");
    }
  }
}

}  // namespace

FiniteField FiniteField::make(std::uint32_t p, std::uint32_t n) {
  check_prime_power(p, n);
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < n; ++i) count *= p;
  // Enumerate (c_0, ..., c_{n-1}) lexicographically with c_0 most significant.
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly f(n + 1, 0);
    std::uint64_t rest = idx;
    for (std::uint32_t i = n; i-- > 0;) {
      f[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    f[n] = 1;
    if (is_irreducible_mod_p(f, p)) return build(p, std::move(f));
  }
  throw std::logic_error("no irreducible polynomial found");
}

FiniteField FiniteField::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  if (modulus.size() < 2) throw InvalidParameter("modulus must have degree at least 1");
  check_prime_power(p, static_cast<std::uint32_t>(modulus.size() - 1));
  if (modulus.back() != 1) throw InvalidParameter("modulus must be monic");
  for (auto c : modulus) {
    if (c >= p) throw InvalidParameter("modulus coefficients must lie in [0, p-1]");
  }
  if (!is_irreducible_mod_p(modulus, p)) throw InvalidParameter("modulus is reducible over F_p");
  return build(p, std::move(modulus));
}

FiniteField FiniteField::build(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  auto d = std::make_shared<Data>();
  d->p = p;
  d->n = static_cast<std::uint32_t>(modulus.size() - 1);
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < d->n; ++i) q *= p;
  d->q = static_cast<std::uint32_t>(q);
  d->modulus = modulus;
  const Poly& f = d->modulus;
  const std::uint64_t order = q - 1;
  const auto ells = prime_divisors(order);

  Poly gamma;
  for (Code c = 1; c < q; ++c) {
    Poly g = decode_poly(c, p, d->n);
    bool full = true;
    for (std::uint64_t ell : ells) {
      if (poly_powmod(g, order / ell, f, p) == Poly{1}) {
        full = false;
        break;
      }
    }
    if (full) {
      d->generator = c;
      gamma = std::move(g);
      break;
    }
  }
  if (gamma.empty()) throw std::logic_error("no generator found");

  d->exp.resize(order);
  d->log.assign(q, std::numeric_limits<std::uint32_t>::max());
  Poly cur{1};
  for (std::uint64_t a = 0; a < order; ++a) {
    const Code c = encode_poly(cur, p, d->n);
    if (d->log[c] != std::numeric_limits<std::uint32_t>::max()) {
      throw std::logic_error("generator power cycle shorter than q - 1");
    }
    d->exp[a] = c;
    d->log[c] = static_cast<std::uint32_t>(a);
    cur = poly_mulmod(cur, gamma, f, p);
  }

  d->basis_trace.resize(d->n);
  for (std::uint32_t i = 0; i < d->n; ++i) {
    Poly ti(i + 1, 0);
    ti[i] = 1;
    Poly y = poly_mod(ti, f, p);
    Poly sum;
    for (std::uint32_t j = 0; j < d->n; ++j) {
      Poly s = sum;
      if (s.size() < y.size()) s.resize(y.size(), 0);
      for (std::size_t t = 0; t < y.size(); ++t) s[t] = (s[t] + y[t]) % p;
      trim(s);
      sum = std::move(s);
      y = poly_powmod(y, p, f, p);
    }
    if (sum.size() > 1) throw std::logic_error("trace left the prime field");
    d->basis_trace[i] = sum.empty() ? 0 : sum[0];
  }
  return FiniteField(std::move(d));
}

std::uint32_t FiniteField::p() const { return data_->p; }
std::uint32_t FiniteField::n() const { return data_->n; }
std::uint32_t FiniteField::q() const { return data_->q; }
std::uint32_t FiniteField::group_order() const { return data_->q - 1; }
const std::vector<std::uint32_t>& FiniteField::modulus() const { return data_->modulus; }
FieldElement FiniteField::generator() const { return decode(data_->generator); }
FiniteField::Code FiniteField::generator_code() const { return data_->generator; }

FieldElement FiniteField::zero() const { return decode(0); }
FieldElement FiniteField::one() const { return decode(1); }
FieldElement FiniteField::from_int(std::int64_t value) const { return decode(from_int_code(value)); }

FiniteField::Code FiniteField::from_int_code(std::int64_t value) const {
  return static_cast<Code>(normalize_exponent(value, data_->p));
}

FiniteField::Code FiniteField::encode(const FieldElement& x) const {
  if (x.coeffs.size() != data_->n) throw InvalidParameter("element has wrong length for this field");
  std::uint64_t code = 0;
  for (std::uint32_t i = data_->n; i-- > 0;) {
    if (x.coeffs[i] >= data_->p) throw InvalidParameter("element coordinate out of range");
    code = code * data_->p + x.coeffs[i];
  }
  return static_cast<Code>(code);
}

FieldElement FiniteField::decode(Code code) const {
  if (code >= data_->q) throw InvalidParameter("encoding out of range");
  FieldElement x;
  x.coeffs.resize(data_->n);
  for (std::uint32_t i = 0; i < data_->n; ++i) {
    x.coeffs[i] = code % data_->p;
    code /= data_->p;
  }
  return x;
}

FiniteField::Code FiniteField::add_code(Code x, Code y) const {
  const std::uint32_t p = data_->p;
  if (data_->n == 1) return (x + y) % p;
  std::uint64_t out = 0;
  std::uint64_t place = 1;
  for (std::uint32_t i = 0; i < data_->n; ++i) {
    out += ((x % p + y % p) % p) * place;
    x /= p;
    y /= p;
    place *= p;
  }
  return static_cast<Code>(out);
}

FiniteField::Code FiniteField::neg_code(Code x) const {
  const std::uint32_t p = data_->p;
  if (data_->n == 1) return (p - x) % p;
  std::uint64_t out = 0;
  std::uint64_t place = 1;
  for (std::uint32_t i = 0; i < data_->n; ++i) {
    out += ((p - x % p) % p) * place;
    x /= p;
    place *= p;
  }
  return static_cast<Code>(out);
}

FiniteField::Code FiniteField::sub_code(Code x, Code y) const { return add_code(x, neg_code(y)); }

FiniteField::Code FiniteField::mul_code(Code x, Code y) const {
  if (x == 0 || y == 0) return 0;
  const std::uint32_t order = data_->q - 1;
  return data_->exp[(static_cast<std::uint64_t>(data_->log[x]) + data_->log[y]) % order];
}

FiniteField::Code FiniteField::inv_code(Code x) const {
  if (x == 0) throw DivisionByZero("inverse of zero in F_q");
  const std::uint32_t order = data_->q - 1;
  return data_->exp[(order - data_->log[x]) % order];
}

FiniteField::Code FiniteField::pow_code(Code x, std::uint64_t e) const {
  if (x == 0) return e == 0 ? 1 : 0;
  const std::uint64_t order = data_->q - 1;
  return data_->exp[static_cast<std::uint64_t>(data_->log[x]) * (e % order) % order];
}

FiniteField::Code FiniteField::exp_code(std::uint64_t a) const { return data_->exp[a % (data_->q - 1)]; }

std::uint32_t FiniteField::dlog_code(Code x) const {
  if (x == 0) throw DomainError("discrete logarithm of zero is undefined");
  if (x >= data_->q) throw InvalidParameter("encoding out of range");
  return data_->log[x];
}

std::uint32_t FiniteField::dlog(const FieldElement& x) const { return dlog_code(encode(x)); }

FieldElement FiniteField::add(const FieldElement& x, const FieldElement& y) const {
  return decode(add_code(encode(x), encode(y)));
}
FieldElement FiniteField::sub(const FieldElement& x, const FieldElement& y) const {
  return decode(sub_code(encode(x), encode(y)));
}
FieldElement FiniteField::neg(const FieldElement& x) const { return decode(neg_code(encode(x))); }
FieldElement FiniteField::mul(const FieldElement& x, const FieldElement& y) const {
  return decode(mul_code(encode(x), encode(y)));
}
FieldElement FiniteField::inv(const FieldElement& x) const { return decode(inv_code(encode(x))); }
FieldElement FiniteField::pow(const FieldElement& x, std::uint64_t e) const {
  return decode(pow_code(encode(x), e));
}

std::uint32_t FiniteField::trace_code(Code x) const {
  const std::uint32_t p = data_->p;
  std::uint64_t acc = 0;
  for (std::uint32_t i = 0; i < data_->n; ++i) {
    acc += static_cast<std::uint64_t>(x % p) * data_->basis_trace[i];
    x /= p;
  }
  return static_cast<std::uint32_t>(acc % p);
}

std::uint32_t FiniteField::trace(const FieldElement& x) const { return trace_code(encode(x)); }

std::vector<FiniteField::Code> FiniteField::power_residue_codes(std::uint32_t k) const {
  const std::uint32_t order = data_->q - 1;
  if (k == 0 || order % k != 0) {
    throw InvalidParameter("k = " + std::to_string(k) + " does not divide q - 1 = " + std::to_string(order));
  }
  if (k >= order) throw InvalidParameter("k must be smaller than q - 1");
  const std::uint32_t count = order / k;
  std::vector<Code> out;
  out.reserve(count);
  for (std::uint32_t i = 1; i <= count; ++i) {
    out.push_back(data_->exp[static_cast<std::uint64_t>(k) * i % order]);
  }
  return out;
}

std::vector<FieldElement> FiniteField::power_residues(std::uint32_t k) const {
  std::vector<FieldElement> out;
  for (Code c : power_residue_codes(k)) out.push_back(decode(c));
  return out;
}

bool FiniteField::in_prime_field(const FieldElement& x) const {
  return std::all_of(x.coeffs.begin() + 1, x.coeffs.end(), [](std::uint32_t c) { return c == 0; });
}

}  // namespace cyclomat
