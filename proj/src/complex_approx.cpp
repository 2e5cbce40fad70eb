#include "cyclomat/complex_approx.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <string>

#include "cyclomat/errors.hpp"

namespace cyclomat {

namespace {

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

int checked_precision(int bits) {
  if (bits < kMinPrecisionBits) {
    throw InvalidParameter("precision must be at least 53 bits, got " + std::to_string(bits));
  }
  return bits;
}

int wider(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

Real::Real(int precision_bits) {
  mpfr_init2(value_, checked_precision(precision_bits));
  mpfr_set_zero(value_, 1);
}

Real::Real(double value, int precision_bits) {
  mpfr_init2(value_, checked_precision(precision_bits));
  mpfr_set_d(value_, value, kRnd);
}

Real::Real(const mpq_class& value, int precision_bits) {
  mpfr_init2(value_, checked_precision(precision_bits));
  mpfr_set_q(value_, value.get_mpq_t(), kRnd);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, kRnd);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, kRnd);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

double Real::to_double() const { return mpfr_get_d(value_, kRnd); }

std::string Real::to_string(int digits) const {
  if (digits <= 0) digits = static_cast<int>(precision() * 0.30103) + 1;
  if (mpfr_zero_p(value_)) return "0";
  char* raw = nullptr;
  const std::string fmt = "%." + std::to_string(digits) + "Rg";
  if (mpfr_asprintf(&raw, fmt.c_str(), value_) < 0) throw std::runtime_error("mpfr_asprintf failed");
  std::unique_ptr<char, decltype(&mpfr_free_str)> holder(raw, &mpfr_free_str);
  return std::string(raw);
}

Real Real::pi(int precision_bits) {
  Real r(precision_bits);
  mpfr_const_pi(r.value_, kRnd);
  return r;
}

Real operator+(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_add(r.value_, a.value_, b.value_, kRnd);
  return r;
}
Real operator-(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_sub(r.value_, a.value_, b.value_, kRnd);
  return r;
}
Real operator*(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_mul(r.value_, a.value_, b.value_, kRnd);
  return r;
}
Real operator/(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_div(r.value_, a.value_, b.value_, kRnd);
  return r;
}
Real operator-(const Real& a) {
  Real r(a.precision());
  mpfr_neg(r.value_, a.value_, kRnd);
  return r;
}
Real sqrt(const Real& a) {
  Real r(a.precision());
  mpfr_sqrt(r.value_, a.value_, kRnd);
  return r;
}
Real abs(const Real& a) {
  Real r(a.precision());
  mpfr_abs(r.value_, a.value_, kRnd);
  return r;
}
Real hypot(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_hypot(r.value_, a.value_, b.value_, kRnd);
  return r;
}
Real cos(const Real& a) {
  Real r(a.precision());
  mpfr_cos(r.value_, a.value_, kRnd);
  return r;
}
Real sin(const Real& a) {
  Real r(a.precision());
  mpfr_sin(r.value_, a.value_, kRnd);
  return r;
}
Real ldexp(const Real& a, long exponent) {
  Real r(a.precision());
  mpfr_mul_2si(r.value_, a.value_, exponent, kRnd);
  return r;
}

ComplexApprox::ComplexApprox(int precision_bits) : re_(precision_bits), im_(precision_bits) {}

ComplexApprox::ComplexApprox(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}

ComplexApprox::ComplexApprox(double re, double im, int precision_bits)
    : re_(re, precision_bits), im_(im, precision_bits) {}

int ComplexApprox::precision() const { return std::max(re_.precision(), im_.precision()); }

ComplexApprox ComplexApprox::root_of_unity(std::int64_t num, std::uint64_t den, int precision_bits) {
  if (den == 0) throw InvalidParameter("root of unity with zero order");
  const auto d = static_cast<std::int64_t>(den);
  std::int64_t k = num % d;
  if (k < 0) k += d;
  // Exact values on the axes keep products of roots free of tiny residues.
  if (k == 0) return ComplexApprox(1.0, 0.0, precision_bits);
  if (2 * k == d) return ComplexApprox(-1.0, 0.0, precision_bits);
  if (4 * k == d) return ComplexApprox(0.0, 1.0, precision_bits);
  if (4 * k == 3 * d) return ComplexApprox(0.0, -1.0, precision_bits);
  // Evaluate at a few guard bits so the rounded result is correct to the
  // target precision.
  const int work = precision_bits + 16;
  Real angle = Real::pi(work) * Real(mpq_class(2 * k, d), work);
  Real c(precision_bits), s(precision_bits);
  mpfr_sin_cos(s.get(), c.get(), angle.get(), kRnd);
  return ComplexApprox(std::move(c), std::move(s));
}

ComplexApprox ComplexApprox::from_rational(const mpq_class& value, int precision_bits) {
  return ComplexApprox(Real(value, precision_bits), Real(precision_bits));
}

Real ComplexApprox::abs() const { return hypot(re_, im_); }

ComplexApprox ComplexApprox::conj() const { return ComplexApprox(re_, -im_); }

ComplexApprox ComplexApprox::pow(std::uint64_t e) const {
  ComplexApprox result(1.0, 0.0, precision());
  ComplexApprox base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

ComplexApprox ComplexApprox::inverse() const {
  const Real norm = re_ * re_ + im_ * im_;
  if (norm.is_zero()) throw DivisionByZero("inverse of complex zero");
  return ComplexApprox(re_ / norm, -im_ / norm);
}

std::complex<double> ComplexApprox::to_std() const { return {re_.to_double(), im_.to_double()}; }

std::string ComplexApprox::to_string(int digits) const {
  std::string im = im_.to_string(digits);
  if (im.front() == '-') return re_.to_string(digits) + " - " + im.substr(1) + "i";
  return re_.to_string(digits) + " + " + im + "i";
}

ComplexApprox operator+(const ComplexApprox& a, const ComplexApprox& b) {
  return ComplexApprox(a.re_ + b.re_, a.im_ + b.im_);
}
ComplexApprox operator-(const ComplexApprox& a, const ComplexApprox& b) {
  return ComplexApprox(a.re_ - b.re_, a.im_ - b.im_);
}
ComplexApprox operator*(const ComplexApprox& a, const ComplexApprox& b) {
  return ComplexApprox(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}
ComplexApprox operator*(const ComplexApprox& a, const Real& b) { return ComplexApprox(a.re_ * b, a.im_ * b); }
ComplexApprox operator/(const ComplexApprox& a, const ComplexApprox& b) { return a * b.inverse(); }
ComplexApprox operator-(const ComplexApprox& a) { return ComplexApprox(-a.re_, -a.im_); }

double relative_difference(const ComplexApprox& a, const ComplexApprox& b) {
  const Real diff = (a - b).abs();
  Real scale = a.abs();
  const Real sb = b.abs();
  if (scale < sb) scale = sb;
  if (scale.is_zero()) return diff.is_zero() ? 0.0 : diff.to_double();
  return (diff / scale).to_double();
}

bool approx_equal(const ComplexApprox& a, const ComplexApprox& b, double rel_tol, double abs_floor) {
  const Real diff = (a - b).abs();
  if (diff.to_double() <= abs_floor) return true;
  return relative_difference(a, b) <= rel_tol;
}

int default_precision_bits() {
  if (const char* env = std::getenv("CYCLOMAT_PRECISION")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= kMinPrecisionBits && v <= 1 << 20) return static_cast<int>(v);
  }
  return kDefaultPrecisionBits;
}

}  // namespace cyclomat
