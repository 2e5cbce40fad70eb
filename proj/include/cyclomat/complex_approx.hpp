#pragma once

// Arbitrary-precision real and complex numbers on top of MPFR. Every value
// carries its own precision in bits; binary operations round to the larger
// precision of their operands.

#include <mpfr.h>

#include <complex>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace cyclomat {

inline constexpr int kDefaultPrecisionBits = 192;
inline constexpr int kMinPrecisionBits = 53;

class Real {
 public:
  explicit Real(int precision_bits = kDefaultPrecisionBits);
  Real(double value, int precision_bits);
  Real(const mpq_class& value, int precision_bits);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  int precision() const { return static_cast<int>(mpfr_get_prec(value_)); }
  double to_double() const;
  /// Decimal rendering with the given number of significant digits.
  std::string to_string(int digits = 0) const;
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }

  static Real pi(int precision_bits);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator-(const Real& a);
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.value_, b.value_) != 0; }

  friend Real sqrt(const Real& a);
  friend Real abs(const Real& a);
  friend Real hypot(const Real& a, const Real& b);
  friend Real cos(const Real& a);
  friend Real sin(const Real& a);
  friend Real ldexp(const Real& a, long exponent);

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

 private:
  mpfr_t value_;
};

/// Complex number at a fixed precision (bits).
class ComplexApprox {
 public:
  explicit ComplexApprox(int precision_bits = kDefaultPrecisionBits);
  ComplexApprox(Real re, Real im);
  ComplexApprox(double re, double im, int precision_bits);

  /// e^{2 pi i num / den}.
  static ComplexApprox root_of_unity(std::int64_t num, std::uint64_t den, int precision_bits);
  static ComplexApprox from_rational(const mpq_class& value, int precision_bits);

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  int precision() const;

  Real abs() const;
  ComplexApprox conj() const;
  ComplexApprox pow(std::uint64_t e) const;
  ComplexApprox inverse() const;
  std::complex<double> to_std() const;
  std::string to_string(int digits = 20) const;

  friend ComplexApprox operator+(const ComplexApprox& a, const ComplexApprox& b);
  friend ComplexApprox operator-(const ComplexApprox& a, const ComplexApprox& b);
  friend ComplexApprox operator*(const ComplexApprox& a, const ComplexApprox& b);
  friend ComplexApprox operator*(const ComplexApprox& a, const Real& b);
  friend ComplexApprox operator/(const ComplexApprox& a, const ComplexApprox& b);
  friend ComplexApprox operator-(const ComplexApprox& a);
  ComplexApprox& operator+=(const ComplexApprox& b) { return *this = *this + b; }
  ComplexApprox& operator*=(const ComplexApprox& b) { return *this = *this * b; }

 private:
  Real re_;
  Real im_;
};

/// |a - b| <= rel_tol * max(|a|, |b|), or |a - b| <= abs_floor when both
/// sides are essentially zero.
bool approx_equal(const ComplexApprox& a, const ComplexApprox& b, double rel_tol, double abs_floor = 1e-30);

/// |a - b| / max(|a|, |b|) as a double (0 when both vanish).
double relative_difference(const ComplexApprox& a, const ComplexApprox& b);

/// Precision from the CYCLOMAT_PRECISION environment variable, falling back
/// to kDefaultPrecisionBits.
int default_precision_bits();

}  // namespace cyclomat
