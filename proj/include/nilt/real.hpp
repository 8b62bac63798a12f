#pragma once

#include <mpfr.h>

#include <string>
#include <string_view>

#include "nilt/precision.hpp"

namespace nilt {

/// Arbitrary-precision real number backed by MPFR. A Real carries its binary
/// precision; binary operations produce results at the wider of the two
/// operand precisions, rounded to nearest. Values are immutable in practice:
/// every operation returns a fresh Real.
class Real {
public:
  Real();  // 0 at the 16-digit floor precision
  explicit Real(const PrecisionContext& ctx);
  Real(const PrecisionContext& ctx, double value);
  Real(const PrecisionContext& ctx, long value);
  Real(const PrecisionContext& ctx, const Real& value);  // re-round into ctx

  /// Zero at a raw binary precision; used for guard-digit accumulation.
  static Real with_bits(mpfr_prec_t bits);
  static Real from_double(mpfr_prec_t bits, double value);
  static Real from_long(mpfr_prec_t bits, long value);
  /// Parses a base-10 literal (optional fraction and exponent).
  static Real from_string(const PrecisionContext& ctx, std::string_view text);
  static Real from_string_bits(mpfr_prec_t bits, std::string_view text);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }
  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
  bool is_integer() const noexcept { return mpfr_integer_p(value_) != 0; }
  int sign() const noexcept { return mpfr_sgn(value_); }

  double to_double() const noexcept { return mpfr_get_d(value_, MPFR_RNDN); }
  long to_long() const noexcept { return mpfr_get_si(value_, MPFR_RNDN); }
  /// Rendered with `significant_digits` significant decimal digits (%Rg).
  std::string to_string(long significant_digits) const;

  mpfr_srcptr raw() const noexcept { return value_; }
  mpfr_ptr raw() noexcept { return value_; }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  friend Real operator-(const Real& x);
  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);

  friend Real operator+(const Real& a, long b);
  friend Real operator-(const Real& a, long b);
  friend Real operator*(const Real& a, long b);
  friend Real operator/(const Real& a, long b);
  friend Real operator*(long a, const Real& b);
  friend Real operator/(long a, const Real& b);

  friend bool operator==(const Real& a, const Real& b) noexcept;
  friend bool operator!=(const Real& a, const Real& b) noexcept;
  friend bool operator<(const Real& a, const Real& b) noexcept;
  friend bool operator<=(const Real& a, const Real& b) noexcept;
  friend bool operator>(const Real& a, const Real& b) noexcept;
  friend bool operator>=(const Real& a, const Real& b) noexcept;

private:
  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);  // DomainError for x < 0
Real exp(const Real& x);
Real log(const Real& x);  // DomainError for x <= 0
Real sin(const Real& x);
Real cos(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real atan2(const Real& y, const Real& x);
Real hypot(const Real& x, const Real& y);
Real pow_int(const Real& base, long exponent);  // DomainError for 0^negative
Real max(const Real& a, const Real& b);

/// 10^e at the context precision (e may be negative); handy for tolerances.
Real pow10(const PrecisionContext& ctx, long e);
Real pow10_bits(mpfr_prec_t bits, long e);

Real const_pi(const PrecisionContext& ctx);
Real const_euler_gamma(const PrecisionContext& ctx);
Real const_ln2(const PrecisionContext& ctx);
Real const_pi_bits(mpfr_prec_t bits);
Real const_euler_gamma_bits(mpfr_prec_t bits);
Real const_ln2_bits(mpfr_prec_t bits);

}  // namespace nilt
