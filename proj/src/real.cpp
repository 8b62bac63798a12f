#include "nilt/real.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

namespace nilt {

namespace {

constexpr long double kLog2Of10 = 3.3219280948873623478703194294893901759L;

mpfr_prec_t clamp_prec(mpfr_prec_t p) {
  return p < MPFR_PREC_MIN ? MPFR_PREC_MIN : p;
}

}  // namespace

mpfr_prec_t decimal_to_binary_precision(long decimal_digits) noexcept {
  return static_cast<mpfr_prec_t>(
      std::ceil(static_cast<long double>(decimal_digits) * kLog2Of10));
}

PrecisionContext::PrecisionContext(long decimal_digits)
    : decimal_digits_(decimal_digits),
      binary_precision_(decimal_to_binary_precision(decimal_digits)) {
  if (decimal_digits < kMinDecimalDigits) {
    throw InvalidParameterError(
        "precision of " + std::to_string(decimal_digits) +
        " decimal digits is below the floor of " +
        std::to_string(kMinDecimalDigits));
  }
}

Real::Real() {
  mpfr_init2(value_, decimal_to_binary_precision(kMinDecimalDigits));
  mpfr_set_zero(value_, 1);
}

Real::Real(const PrecisionContext& ctx) {
  mpfr_init2(value_, ctx.binary_precision());
  mpfr_set_zero(value_, 1);
}

Real::Real(const PrecisionContext& ctx, double value) {
  mpfr_init2(value_, ctx.binary_precision());
  mpfr_set_d(value_, value, MPFR_RNDN);
}

Real::Real(const PrecisionContext& ctx, long value) {
  mpfr_init2(value_, ctx.binary_precision());
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const PrecisionContext& ctx, const Real& value) {
  mpfr_init2(value_, ctx.binary_precision());
  mpfr_set(value_, value.value_, MPFR_RNDN);
}

Real Real::with_bits(mpfr_prec_t bits) {
  Real r;
  mpfr_set_prec(r.value_, clamp_prec(bits));
  mpfr_set_zero(r.value_, 1);
  return r;
}

Real Real::from_double(mpfr_prec_t bits, double value) {
  Real r = with_bits(bits);
  mpfr_set_d(r.value_, value, MPFR_RNDN);
  return r;
}

Real Real::from_long(mpfr_prec_t bits, long value) {
  Real r = with_bits(bits);
  mpfr_set_si(r.value_, value, MPFR_RNDN);
  return r;
}

Real Real::from_string(const PrecisionContext& ctx, std::string_view text) {
  return from_string_bits(ctx.binary_precision(), text);
}

Real Real::from_string_bits(mpfr_prec_t bits, std::string_view text) {
  Real r = with_bits(bits);
  std::string buf(text);
  char* end = nullptr;
  int rc = mpfr_strtofr(r.value_, buf.c_str(), &end, 10, MPFR_RNDN);
  (void)rc;
  if (end == buf.c_str() || *end != '\0') {
    throw InvalidParameterError("not a valid decimal literal: \"" + buf + "\"");
  }
  return r;
}

Real::Real(const Real& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) {
    mpfr_swap(value_, other.value_);
  }
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

std::string Real::to_string(long significant_digits) const {
  if (significant_digits < 1) significant_digits = 1;
  char* out = nullptr;
  mpfr_asprintf(&out, "%.*Rg", static_cast<int>(significant_digits), value_);
  std::string s(out);
  mpfr_free_str(out);
  return s;
}

namespace {

Real binary_result(const Real& a, const Real& b) {
  return Real::with_bits(std::max(a.precision(), b.precision()));
}

}  // namespace

Real& Real::operator+=(const Real& rhs) { return *this = *this + rhs; }
Real& Real::operator-=(const Real& rhs) { return *this = *this - rhs; }
Real& Real::operator*=(const Real& rhs) { return *this = *this * rhs; }
Real& Real::operator/=(const Real& rhs) { return *this = *this / rhs; }

Real operator-(const Real& x) {
  Real r = Real::with_bits(x.precision());
  mpfr_neg(r.value_, x.value_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, const Real& b) {
  Real r = binary_result(a, b);
  mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r = binary_result(a, b);
  mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r = binary_result(a, b);
  mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r = binary_result(a, b);
  mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, long b) {
  Real r = Real::with_bits(a.precision());
  mpfr_add_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, long b) {
  Real r = Real::with_bits(a.precision());
  mpfr_sub_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, long b) {
  Real r = Real::with_bits(a.precision());
  mpfr_mul_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, long b) {
  Real r = Real::with_bits(a.precision());
  mpfr_div_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}

Real operator*(long a, const Real& b) { return b * a; }

Real operator/(long a, const Real& b) {
  Real r = Real::with_bits(b.precision());
  mpfr_si_div(r.value_, a, b.value_, MPFR_RNDN);
  return r;
}

bool operator==(const Real& a, const Real& b) noexcept {
  return mpfr_equal_p(a.value_, b.value_) != 0;
}
bool operator!=(const Real& a, const Real& b) noexcept { return !(a == b); }
bool operator<(const Real& a, const Real& b) noexcept {
  return mpfr_less_p(a.value_, b.value_) != 0;
}
bool operator<=(const Real& a, const Real& b) noexcept {
  return mpfr_lessequal_p(a.value_, b.value_) != 0;
}
bool operator>(const Real& a, const Real& b) noexcept {
  return mpfr_greater_p(a.value_, b.value_) != 0;
}
bool operator>=(const Real& a, const Real& b) noexcept {
  return mpfr_greaterequal_p(a.value_, b.value_) != 0;
}

#define NILT_UNARY_MPFR(name, fn)                 \
  Real name(const Real& x) {                      \
    Real r = Real::with_bits(x.precision());      \
    fn(r.raw(), x.raw(), MPFR_RNDN);              \
    return r;                                     \
  }

NILT_UNARY_MPFR(abs, mpfr_abs)
NILT_UNARY_MPFR(exp, mpfr_exp)
NILT_UNARY_MPFR(sin, mpfr_sin)
NILT_UNARY_MPFR(cos, mpfr_cos)
NILT_UNARY_MPFR(sinh, mpfr_sinh)
NILT_UNARY_MPFR(cosh, mpfr_cosh)

#undef NILT_UNARY_MPFR

Real sqrt(const Real& x) {
  if (x.sign() < 0) {
    throw DomainError("sqrt of negative real " + x.to_string(8));
  }
  Real r = Real::with_bits(x.precision());
  mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real log(const Real& x) {
  if (x.sign() <= 0) {
    throw DomainError("log of non-positive real " + x.to_string(8));
  }
  Real r = Real::with_bits(x.precision());
  mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real atan2(const Real& y, const Real& x) {
  Real r = Real::with_bits(std::max(y.precision(), x.precision()));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real hypot(const Real& x, const Real& y) {
  Real r = Real::with_bits(std::max(y.precision(), x.precision()));
  mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

Real pow_int(const Real& base, long exponent) {
  if (base.is_zero() && exponent < 0) {
    throw DomainError("0 raised to a negative power");
  }
  Real r = Real::with_bits(base.precision());
  mpfr_pow_si(r.raw(), base.raw(), exponent, MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a >= b ? a : b; }

Real pow10_bits(mpfr_prec_t bits, long e) {
  Real r = Real::with_bits(bits);
  mpfr_set_si(r.raw(), 10, MPFR_RNDN);
  mpfr_pow_si(r.raw(), r.raw(), e, MPFR_RNDN);
  return r;
}

Real pow10(const PrecisionContext& ctx, long e) {
  return pow10_bits(ctx.binary_precision(), e);
}

Real const_pi_bits(mpfr_prec_t bits) {
  Real r = Real::with_bits(bits);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

Real const_euler_gamma_bits(mpfr_prec_t bits) {
  Real r = Real::with_bits(bits);
  mpfr_const_euler(r.raw(), MPFR_RNDN);
  return r;
}

Real const_ln2_bits(mpfr_prec_t bits) {
  Real r = Real::with_bits(bits);
  mpfr_const_log2(r.raw(), MPFR_RNDN);
  return r;
}

Real const_pi(const PrecisionContext& ctx) {
  return const_pi_bits(ctx.binary_precision());
}

Real const_euler_gamma(const PrecisionContext& ctx) {
  return const_euler_gamma_bits(ctx.binary_precision());
}

Real const_ln2(const PrecisionContext& ctx) {
  return const_ln2_bits(ctx.binary_precision());
}

}  // namespace nilt
