#include "nilt/complex.hpp"

#include <algorithm>

namespace nilt {

namespace {

long bits_to_decimal_digits(mpfr_prec_t bits) {
  constexpr long double kLog10Of2 = 0.30102999566398119521373889472449303L;
  long d = static_cast<long>(static_cast<long double>(bits) * kLog10Of2);
  return d < 1 ? 1 : d;
}

}  // namespace

Complex::Complex(Real re) : re_(std::move(re)), im_(Real::with_bits(re_.precision())) {}

Complex::Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}

Complex::Complex(const PrecisionContext& ctx, double re, double im)
    : re_(ctx, re), im_(ctx, im) {}

Complex::Complex(const PrecisionContext& ctx, const Complex& value)
    : re_(ctx, value.re_), im_(ctx, value.im_) {}

Complex Complex::with_bits(mpfr_prec_t bits) {
  return Complex(Real::with_bits(bits), Real::with_bits(bits));
}

Complex Complex::i_times(Real im) {
  Real re = Real::with_bits(im.precision());
  return Complex(std::move(re), std::move(im));
}

Complex Complex::conj() const { return Complex(re_, -im_); }

Complex& Complex::operator+=(const Complex& rhs) { return *this = *this + rhs; }
Complex& Complex::operator-=(const Complex& rhs) { return *this = *this - rhs; }
Complex& Complex::operator*=(const Complex& rhs) { return *this = *this * rhs; }
Complex& Complex::operator/=(const Complex& rhs) { return *this = *this / rhs; }

Complex operator-(const Complex& z) { return Complex(-z.re(), -z.im()); }

Complex operator+(const Complex& a, const Complex& b) {
  return Complex(a.re() + b.re(), a.im() + b.im());
}

Complex operator-(const Complex& a, const Complex& b) {
  return Complex(a.re() - b.re(), a.im() - b.im());
}

Complex operator*(const Complex& a, const Complex& b) {
  return Complex(a.re() * b.re() - a.im() * b.im(),
                 a.re() * b.im() + a.im() * b.re());
}

Complex operator/(const Complex& a, const Complex& b) {
  Real denom = b.re() * b.re() + b.im() * b.im();
  if (denom.is_zero()) {
    throw DomainError("complex division by zero");
  }
  return Complex((a.re() * b.re() + a.im() * b.im()) / denom,
                 (a.im() * b.re() - a.re() * b.im()) / denom);
}

Complex operator*(const Complex& a, const Real& b) {
  return Complex(a.re() * b, a.im() * b);
}

Complex operator*(const Real& a, const Complex& b) { return b * a; }

Complex operator/(const Complex& a, const Real& b) {
  return Complex(a.re() / b, a.im() / b);
}

Complex operator/(const Complex& a, long b) {
  return Complex(a.re() / b, a.im() / b);
}

Complex operator/(long a, const Complex& b) {
  Real num = Real::from_long(b.precision(), a);
  return Complex(std::move(num)) / b;
}

bool operator==(const Complex& a, const Complex& b) noexcept {
  return a.re() == b.re() && a.im() == b.im();
}

bool operator!=(const Complex& a, const Complex& b) noexcept {
  return !(a == b);
}

Real abs(const Complex& z) { return hypot(z.re(), z.im()); }

Real arg(const Complex& z) {
  if (z.im().is_zero()) {
    // Pin the cut: a negative real (even with a -0 imaginary part) maps to +pi.
    mpfr_prec_t p = z.precision();
    if (z.re().sign() < 0) return const_pi_bits(p);
    return Real::with_bits(p);
  }
  return atan2(z.im(), z.re());
}

Complex exp(const Complex& z) {
  Real mag = exp(z.re());
  Real c = cos(z.im());
  Real s = sin(z.im());
  return Complex(mag * c, mag * s);
}

Complex log(const Complex& z) {
  if (z.is_zero()) {
    throw DomainError("log of complex zero");
  }
  return Complex(log(abs(z)), arg(z));
}

Complex sqrt(const Complex& z) {
  mpfr_prec_t p = z.precision();
  if (z.is_zero()) return Complex::with_bits(p);
  Real m = sqrt(abs(z));
  Real half_arg = arg(z) / 2;
  return Complex(m * cos(half_arg), m * sin(half_arg));
}

Complex sin(const Complex& z) {
  return Complex(sin(z.re()) * cosh(z.im()), cos(z.re()) * sinh(z.im()));
}

Complex cos(const Complex& z) {
  return Complex(cos(z.re()) * cosh(z.im()), -(sin(z.re()) * sinh(z.im())));
}

Complex sinh(const Complex& z) {
  return Complex(sinh(z.re()) * cos(z.im()), cosh(z.re()) * sin(z.im()));
}

Complex cosh(const Complex& z) {
  return Complex(cosh(z.re()) * cos(z.im()), sinh(z.re()) * sin(z.im()));
}

Complex pow_int(const Complex& base, long exponent) {
  mpfr_prec_t p = base.precision();
  if (exponent == 0) {
    return Complex(Real::from_long(p, 1));
  }
  if (base.is_zero()) {
    if (exponent < 0) throw DomainError("0 raised to a negative power");
    return Complex::with_bits(p);
  }
  unsigned long n = exponent < 0 ? -static_cast<unsigned long>(exponent)
                                 : static_cast<unsigned long>(exponent);
  Complex acc(Real::from_long(p, 1));
  Complex sq = base;
  while (n > 0) {
    if (n & 1) acc *= sq;
    if (n >>= 1) sq *= sq;
  }
  if (exponent < 0) {
    return 1 / acc;
  }
  return acc;
}

namespace {

Real round_to_bits(const Real& x, mpfr_prec_t bits) {
  Real r = Real::with_bits(bits);
  mpfr_set(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Complex widen(const Complex& z, mpfr_prec_t bits) {
  return Complex(round_to_bits(z.re(), bits), round_to_bits(z.im(), bits));
}

}  // namespace

Complex erf(const Complex& z, const PrecisionContext& ctx) {
  // The terms of the Maclaurin series peak near exp(|z|^2) before decaying;
  // the guard bits absorb that cancellation for the catalog's |z| <= ~5.
  mpfr_prec_t work = ctx.binary_precision() + 96;
  Complex zw = widen(z, work);
  Complex z2 = zw * zw;
  Real threshold = pow10_bits(work, -(ctx.decimal_digits() + 5));

  Complex power = zw;  // (-1)^n z^(2n+1) / n!
  Complex sum = zw;    // n = 0 term
  constexpr long kMaxTerms = 100000;
  for (long n = 1; n <= kMaxTerms; ++n) {
    power = -(power * z2 / n);
    Complex term = power / (2 * n + 1);
    sum += term;
    if (abs(term) < threshold) {
      Complex r = sum * (2 / sqrt(const_pi_bits(work)));
      return widen(r, ctx.binary_precision());
    }
  }
  throw ConvergenceError("erf series did not converge within " +
                         std::to_string(kMaxTerms) + " terms");
}

Complex erf(const Complex& z) {
  long digits = bits_to_decimal_digits(z.precision());
  if (digits < kMinDecimalDigits) digits = kMinDecimalDigits;
  return erf(z, PrecisionContext(digits));
}

}  // namespace nilt
