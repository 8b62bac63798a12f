#pragma once

#include "nilt/real.hpp"

namespace nilt {

/// Complex value over two Reals sharing one working precision. The branch
/// cut for sqrt/log sits on the negative real axis with the argument taken
/// in (-pi, pi].
class Complex {
public:
  Complex() = default;
  explicit Complex(Real re);
  Complex(Real re, Real im);
  Complex(const PrecisionContext& ctx, double re, double im = 0.0);
  Complex(const PrecisionContext& ctx, const Complex& value);

  static Complex with_bits(mpfr_prec_t bits);
  static Complex i_times(Real im);  // 0 + im*i at im's precision

  const Real& re() const noexcept { return re_; }
  const Real& im() const noexcept { return im_; }
  Real& re() noexcept { return re_; }
  Real& im() noexcept { return im_; }

  mpfr_prec_t precision() const noexcept {
    return std::max(re_.precision(), im_.precision());
  }
  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const noexcept { return im_.is_zero(); }

  Complex conj() const;

  Complex& operator+=(const Complex& rhs);
  Complex& operator-=(const Complex& rhs);
  Complex& operator*=(const Complex& rhs);
  Complex& operator/=(const Complex& rhs);

private:
  Real re_, im_;
};

Complex operator-(const Complex& z);
Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);  // DomainError on /0
Complex operator*(const Complex& a, const Real& b);
Complex operator*(const Real& a, const Complex& b);
Complex operator/(const Complex& a, const Real& b);
Complex operator/(const Complex& a, long b);
Complex operator/(long a, const Complex& b);
bool operator==(const Complex& a, const Complex& b) noexcept;
bool operator!=(const Complex& a, const Complex& b) noexcept;

Real abs(const Complex& z);
/// Principal argument in (-pi, pi]; arg of a negative real is +pi.
Real arg(const Complex& z);

Complex exp(const Complex& z);
/// Principal logarithm; DomainError at z = 0.
Complex log(const Complex& z);
/// Principal square root (non-negative real part; i for -1).
Complex sqrt(const Complex& z);
Complex sin(const Complex& z);
Complex cos(const Complex& z);
Complex sinh(const Complex& z);
Complex cosh(const Complex& z);
Complex pow_int(const Complex& base, long exponent);

/// erf by Maclaurin series, truncated once a term drops below
/// 10^-(digits+5); runs with internal guard bits so catalog-sized arguments
/// (|z| <= ~5) come out accurate to the full context precision.
Complex erf(const Complex& z, const PrecisionContext& ctx);
/// Same, with the target digit count inferred from z's precision.
Complex erf(const Complex& z);

}  // namespace nilt
