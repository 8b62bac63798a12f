#include "nilt/inverters.hpp"

#include <algorithm>
#include <cmath>

namespace nilt {

std::string method_name(Method m) {
  switch (m) {
    case Method::Stehfest: return "stehfest";
    case Method::Gaver: return "gaver";
    case Method::SalzerGaver: return "salzer_gaver";
    case Method::Fourier: return "fourier";
    case Method::Talbot: return "talbot";
  }
  return "unknown";
}

Method method_from_name(const std::string& name) {
  if (name == "stehfest") return Method::Stehfest;
  if (name == "gaver") return Method::Gaver;
  if (name == "salzer_gaver" || name == "salzer-gaver") return Method::SalzerGaver;
  if (name == "fourier") return Method::Fourier;
  if (name == "talbot") return Method::Talbot;
  throw InvalidParameterError("unknown method \"" + name + "\"");
}

StehfestWeights stehfest_weights(int n_weights) {
  if (n_weights < 2 || n_weights % 2 != 0) {
    throw InvalidParameterError("Stehfest N must be even and >= 2, got " +
                                std::to_string(n_weights));
  }
  const unsigned long half = static_cast<unsigned long>(n_weights) / 2;
  StehfestWeights w;
  w.terms = n_weights;
  w.coefficients.reserve(static_cast<size_t>(n_weights));
  for (unsigned long j = 1; j <= static_cast<unsigned long>(n_weights); ++j) {
    mpq_class sum(0);
    const unsigned long k_lo = (j + 1) / 2;
    const unsigned long k_hi = std::min(j, half);
    for (unsigned long k = k_lo; k <= k_hi; ++k) {
      mpz_class num;
      mpz_ui_pow_ui(num.get_mpz_t(), k, half);
      num *= factorial(2 * k);
      mpz_class den = factorial(half - k) * factorial(k) * factorial(k - 1) *
                      factorial(j - k) * factorial(2 * k - j);
      sum += mpq_class(num, den);
    }
    sum.canonicalize();
    if ((half + j) % 2 != 0) sum = -sum;
    w.coefficients.push_back(std::move(sum));
  }
  return w;
}

std::vector<mpq_class> salzer_weights(int n) {
  if (n < 1) {
    throw InvalidParameterError("Salzer order must be >= 1, got " +
                                std::to_string(n));
  }
  std::vector<mpq_class> mu;
  mu.reserve(static_cast<size_t>(n) + 1);
  for (unsigned long k = 0; k <= static_cast<unsigned long>(n); ++k) {
    mpz_class num;
    mpz_ui_pow_ui(num.get_mpz_t(), k + 1, static_cast<unsigned long>(n));
    mpq_class m(num, factorial(k) * factorial(static_cast<unsigned long>(n) - k));
    m.canonicalize();
    if ((static_cast<unsigned long>(n) + k) % 2 != 0) m = -m;
    mu.push_back(std::move(m));
  }
  return mu;
}

namespace {

void require_positive_t(const Real& t) {
  if (t.sign() <= 0 || !t.is_finite()) {
    throw DomainError("inversion requires t > 0");
  }
}

mpfr_prec_t guard_for(const mpq_class& coefficient_sum) {
  return 64 + magnitude_bits(coefficient_sum);
}

/// Gaver functional accumulated at a raw working precision.
Real gaver_sum_bits(const TransformFn& F, const Real& t, int n,
                    mpfr_prec_t work) {
  const unsigned long un = static_cast<unsigned long>(n);
  Real ln2 = const_ln2_bits(work);
  Real tw = Real::with_bits(work);
  mpfr_set(tw.raw(), t.raw(), MPFR_RNDN);
  Real a = ln2 / tw;

  Real acc = Real::with_bits(work);
  for (unsigned long k = 0; k <= un; ++k) {
    mpz_class c = binomial(un, k);
    if (k % 2 != 0) c = -c;
    Complex s(a * static_cast<long>(k + un));
    acc += to_real(c, work) * F(s).re();
  }
  mpz_class prefactor = factorial(2 * un) / (factorial(un) * factorial(un - 1));
  return acc * to_real(prefactor, work) * a;
}

}  // namespace

Real stehfest_invert(const TransformFn& F, const Real& t, int n_weights,
                     const PrecisionContext& ctx) {
  require_positive_t(t);
  StehfestWeights w = stehfest_weights(n_weights);

  mpq_class abs_sum(0);
  for (const auto& c : w.coefficients) abs_sum += abs(c);
  const mpfr_prec_t work = ctx.binary_precision() + guard_for(abs_sum);

  Real ln2 = const_ln2_bits(work);
  Real tw = Real::with_bits(work);
  mpfr_set(tw.raw(), t.raw(), MPFR_RNDN);
  Real a = ln2 / tw;

  Real acc = Real::with_bits(work);
  for (int j = 1; j <= n_weights; ++j) {
    Complex s(a * j);
    acc += to_real(w.coefficients[static_cast<size_t>(j - 1)], work) * F(s).re();
  }
  return Real(ctx, acc * a);
}

Real gaver_functional(const TransformFn& F, const Real& t, int n,
                      const PrecisionContext& ctx) {
  if (n < 1) {
    throw InvalidParameterError("Gaver order must be >= 1, got " +
                                std::to_string(n));
  }
  require_positive_t(t);
  // (2n)!/(n!(n-1)!) 2^n bounds the alternating sum's coefficient mass.
  mpz_class bound = factorial(2 * static_cast<unsigned long>(n));
  bound /= factorial(static_cast<unsigned long>(n)) *
           factorial(static_cast<unsigned long>(n) - 1);
  mpz_class two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(n));
  const mpfr_prec_t work =
      ctx.binary_precision() + guard_for(mpq_class(bound * two_n));
  return Real(ctx, gaver_sum_bits(F, t, n, work));
}

Real salzer_gaver_invert(const TransformFn& F, const Real& t, int n,
                         const PrecisionContext& ctx) {
  if (n < 1) {
    throw InvalidParameterError("Salzer-Gaver order must be >= 1, got " +
                                std::to_string(n));
  }
  require_positive_t(t);
  std::vector<mpq_class> mu = salzer_weights(n);

  // Bound the total coefficient mass across the nested sums.
  mpq_class mass(0);
  for (int k = 0; k <= n; ++k) {
    unsigned long m = static_cast<unsigned long>(k) + 1;
    mpz_class gaver_mass = factorial(2 * m) / (factorial(m) * factorial(m - 1));
    mpz_class two_m;
    mpz_ui_pow_ui(two_m.get_mpz_t(), 2, m);
    mass += abs(mu[static_cast<size_t>(k)]) * mpq_class(gaver_mass * two_m);
  }
  const mpfr_prec_t work = ctx.binary_precision() + guard_for(mass);

  // Salzer means applied to the shifted Gaver sequence S_k = f_{k+1}.
  Real acc = Real::with_bits(work);
  for (int k = 0; k <= n; ++k) {
    acc += to_real(mu[static_cast<size_t>(k)], work) *
           gaver_sum_bits(F, t, k + 1, work);
  }
  return Real(ctx, acc);
}

Real fourier_invert(const TransformFn& F, const Real& t, int terms,
                    const Real& a, const PrecisionContext& ctx,
                    FourierDamping damping) {
  if (terms < 0) {
    throw InvalidParameterError("Fourier term count must be >= 0, got " +
                                std::to_string(terms));
  }
  require_positive_t(t);
  if (a.sign() <= 0) {
    throw InvalidParameterError("Fourier damping parameter a must be > 0");
  }
  const mpfr_prec_t work = ctx.binary_precision() + 32;
  Real tw = Real::with_bits(work);
  mpfr_set(tw.raw(), t.raw(), MPFR_RNDN);
  Real aw = Real::with_bits(work);
  mpfr_set(aw.raw(), a.raw(), MPFR_RNDN);

  Real u = damping == FourierDamping::OverT ? aw / tw : aw / (2 * tw);
  Real pi_over_t = const_pi_bits(work) / tw;

  Real acc = F(Complex(u)).re() / 2;
  for (int k = 1; k <= terms; ++k) {
    Real term = F(Complex(u, pi_over_t * k)).re();
    acc += (k % 2 != 0) ? -term : term;
  }
  return Real(ctx, acc * exp(u * tw) / tw);
}

namespace {

long decimal_digits_of_bits(mpfr_prec_t bits) {
  constexpr long double kLog10Of2 = 0.30102999566398119521373889472449303L;
  long d = static_cast<long>(static_cast<long double>(bits) * kLog10Of2);
  return d < 1 ? 1 : d;
}

bool near_origin(const Complex& z) {
  long digits = decimal_digits_of_bits(z.precision());
  Real radius = pow10_bits(z.precision(), -(digits / 4));
  return abs(z) < radius;
}

}  // namespace

Complex talbot_map(const Complex& z) {
  const mpfr_prec_t p = z.precision();
  if (near_origin(z)) {
    // z/(1 - e^-z) = 1 + z/2 + z^2/12 - z^4/720 + z^6/30240 - ...
    Complex z2 = z * z;
    Complex acc(Real::from_long(p, 1));
    acc += z / 2;
    acc += z2 / 12;
    acc -= z2 * z2 / 720;
    acc += z2 * z2 * z2 / 30240;
    return acc;
  }
  Complex denom = Complex(Real::from_long(p, 1)) - exp(-z);
  if (denom.is_zero()) {
    throw DomainError("Talbot map endpoint: 1 - e^-z vanished away from 0");
  }
  return z / denom;
}

Complex talbot_map_deriv(const Complex& z) {
  const mpfr_prec_t p = z.precision();
  if (near_origin(z)) {
    // s'(z) = 1/2 + z/6 - z^3/180 + z^5/5040 - ...
    Complex z2 = z * z;
    Complex acc(Real::from_double(p, 0.5));
    acc += z / 6;
    acc -= z * z2 / 180;
    acc += z * z2 * z2 / 5040;
    return acc;
  }
  Complex one(Real::from_long(p, 1));
  Complex emz = exp(-z);
  Complex denom = one - emz;
  if (denom.is_zero()) {
    throw DomainError("Talbot map endpoint: 1 - e^-z vanished away from 0");
  }
  return (one - (one + z) * emz) / (denom * denom);
}

Complex talbot_sum(const TransformFn& F, const Real& t, int nodes,
                   const PrecisionContext& ctx, double contour_scale) {
  if (nodes < 3 || nodes % 2 == 0) {
    throw InvalidParameterError("Talbot node count must be odd and >= 3, got " +
                                std::to_string(nodes));
  }
  if (!(contour_scale > 0)) {
    throw InvalidParameterError("Talbot contour scale must be > 0");
  }
  require_positive_t(t);
  const mpfr_prec_t work = ctx.binary_precision() + 32;
  Real tw = Real::with_bits(work);
  mpfr_set(tw.raw(), t.raw(), MPFR_RNDN);
  Real two_pi = 2 * const_pi_bits(work);
  const bool scaled = contour_scale != 1.0;
  Real scale = Real::from_double(work, contour_scale);

  Complex acc = Complex::with_bits(work);
  for (int j = 1; j < nodes; ++j) {
    // w_j = 2 pi (2j - n)/n; never 0 for odd n.
    Real w = two_pi * (2 * j - nodes) / nodes;
    Complex z = Complex::i_times(w);
    Complex s = talbot_map(z);
    Complex ds = talbot_map_deriv(z);
    if (scaled) {
      s = s * scale;
      ds = ds * scale;
    }
    acc += F(s) * exp(s * tw) * ds;
  }
  acc = acc * Real::from_long(work, 2) / nodes;
  return Complex(ctx, acc);
}

Real talbot_invert(const TransformFn& F, const Real& t, int nodes,
                   const PrecisionContext& ctx, double contour_scale) {
  return talbot_sum(F, t, nodes, ctx, contour_scale).re();
}

long MethodConfig::default_digits(Method method, int terms) {
  long d;
  switch (method) {
    case Method::Stehfest:
    case Method::Gaver:
    case Method::SalzerGaver:
      d = static_cast<long>(std::ceil(1.8 * terms));
      break;
    case Method::Fourier:
    case Method::Talbot:
      d = 2L * terms;
      break;
    default:
      d = kMinDecimalDigits;
  }
  return std::max(d, kMinDecimalDigits);
}

long MethodConfig::effective_digits() const {
  if (digits > 0) return std::max(digits, kMinDecimalDigits);
  return default_digits(method, terms);
}

void MethodConfig::validate() const {
  switch (method) {
    case Method::Stehfest:
      if (terms < 2 || terms % 2 != 0) {
        throw InvalidParameterError("Stehfest N must be even and >= 2");
      }
      break;
    case Method::Talbot:
      if (terms < 3 || terms % 2 == 0) {
        throw InvalidParameterError("Talbot n must be odd and >= 3");
      }
      if (!(contour_scale > 0)) {
        throw InvalidParameterError("Talbot contour scale must be > 0");
      }
      break;
    case Method::Gaver:
    case Method::SalzerGaver:
      if (terms < 1) {
        throw InvalidParameterError("order must be >= 1");
      }
      break;
    case Method::Fourier:
      if (terms < 0) {
        throw InvalidParameterError("Fourier term count must be >= 0");
      }
      if (fourier_a <= 0) {
        throw InvalidParameterError("Fourier damping parameter a must be > 0");
      }
      break;
  }
  if (digits != 0 && digits < kMinDecimalDigits) {
    throw InvalidParameterError("digits below the floor of " +
                                std::to_string(kMinDecimalDigits));
  }
}

Real invert(const TransformFn& F, const Real& t, const MethodConfig& config) {
  config.validate();
  PrecisionContext ctx(config.effective_digits());
  switch (config.method) {
    case Method::Stehfest:
      return stehfest_invert(F, t, config.terms, ctx);
    case Method::Gaver:
      return gaver_functional(F, t, config.terms, ctx);
    case Method::SalzerGaver:
      return salzer_gaver_invert(F, t, config.terms, ctx);
    case Method::Fourier:
      return fourier_invert(F, t, config.terms,
                            Real(ctx, config.fourier_a), ctx, config.damping);
    case Method::Talbot:
      return talbot_invert(F, t, config.terms, ctx, config.contour_scale);
  }
  throw InvalidParameterError("unhandled method");
}

}  // namespace nilt
