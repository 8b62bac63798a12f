#pragma once

#include <gmpxx.h>

#include <string>

#include "nilt/real.hpp"

namespace nilt {

mpz_class factorial(unsigned long n);
mpz_class binomial(unsigned long n, unsigned long k);

/// Round an exact rational/integer into a binary working precision.
Real to_real(const mpq_class& q, mpfr_prec_t bits);
Real to_real(const mpz_class& z, mpfr_prec_t bits);

/// "num/den" in lowest terms, or just "num" for integers.
std::string to_string(const mpq_class& q);

/// Bits needed to represent |ceil(q)|; used to size guard precision for
/// weighted sums with large cancelling coefficients.
mpfr_prec_t magnitude_bits(const mpq_class& q);

}  // namespace nilt
