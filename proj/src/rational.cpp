#include "nilt/rational.hpp"

namespace nilt {

mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Real to_real(const mpq_class& q, mpfr_prec_t bits) {
  Real r = Real::with_bits(bits);
  mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real to_real(const mpz_class& z, mpfr_prec_t bits) {
  Real r = Real::with_bits(bits);
  mpfr_set_z(r.raw(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}

std::string to_string(const mpq_class& q) {
  if (q.get_den() == 1) {
    return q.get_num().get_str();
  }
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpfr_prec_t magnitude_bits(const mpq_class& q) {
  mpz_class m;
  mpz_cdiv_q(m.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  m = abs(m) + 1;
  return static_cast<mpfr_prec_t>(mpz_sizeinbase(m.get_mpz_t(), 2));
}

}  // namespace nilt
