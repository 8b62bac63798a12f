#include <doctest.h>

#include "test_util.hpp"

using namespace nilt;
using namespace nilt::test;

namespace {

// Independently computed reference digits (series summation cross-checked
// against published tables).
constexpr std::string_view kGammaDigits =
    "0.577215664901532860606512090082402431042159335939923598805767";
constexpr std::string_view kPiDigits =
    "3.14159265358979323846264338327950288419716939937510582097494";
constexpr std::string_view kLn2Digits =
    "0.69314718055994530941723212145817656807550013436025525412068";

}  // namespace

TEST_CASE("context maps decimal digits to binary precision") {
  CHECK(PrecisionContext(110).binary_precision() == 366);
  CHECK(PrecisionContext(16).binary_precision() == 54);
  CHECK(PrecisionContext(110).decimal_digits() == 110);
  CHECK_THROWS_AS(PrecisionContext(10), InvalidParameterError);
  CHECK_THROWS_AS(PrecisionContext(0), InvalidParameterError);
  CHECK_THROWS_AS(PrecisionContext(-5), InvalidParameterError);
}

TEST_CASE("constants match reference digits at full precision") {
  auto ctx = ctx110();
  Real gamma_ref = Real::from_string(ctx, kGammaDigits);
  Real pi_ref = Real::from_string(ctx, kPiDigits);
  Real ln2_ref = Real::from_string(ctx, kLn2Digits);
  CHECK(within_pow10(const_euler_gamma(ctx), gamma_ref, -58));
  CHECK(within_pow10(const_pi(ctx), pi_ref, -57));
  CHECK(within_pow10(const_ln2(ctx), ln2_ref, -58));
}

TEST_CASE("round-trip through a wider context is exact") {
  auto lo = ctx16();
  auto hi = ctx110();
  TestRng rng(2024);
  for (int i = 0; i < 100; ++i) {
    Real r(lo, rng.uniform(-1e6, 1e6));
    Real widened(hi, r);
    Real back(lo, widened);
    CHECK(back == r);
  }
}

TEST_CASE("arithmetic takes the wider operand precision") {
  Real a(ctx16(), 3.0);
  Real b(ctx110(), 2.0);
  CHECK((a * b).precision() == 366);
  CHECK((a + b).precision() == 366);
  CHECK((b / a).precision() == 366);
  CHECK(a.precision() == 54);
}

TEST_CASE("real math basics") {
  auto ctx = ctx50();
  Real two(ctx, 2L);
  CHECK(sqrt(Real(ctx, 4.0)) == two);
  CHECK(pow_int(two, 5) == Real(ctx, 32.0));
  CHECK(pow_int(two, -2) == Real(ctx, 0.25));
  CHECK(within_pow10(log(exp(two)), two, -47));
  CHECK_THROWS_AS(sqrt(Real(ctx, -1.0)), DomainError);
  CHECK_THROWS_AS(log(Real(ctx)), DomainError);
  CHECK_THROWS_AS(pow_int(Real(ctx), -1), DomainError);
  CHECK(max(Real(ctx, 1.0), Real(ctx, 2.0)) == two);
  CHECK(abs(Real(ctx, -7.0)) == Real(ctx, 7.0));
}

TEST_CASE("string conversion round trips") {
  auto ctx = ctx50();
  Real x = Real::from_string(ctx, "2.5e-1");
  CHECK(x == Real(ctx, 0.25));
  CHECK_THROWS_AS(Real::from_string(ctx, "abc"), InvalidParameterError);
  CHECK_THROWS_AS(Real::from_string(ctx, "1.5x"), InvalidParameterError);
  CHECK(Real(ctx, 42L).to_string(5) == "42");
}

TEST_CASE("pow10 tolerances") {
  auto ctx = ctx50();
  CHECK(pow10(ctx, 2) == Real(ctx, 100.0));
  CHECK(pow10(ctx, 0) == Real(ctx, 1.0));
  CHECK(pow10(ctx, -1) > Real(ctx));
}
