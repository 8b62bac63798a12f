#include <doctest.h>

#include "nilt/expr.hpp"
#include "nilt/inverters.hpp"
#include "test_util.hpp"

using namespace nilt;
using namespace nilt::test;

TEST_CASE("grammar examples") {
  auto ctx = ctx50();

  Expr e1 = Expr::parse("s/(s^2+1)^2");
  CHECK(within_pow10(e1.eval(Complex(ctx, 1.0), ctx),
                     Complex(ctx, 0.25), -47));

  try {
    Expr::parse("1/(s");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
    CHECK(e.expected().find(")") != std::string::npos);
    CHECK(e.found() == "end of input");
  }

  Expr e3 = Expr::parse("erf(2/sqrt(s))");
  Complex got = e3.eval(Complex(ctx, 4.0), ctx);
  Complex want = erf(Complex(ctx, 1.0), ctx);
  CHECK(within_pow10(got, want, -47));
}

TEST_CASE("expression evaluation spot checks") {
  auto ctx = ctx50();
  CHECK(within_pow10(Expr::parse("1/s^5").eval(Complex(ctx, 2.0), ctx),
                     Complex(ctx, 1.0 / 32.0), -47));
  CHECK(Expr::parse("ln(s)/s").eval(Complex(ctx, 1.0), ctx).is_zero());
  CHECK(within_pow10(Expr::parse("pi").eval(Complex(ctx, 1.0), ctx),
                     Complex(const_pi(ctx)), -47));
  CHECK(within_pow10(Expr::parse("gamma").eval(Complex(ctx, 1.0), ctx),
                     Complex(const_euler_gamma(ctx)), -47));
  CHECK(within_pow10(Expr::parse(" 1 + 2 * 3 ").eval(Complex(ctx, 1.0), ctx),
                     Complex(ctx, 7.0), -47));
  CHECK(within_pow10(Expr::parse("2.5e-1").eval(Complex(ctx, 1.0), ctx),
                     Complex(ctx, 0.25), -47));
  CHECK(within_pow10(Expr::parse(".5+1e1").eval(Complex(ctx, 1.0), ctx),
                     Complex(ctx, 10.5), -47));
}

TEST_CASE("unary minus binds looser than the power") {
  auto ctx = ctx50();
  CHECK(within_pow10(Expr::parse("-s^2").eval(Complex(ctx, 2.0), ctx),
                     Complex(ctx, -4.0), -47));
  CHECK(within_pow10(Expr::parse("s^-2").eval(Complex(ctx, 2.0), ctx),
                     Complex(ctx, 0.25), -47));
  // right associativity: 2^3^2 = 2^9
  CHECK(within_pow10(Expr::parse("2^3^2").eval(Complex(ctx, 1.0), ctx),
                     Complex(ctx, 512.0), -40));
}

TEST_CASE("integer powers take the multiplication path") {
  auto ctx = ctx110();
  // a point on the image of the Talbot contour
  Complex z = Complex::i_times(const_pi(ctx));
  Complex s = talbot_map(z);
  Complex cubed = Expr::parse("s^3").eval(s, ctx);
  CHECK(cubed == s * s * s);
  CHECK(cubed.im().sign() != 0);
}

TEST_CASE("parse failures carry positions, not crashes") {
  for (const char* text : {"", "1+", "(", "(1+2", "2**3", "s s", "1..2",
                           "sin", "sin(", "sin(1", "^2", "1e", "@", "foo(2)"}) {
    CHECK_THROWS_AS(Expr::parse(text), ParseError);
  }

  try {
    Expr::parse("foo(2)");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 1);
    CHECK(e.found().find("foo") != std::string::npos);
  }
}

TEST_CASE("evaluation failures carry positions") {
  auto ctx = ctx50();
  try {
    Expr::parse("1/(s-1)").eval(Complex(ctx, 1.0), ctx);
    FAIL("expected EvalError");
  } catch (const EvalError& e) {
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(Expr::parse("ln(s-1)").eval(Complex(ctx, 1.0), ctx),
                  EvalError);
  CHECK_THROWS_AS(Expr::parse("s^-1").eval(Complex(ctx, 0.0), ctx), EvalError);
}

TEST_CASE("catalog transforms written as text match the closed forms") {
  auto ctx = ctx50();
  TestRng rng(37);
  for (const TestCase& tc : list_cases()) {
    Expr expr = Expr::parse(tc.transform_text);
    for (int k = 0; k < 20; ++k) {
      Complex s = rng.complex(ctx, 1, 10, -5, 5);
      Complex via_expr = expr.eval(s, ctx);
      Complex via_catalog = eval_transform(tc, s, ctx);
      CHECK(rel_within_pow10(via_expr, via_catalog, -47));
    }
  }
}

TEST_CASE("adaptive evaluator follows the argument precision") {
  Expr expr = Expr::parse("1/(s+1)^2");
  TransformFn F = expr.evaluator();
  auto lo = ctx16();
  auto hi = ctx110();
  Complex coarse = F(Complex(lo, 2.0));
  Complex fine = F(Complex(hi, 2.0));
  CHECK(within_pow10(coarse, Complex(Real(lo, 1L) / 9), -14));
  CHECK(fine.precision() >= hi.binary_precision() - 4);
  CHECK(within_pow10(fine, Complex(Real(hi, 1L) / 9), -105));
}
