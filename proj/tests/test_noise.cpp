#include <doctest.h>

#include "test_util.hpp"

using namespace nilt;
using namespace nilt::test;

TEST_CASE("fnv1a64 reference vectors") {
  CHECK(fnv1a64("") == 14695981039346656037ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("splitmix64 reference vectors") {
  SplitMix64 a(1234567);
  CHECK(a.next() == 6457827717110365317ULL);
  CHECK(a.next() == 3203168211198807973ULL);
  CHECK(a.next() == 9817491932198370423ULL);

  SplitMix64 b(0);
  CHECK(b.next() == 16294208416658607535ULL);
  CHECK(b.next() == 7960286522194355700ULL);
  CHECK(b.next() == 487617019471545679ULL);
}

TEST_CASE("uniform draws are in range with a centered mean") {
  SplitMix64 rng(42);
  double sum = 0.0;
  for (int i = 0; i < 100000; ++i) {
    double u = rng.next_uniform();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  double mean = sum / 100000;
  CHECK(mean >= 0.495);
  CHECK(mean <= 0.505);
}

namespace {

TransformFn flat() {
  return [](const Complex& s) {
    return Complex(Real::from_long(s.precision(), 7));
  };
}

}  // namespace

TEST_CASE("zero noise is the identity") {
  NoiseSpec spec;
  spec.delta = 0.0;
  spec.label = "unit/zero";
  auto wrapped = perturb_evaluator(flat(), spec);
  auto ctx = ctx50();
  Complex s(ctx, 2.0, 1.0);
  CHECK(wrapped(s) == flat()(s));
  CHECK(wrapped(s) == wrapped(s));
}

TEST_CASE("noise is bounded by delta") {
  NoiseSpec spec;
  spec.delta = 1e-3;
  spec.seed = 42;
  spec.label = "unit/bound";
  auto wrapped = perturb_evaluator(flat(), spec);
  auto ctx = ctx50();
  Real delta(ctx, 1e-3);
  Complex base = flat()(Complex(ctx, 1.0));
  for (int i = 0; i < 50; ++i) {
    Complex v = wrapped(Complex(ctx, 1.0));
    Real d = v.re() - base.re();
    CHECK(d >= Real(ctx));
    CHECK(d < delta);
    CHECK(v.im() == base.im());
  }
}

TEST_CASE("independent complex mode perturbs both parts") {
  NoiseSpec spec;
  spec.delta = 1e-3;
  spec.mode = NoiseMode::IndependentComplex;
  spec.label = "unit/cplx";
  auto wrapped = perturb_evaluator(flat(), spec);
  auto ctx = ctx50();
  Real delta(ctx, 1e-3);
  Complex base = flat()(Complex(ctx, 1.0));
  bool im_moved = false;
  for (int i = 0; i < 20; ++i) {
    Complex v = wrapped(Complex(ctx, 1.0));
    CHECK(abs(v - base) <= delta * sqrt(Real(ctx, 2.0)));
    if (v.im() != base.im()) im_moved = true;
  }
  CHECK(im_moved);
}

TEST_CASE("identical seed and label replay the same stream") {
  NoiseSpec spec;
  spec.delta = 1e-3;
  spec.seed = 42;
  spec.label = "x";
  auto first = perturb_evaluator(flat(), spec);
  auto second = perturb_evaluator(flat(), spec);
  auto ctx = ctx50();
  for (int i = 0; i < 10; ++i) {
    Complex s(ctx, 1.0 + i, 0.5);
    CHECK(first(s) == second(s));
  }
}

TEST_CASE("streams are partitioned by label and fresh per call") {
  NoiseSpec spec_a;
  spec_a.delta = 1e-3;
  spec_a.label = "case1/talbot";
  NoiseSpec spec_b = spec_a;
  spec_b.label = "case2/talbot";
  auto a = perturb_evaluator(flat(), spec_a);
  auto b = perturb_evaluator(flat(), spec_b);
  auto ctx = ctx50();
  Complex s(ctx, 3.0);
  CHECK(a(s) != b(s));
  // per-call, not per-s: repeated calls at the same point move
  CHECK(a(s) != a(s));
}

TEST_CASE("negative delta is rejected") {
  NoiseSpec spec;
  spec.delta = -1.0;
  CHECK_THROWS_AS(perturb_evaluator(flat(), spec), InvalidParameterError);
}

TEST_CASE("noise mode names") {
  CHECK(noise_mode_from_name("real_only") == NoiseMode::RealOnly);
  CHECK(noise_mode_from_name("independent_complex") ==
        NoiseMode::IndependentComplex);
  CHECK_THROWS_AS(noise_mode_from_name("gaussian"), InvalidParameterError);
  CHECK(noise_mode_name(NoiseMode::RealOnly) == "real_only");
}
