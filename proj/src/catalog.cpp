#include "nilt/catalog.hpp"

namespace nilt {

namespace {

Real one_at(mpfr_prec_t p) { return Real::from_long(p, 1); }

Real quarter_at(mpfr_prec_t p) { return Real::from_double(p, 0.25); }

[[noreturn]] void singular(const Complex& s, const std::string& what) {
  throw SingularityError("transform singular at s = (" + s.re().to_string(8) +
                         ", " + s.im().to_string(8) + "): " + what);
}

// Cases 4, 5 and 8 have their branch point at s = 0 with the cut along the
// negative real axis; the whole closed half-line is rejected.
void reject_branch_cut(const Complex& s) {
  if (s.im().is_zero() && s.re().sign() <= 0) {
    singular(s, "branch point/cut on the negative real axis");
  }
}

std::vector<TestCase> build_cases() {
  std::vector<TestCase> cases;

  TestCase c1;
  c1.id = 1;
  c1.transform_text = "s/(s^2+1)^2";
  c1.exact_text = "0.5*t*sin(t)";
  c1.category = "Oscillating increasing";
  c1.stehfest_terms = 30;
  c1.stehfest_terms_noisy = 30;
  c1.transform = [](const Complex& s) {
    Complex d = s * s + Complex(one_at(s.precision()));
    if (d.is_zero()) singular(s, "pole at +/-i");
    return s / (d * d);
  };
  c1.exact = [](const Real& t) { return t * sin(t) / 2; };
  cases.push_back(std::move(c1));

  TestCase c2;
  c2.id = 2;
  c2.transform_text = "1/(s+1)^2";
  c2.exact_text = "t*exp(-t)";
  c2.category = "Exponentially decreasing";
  c2.transform = [](const Complex& s) {
    Complex d = s + Complex(one_at(s.precision()));
    if (d.is_zero()) singular(s, "double pole at -1");
    return 1 / (d * d);
  };
  c2.exact = [](const Real& t) { return t * exp(-t); };
  cases.push_back(std::move(c2));

  TestCase c3;
  c3.id = 3;
  c3.transform_text = "1/s^5";
  c3.exact_text = "t^4/24";
  c3.category = "Increasing";
  c3.transform = [](const Complex& s) {
    if (s.is_zero()) singular(s, "pole at 0");
    return 1 / pow_int(s, 5);
  };
  c3.exact = [](const Real& t) { return pow_int(t, 4) / 24; };
  cases.push_back(std::move(c3));

  TestCase c4;
  c4.id = 4;
  c4.transform_text = "1/sqrt(s)";
  c4.exact_text = "1/sqrt(pi*t)";
  c4.category = "With singularities";
  c4.transform = [](const Complex& s) {
    reject_branch_cut(s);
    return 1 / sqrt(s);
  };
  c4.exact = [](const Real& t) {
    return 1 / sqrt(const_pi_bits(t.precision()) * t);
  };
  cases.push_back(std::move(c4));

  TestCase c5;
  c5.id = 5;
  c5.transform_text = "erf(2/sqrt(s))";
  c5.exact_text = "sin(4*sqrt(t))/(pi*t)";
  c5.category = "Oscillating with singularities";
  c5.transform = [](const Complex& s) {
    reject_branch_cut(s);
    Complex z = Complex(Real::from_long(s.precision(), 2)) / sqrt(s);
    return erf(z);
  };
  c5.exact = [](const Real& t) {
    return sin(4 * sqrt(t)) / (const_pi_bits(t.precision()) * t);
  };
  cases.push_back(std::move(c5));

  TestCase c6;
  c6.id = 6;
  c6.transform_text = "1/(s^2-0.25)";
  c6.exact_text = "sinh(0.5*t)/0.5";
  c6.category = "Hyperbolic";
  c6.stehfest_terms = 36;
  c6.stehfest_terms_noisy = 36;
  c6.transform = [](const Complex& s) {
    Complex d = s * s - Complex(quarter_at(s.precision()));
    if (d.is_zero()) singular(s, "pole at +/-0.5");
    return 1 / d;
  };
  c6.exact = [](const Real& t) { return 2 * sinh(t / 2); };
  cases.push_back(std::move(c6));

  TestCase c7;
  c7.id = 7;
  c7.transform_text = "s^3/(s^4+0.25)";
  c7.exact_text = "cos(0.5*t)*cosh(0.5*t)";
  c7.category = "Combination of oscillating and hyperbolic";
  c7.stehfest_terms = 36;
  c7.stehfest_terms_noisy = 16;
  c7.transform = [](const Complex& s) {
    Complex d = pow_int(s, 4) + Complex(quarter_at(s.precision()));
    if (d.is_zero()) singular(s, "poles at (+/-1 +/- i)/2");
    return pow_int(s, 3) / d;
  };
  c7.exact = [](const Real& t) { return cos(t / 2) * cosh(t / 2); };
  cases.push_back(std::move(c7));

  TestCase c8;
  c8.id = 8;
  c8.transform_text = "ln(s)/s";
  c8.exact_text = "-(ln(t)+gamma)";
  c8.category = "Natural log";
  c8.transform = [](const Complex& s) {
    reject_branch_cut(s);
    return log(s) / s;
  };
  c8.exact = [](const Real& t) {
    return -(log(t) + const_euler_gamma_bits(t.precision()));
  };
  cases.push_back(std::move(c8));

  return cases;
}

}  // namespace

const std::vector<TestCase>& list_cases() {
  static const std::vector<TestCase> cases = build_cases();
  return cases;
}

const TestCase& case_by_id(int id) {
  const auto& cases = list_cases();
  if (id < 1 || id > static_cast<int>(cases.size())) {
    throw InvalidParameterError("no catalog case with id " +
                                std::to_string(id) + " (valid: 1..8)");
  }
  return cases[static_cast<size_t>(id - 1)];
}

Complex eval_transform(const TestCase& tc, const Complex& s,
                       const PrecisionContext& ctx) {
  return tc.transform(Complex(ctx, s));
}

Real eval_exact(const TestCase& tc, const Real& t, const PrecisionContext& ctx) {
  if (t.sign() <= 0) {
    throw DomainError("time-domain evaluator requires t > 0");
  }
  return tc.exact(Real(ctx, t));
}

}  // namespace nilt
