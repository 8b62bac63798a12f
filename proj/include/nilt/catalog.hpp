#pragma once

#include <string>
#include <vector>

#include "nilt/evaluator.hpp"

namespace nilt {

/// One built-in transform pair with its closed-form inverse and the default
/// method parameters used by the benchmark harness.
struct TestCase {
  int id = 0;
  std::string transform_text;   // F(s)
  std::string exact_text;       // f(t)
  std::string category;
  int stehfest_terms = 16;      // noise-free default N
  int stehfest_terms_noisy = 16;
  int series_terms = 55;        // Talbot nodes / Fourier terms
  TransformFn transform;
  TimeFn exact;
};

/// The eight built-in cases, ids 1..8.
const std::vector<TestCase>& list_cases();
const TestCase& case_by_id(int id);  // InvalidParameterError outside 1..8

/// F(s) with s rounded into ctx first.
Complex eval_transform(const TestCase& tc, const Complex& s,
                       const PrecisionContext& ctx);
/// f(t) with t rounded into ctx first; DomainError for t <= 0.
Real eval_exact(const TestCase& tc, const Real& t, const PrecisionContext& ctx);

}  // namespace nilt
