#pragma once

#include <functional>

#include "nilt/complex.hpp"

namespace nilt {

/// Laplace-domain evaluator F(s). Works at the precision of its argument and
/// signals SingularityError when s hits a pole or branch cut.
using TransformFn = std::function<Complex(const Complex&)>;
/// Time-domain evaluator f(t) for t > 0.
using TimeFn = std::function<Real(const Real&)>;

}  // namespace nilt
