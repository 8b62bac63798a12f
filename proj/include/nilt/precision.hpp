#pragma once

#include <mpfr.h>

#include "nilt/errors.hpp"

namespace nilt {

/// Everything below 16 decimal digits is rejected; 16 stands in for plain
/// double precision so there is a single code path.
inline constexpr long kMinDecimalDigits = 16;

/// Binary precision needed to honour `decimal_digits`: ceil(d * log2(10)).
mpfr_prec_t decimal_to_binary_precision(long decimal_digits) noexcept;

/// Requested working precision. All values derived from a context carry its
/// binary precision; contexts are cheap value types and freely copyable.
class PrecisionContext {
public:
  explicit PrecisionContext(long decimal_digits);

  long decimal_digits() const noexcept { return decimal_digits_; }
  mpfr_prec_t binary_precision() const noexcept { return binary_precision_; }

private:
  long decimal_digits_;
  mpfr_prec_t binary_precision_;
};

}  // namespace nilt
