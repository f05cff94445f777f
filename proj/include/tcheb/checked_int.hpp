#pragma once

#include <cstdint>

#include "tcheb/errors.hpp"

namespace tcheb {

/// Exact coefficient type. All arithmetic goes through the checked helpers
/// below; overflow raises CoefficientOverflow instead of wrapping.
using Int = std::int64_t;

inline Int checked_add(Int x, Int y) {
  Int r;
  if (__builtin_add_overflow(x, y, &r)) throw CoefficientOverflow("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int x, Int y) {
  Int r;
  if (__builtin_sub_overflow(x, y, &r)) throw CoefficientOverflow("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int x, Int y) {
  Int r;
  if (__builtin_mul_overflow(x, y, &r)) throw CoefficientOverflow("integer overflow in multiplication");
  return r;
}

inline Int checked_neg(Int x) { return checked_sub(0, x); }

inline Int checked_pow(Int base, int exp) {
  if (exp < 0) throw BadParameter("negative exponent");
  Int r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

}  // namespace tcheb
