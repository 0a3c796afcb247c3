#pragma once

#include <cstdint>
#include <string>

#include "numsgp/errors.hpp"

namespace numsgp {

// Exact 64-bit arithmetic. All semigroup data is integral and every identity
// in this library is exact, so a wrapped intermediate is always a bug or an
// out-of-range input; either way it must surface as errc::overflow.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    fail(errc::overflow, "integer overflow in addition");
  }
  return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) {
    fail(errc::overflow, "integer overflow in subtraction");
  }
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    fail(errc::overflow, "integer overflow in multiplication");
  }
  return out;
}

// Exact division; `on_inexact` distinguishes "input violates a precondition"
// from "a proven-exact division failed" (which means the library has a bug).
inline std::int64_t exact_div(std::int64_t n, std::int64_t d,
                              errc on_inexact = errc::internal_inconsistency) {
  if (d == 0 || n % d != 0) {
    fail(on_inexact, "expected exact division: " + std::to_string(n) + " / " +
                         std::to_string(d));
  }
  return n / d;
}

// Floor division for nonnegative operands (the only case the formulas need).
inline std::int64_t floor_div_nonneg(std::int64_t n, std::int64_t d) {
  return n / d;
}

}  // namespace numsgp
