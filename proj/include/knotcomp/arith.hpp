#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace knotcomp {

using Int = std::int64_t;

/// Raised when a parameter tuple violates its invariants.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a checked 64-bit operation would wrap around.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_neg(Int a);
Int checked_abs(Int a);

/// Least non-negative residue of x modulo m, in [0, m).
Int residue(Int x, Int m);

/// gcd(|a|, |b|) with gcd(x, 0) = |x| and gcd(0, 0) = 0.
Int gcd_nn(Int a, Int b);

template <typename... Rest>
Int gcd_nn(Int a, Int b, Rest... rest) {
  return gcd_nn(gcd_nn(a, b), rest...);
}

}  // namespace knotcomp
