#include "knotcomp/arith.hpp"

#include <numeric>

namespace knotcomp {

Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out))
    throw OverflowError("integer overflow in " + std::to_string(a) + " + " +
                        std::to_string(b));
  return out;
}

Int checked_sub(Int a, Int b) {
  Int out;
  if (__builtin_sub_overflow(a, b, &out))
    throw OverflowError("integer overflow in " + std::to_string(a) + " - " +
                        std::to_string(b));
  return out;
}

Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out))
    throw OverflowError("integer overflow in " + std::to_string(a) + " * " +
                        std::to_string(b));
  return out;
}

Int checked_neg(Int a) { return checked_sub(0, a); }

Int checked_abs(Int a) { return a < 0 ? checked_neg(a) : a; }

Int residue(Int x, Int m) {
  if (m < 1)
    throw ValidationError("invalid modulus " + std::to_string(m) +
                          " (must be >= 1)");
  Int r = x % m;
  return r < 0 ? r + m : r;
}

Int gcd_nn(Int a, Int b) {
  // std::gcd is undefined when |a| or |b| is not representable.
  return std::gcd(checked_abs(a), checked_abs(b));
}

}  // namespace knotcomp
