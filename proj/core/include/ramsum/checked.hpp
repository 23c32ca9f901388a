#pragma once

#include <cstdint>
#include <numeric>

#include "ramsum/errors.hpp"

namespace ramsum {

using Int = std::int64_t;
__extension__ typedef __int128 Int128;

inline Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("integer overflow in addition");
  return out;
}

inline Int checked_sub(Int a, Int b) {
  Int out;
  if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("integer overflow in subtraction");
  return out;
}

inline Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("integer overflow in multiplication");
  return out;
}

inline Int checked_pow(Int base, unsigned exponent) {
  Int out = 1;
  for (unsigned i = 0; i < exponent; ++i) out = checked_mul(out, base);
  return out;
}

/// Exact quotient; a nonzero remainder is a ConsistencyError.
inline Int exact_div(Int a, Int b, const char* context) {
  if (b == 0 || a % b != 0) throw ConsistencyError(std::string("inexact division in ") + context);
  return a / b;
}

/// Representative of a in [0, n).
inline Int mod_floor(Int a, Int n) {
  Int r = a % n;
  return r < 0 ? r + n : r;
}

inline Int gcd(Int a, Int b) { return std::gcd(a, b); }

inline Int lcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  Int g = std::gcd(a, b);
  return checked_mul(a / g, b < 0 ? -b : b);
}

/// Multiplicative exponent of p in n (n != 0).
inline unsigned valuation(Int n, Int p) {
  unsigned v = 0;
  if (n == 0) return ~0u;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

}  // namespace ramsum
