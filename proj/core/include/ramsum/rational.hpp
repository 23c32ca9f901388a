#pragma once

#include <string>

#include <boost/multiprecision/gmp.hpp>

#include "ramsum/checked.hpp"

namespace ramsum {

/// Exact fraction in lowest terms with positive denominator.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

inline Rational make_rational(Int num, Int den = 1) {
  if (den == 0) throw DomainError("zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// Integer value of q; throws ConsistencyError when q is not an integer or
/// does not fit in 64 bits.
inline Int to_int(const Rational& q) {
  if (!is_integer(q)) throw ConsistencyError("rational " + q.str() + " is not an integer");
  const BigInt& n = numerator(q);
  if (n > BigInt(INT64_MAX) || n < BigInt(INT64_MIN)) throw OverflowError("rational exceeds 64 bits");
  return n.convert_to<Int>();
}

inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace ramsum
