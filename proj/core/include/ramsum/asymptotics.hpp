#pragma once

#include <vector>

#include "ramsum/rational.hpp"

namespace ramsum {

/// Local data of the Euler product for sum g_r(m) / m^s at one prime.
struct EulerFactorData {
  Int p;
  BigInt x_r;    // (p - 1)^r + (-1)^r (p - 2)
  BigInt h_r;    // h_r(p)
  Rational a_r;  // x_r / p - p^(r-1)
  Rational b_r;  // p^(r-1) (p - 1) h_r - p^(r-2) x_r

  static EulerFactorData at(unsigned r, Int p);

  /// Exact local factor 1 + (x_r - p^r) / p^(r+1) + (p (p - 1) h_r - x_r) / p^(r+2).
  Rational alpha_factor(unsigned r) const;
};

/// Product of the local factors over primes p <= prime_bound, multiplied in
/// double precision from exact per-prime values. Requires r >= 2.
double alpha_r(unsigned r, Int prime_bound);

/// Heuristic relative error of alpha_r(r, prime_bound): each omitted factor
/// lies within r / p^2 of 1, so the tail is bounded by about
/// sum_{p > P} r / p^2 < r / (P - 1).
double alpha_tail_estimate(unsigned r, Int prime_bound);

/// Largest x accepted by g_r_sieve.
inline constexpr Int kSieveLimit = 1'000'000;

/// g_r(m) for m = 1..x (index m - 1), from a smallest-prime-factor sieve and
/// the local values g_r(p) = x_r(p) / p, g_r(p^e) = p^((e-1)(r-1)) (p - 1) h_r(p).
std::vector<Rational> g_r_sieve(unsigned r, Int x);

/// Checks g_r(m) = sum_{d | m} F_r(d) (m/d)^(r-1) exactly for every
/// m <= m_bound, where F_r is multiplicative with F_r(p) = a_r(p),
/// F_r(p^2) = b_r(p) and F_r(p^k) = 0 for k >= 3.
bool dirichlet_decomposition_check(unsigned r, Int m_bound);

struct AsymptoticReport {
  unsigned r;
  Int x;
  Int prime_bound;
  Rational empirical;  // sum_{m <= x} g_r(m), exact
  double alpha;
  double alpha_tail;   // alpha_tail_estimate(r, prime_bound)
  double predicted;    // (alpha / r) x^r
  double ratio;        // empirical / predicted
};

AsymptoticReport asymptotic_report(unsigned r, Int x, Int prime_bound);

}  // namespace ramsum
