#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ramsum/checked.hpp"
#include "ramsum/rational.hpp"

namespace ramsum {

struct PrimePower {
  Int prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A positive integer together with its canonical factorization.
///
/// Primes are strictly increasing and every exponent is at least one, so the
/// value 1 has an empty factor list.
class FactoredNat {
public:
  FactoredNat() = default;

  /// Validates and adopts an explicit factorization.
  static FactoredNat from_factors(std::vector<PrimePower> factors);

  Int value() const noexcept { return value_; }
  std::span<const PrimePower> factors() const noexcept { return factors_; }

  /// Exponent of p in value(); zero when p does not divide it.
  unsigned exponent_of(Int p) const noexcept;

  friend bool operator==(const FactoredNat&, const FactoredNat&) = default;

private:
  friend FactoredNat factorize(Int n);

  Int value_ = 1;
  std::vector<PrimePower> factors_;
};

/// Deterministic trial division against a cached prime table.
FactoredNat factorize(Int n);

bool is_prime(Int n);

/// Primes up to `limit` by the sieve of Eratosthenes.
std::vector<Int> primes_up_to(Int limit);

/// All divisors in increasing order.
std::vector<Int> divisors(const FactoredNat& n);

int mobius(const FactoredNat& n);
Int euler_phi(const FactoredNat& n);
Int dedekind_psi(const FactoredNat& n);
unsigned distinct_prime_count(const FactoredNat& n);
bool is_squarefree(const FactoredNat& n);

inline int mobius(Int n) { return mobius(factorize(n)); }
inline Int euler_phi(Int n) { return euler_phi(factorize(n)); }
inline Int dedekind_psi(Int n) { return dedekind_psi(factorize(n)); }

struct Congruence {
  Int residue;
  Int modulus;
};

struct CrtSolution {
  Int residue;  // in [0, modulus)
  Int modulus;  // lcm of the input moduli

  friend bool operator==(const CrtSolution&, const CrtSolution&) = default;
};

/// Solves x = a_i (mod d_i) simultaneously. Empty when some pair has
/// gcd(d_i, d_j) not dividing a_i - a_j.
std::optional<CrtSolution> crt_solve(std::span<const Congruence> system);

/// #{1 <= k <= n : k = x (mod d), gcd(k, n) = 1} by direct scan.
/// Requires d | n, 1 <= x <= d and gcd(x, d) = 1.
Int coprime_count_in_class(Int n, Int d, Int x);

struct RationalPair {
  Rational lhs;
  Rational rhs;
};

/// Both sides of the Brauer-Rademacher identity:
/// sum over d | n with gcd(d, k) = 1 of d mu(n/d) / phi(d), and
/// mu(n) c_n(k) / phi(n).
RationalPair brauer_rademacher_sides(Int n, Int k);

}  // namespace ramsum
