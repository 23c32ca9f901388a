#pragma once

#include <span>
#include <vector>

#include "ramsum/arith.hpp"

namespace ramsum {

/// Ramanujan sum c_n(k), the sum of k-th powers of the primitive n-th roots
/// of unity. Any integer k is accepted; c_n(0) = phi(n).
///
/// Evaluated prime by prime: with f = min(e, v_p(k)), the factor for p^e is
/// phi(p^e) when f = e, -p^(e-1) when f = e - 1 and 0 otherwise. This is the
/// Hoelder form phi(n) mu(n/g) / phi(n/g), g = gcd(n, k).
Int ramanujan_sum(const FactoredNat& n, Int k);
Int ramanujan_sum(Int n, Int k);

/// c_n(k) as the divisor sum over d | gcd(k, n) of d mu(n/d).
Int ramanujan_sum_by_divisors(Int n, Int k);

/// Floating-point oracle: sum over 1 <= j <= n, gcd(j, n) = 1 of
/// cos(2 pi j k / n). Throws ScaleError for n > 10^4.
double ramanujan_sum_exponential(Int n, Int k);

inline constexpr Int kExponentialOracleLimit = 10'000;

/// Rows (c_n(1), ..., c_n(n)) for every n <= n_max.
class RamanujanTable {
public:
  explicit RamanujanTable(Int n_max);

  Int n_max() const noexcept { return n_max_; }
  /// Row n holds c_n(k) for k = 1..n at index k - 1.
  std::span<const Int> row(Int n) const;
  /// c_n(k) for any integer k, by periodicity.
  Int at(Int n, Int k) const { return row(n)[mod_floor(k - 1, n)]; }

private:
  Int n_max_;
  std::vector<std::vector<Int>> rows_;
};

inline RamanujanTable ramanujan_table(Int n_max) { return RamanujanTable(n_max); }

}  // namespace ramsum
