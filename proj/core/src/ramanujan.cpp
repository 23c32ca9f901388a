#include "ramsum/ramanujan.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ramsum/parallel.hpp"

namespace ramsum {

Int ramanujan_sum(const FactoredNat& n, Int k) {
  Int out = 1;
  for (const auto& [p, e] : n.factors()) {
    unsigned f = 0;
    if (k == 0) {
      f = e;
    } else {
      Int rest = k;
      while (f < e && rest % p == 0) {
        rest /= p;
        ++f;
      }
    }
    if (f + 1 < e) return 0;
    const Int local = (f == e) ? checked_mul(checked_pow(p, e - 1), p - 1) : -checked_pow(p, e - 1);
    out = checked_mul(out, local);
  }
  return out;
}

Int ramanujan_sum(Int n, Int k) { return ramanujan_sum(factorize(n), k); }

Int ramanujan_sum_by_divisors(Int n, Int k) {
  if (n < 1) throw DomainError("ramanujan sum requires n >= 1");
  const Int g = std::gcd(mod_floor(k, n), n);  // gcd(0, n) = n
  Int sum = 0;
  for (Int d : divisors(factorize(g))) sum = checked_add(sum, checked_mul(d, mobius(n / d)));
  return sum;
}

double ramanujan_sum_exponential(Int n, Int k) {
  if (n < 1) throw DomainError("ramanujan sum requires n >= 1");
  if (n > kExponentialOracleLimit)
    throw ScaleError("exponential oracle limited to n <= " + std::to_string(kExponentialOracleLimit));
  const Int kr = mod_floor(k, n);
  double sum = 0.0;
  for (Int j = 1; j <= n; ++j) {
    if (std::gcd(j, n) != 1) continue;
    // Reduce j*k mod n before scaling to keep the angle small.
    const Int t = (j * kr) % n;
    sum += std::cos(2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(n));
  }
  return sum;
}

RamanujanTable::RamanujanTable(Int n_max) : n_max_(n_max) {
  if (n_max < 1) throw DomainError("table size must be positive");
  rows_.resize(static_cast<std::size_t>(n_max));
  parallel_chunks(rows_.size(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const Int n = static_cast<Int>(i) + 1;
      const FactoredNat fn = factorize(n);
      auto& row = rows_[i];
      row.resize(static_cast<std::size_t>(n));
      for (Int k = 1; k <= n; ++k) row[k - 1] = ramanujan_sum(fn, k);
    }
  }, 256);
}

std::span<const Int> RamanujanTable::row(Int n) const {
  if (n < 1 || n > n_max_) throw DomainError("row " + std::to_string(n) + " outside table");
  return rows_[static_cast<std::size_t>(n - 1)];
}

}  // namespace ramsum
