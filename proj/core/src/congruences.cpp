#include "ramsum/congruences.hpp"

#include <algorithm>
#include <string>

#include "ramsum/parallel.hpp"

namespace ramsum {
namespace {

void check_arity(const PolySystem& system, std::size_t r) {
  if (system.arity() != r)
    throw DomainError("system has " + std::to_string(system.arity()) + " polynomials but " + std::to_string(r) +
                      " moduli");
}

bool satisfies(const PolySystem& system, std::span<const Int> moduli, Int x) {
  for (std::size_t i = 0; i < moduli.size(); ++i)
    if (moduli[i] > 1 && poly_eval_mod(system[i], x, moduli[i]) != 0) return false;
  return true;
}

}  // namespace

Int local_root_count(const PolySystem& system, Int p, std::span<const unsigned> exponents, bool units_only) {
  check_arity(system, exponents.size());
  const unsigned top = exponents.empty() ? 0 : *std::max_element(exponents.begin(), exponents.end());
  const Int span = checked_pow(p, top);
  if (span > kRootScanLimit) throw ScaleError("prime power " + std::to_string(span) + " exceeds scan limit");
  std::vector<Int> local(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) local[i] = checked_pow(p, exponents[i]);
  auto root = [&](Int x) -> Int {
    if (units_only && top > 0 && x % p == 0) return 0;
    return satisfies(system, local, x) ? 1 : 0;
  };
  // Short scans are the common case and not worth a thread hand-off.
  if (span < static_cast<Int>(kMinParallelItems)) {
    Int count = 0;
    for (Int x = 0; x < span; ++x) count += root(x);
    return count;
  }
  return parallel_sum(span, root);
}

RootCount count_roots(const PolySystem& system, const ModuliTuple& moduli, bool units_only, RootStrategy strategy) {
  check_arity(system, moduli.arity());
  const Int m = moduli.lcm().value();
  if (strategy == RootStrategy::direct) {
    if (m > kRootScanLimit) throw ScaleError("modulus " + std::to_string(m) + " exceeds scan limit");
    const Int count = parallel_sum(m, [&](Int x) -> Int {
      if (units_only && std::gcd(x, m) != 1) return 0;
      return satisfies(system, moduli.moduli(), x) ? 1 : 0;
    });
    return {count, m};
  }
  const Int count = multiplicative_eval(moduli, [&](Int p, std::span<const unsigned> exponents) {
    return local_root_count(system, p, exponents, units_only);
  });
  return {count, m};
}

Int linear_system_root_count(std::span<const Int> a, std::span<const Int> d, bool units_only) {
  if (a.size() != d.size()) throw DomainError("shift and modulus lists differ in length");
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 1) throw DomainError("moduli must be positive");
    if (units_only && std::gcd(d[i], a[i]) != 1) return 0;
    for (std::size_t j = i + 1; j < d.size(); ++j)
      if ((a[i] - a[j]) % std::gcd(d[i], d[j]) != 0) return 0;
  }
  return 1;
}

}  // namespace ramsum
