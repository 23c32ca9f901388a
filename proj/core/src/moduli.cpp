#include "ramsum/moduli.hpp"

#include <algorithm>
#include <string>

namespace ramsum {

ModuliTuple::ModuliTuple(std::vector<Int> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw DomainError("moduli tuple must be nonempty");
  Int l = 1;
  for (Int m : moduli_) {
    if (m < 1) throw DomainError("moduli must be positive, got " + std::to_string(m));
    l = ramsum::lcm(l, m);
  }
  lcm_ = factorize(l);
  profile_.reserve(lcm_.factors().size());
  for (const auto& [p, e] : lcm_.factors()) {
    LocalProfile local{p, {}};
    local.exponents.reserve(moduli_.size());
    for (Int m : moduli_) local.exponents.push_back(valuation(m, p));
    profile_.push_back(std::move(local));
  }
}

bool ModuliTuple::all_equal() const noexcept {
  return std::adjacent_find(moduli_.begin(), moduli_.end(), std::not_equal_to<>()) == moduli_.end();
}

bool ModuliTuple::pairwise_coprime() const noexcept {
  // Pairwise coprime iff no prime of the lcm divides two moduli.
  return std::all_of(profile_.begin(), profile_.end(), [](const LocalProfile& local) {
    return std::count_if(local.exponents.begin(), local.exponents.end(), [](unsigned e) { return e > 0; }) <= 1;
  });
}

}  // namespace ramsum
