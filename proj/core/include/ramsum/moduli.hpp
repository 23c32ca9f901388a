#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "ramsum/arith.hpp"

namespace ramsum {

/// Exponents of one prime across every modulus of a tuple.
struct LocalProfile {
  Int prime;
  std::vector<unsigned> exponents;  // e_p(m_1), ..., e_p(m_r); zeros allowed
};

/// An ordered tuple (m_1, ..., m_r) of positive integers with its lcm and
/// per-prime exponent profile.
class ModuliTuple {
public:
  explicit ModuliTuple(std::vector<Int> moduli);
  ModuliTuple(std::initializer_list<Int> moduli) : ModuliTuple(std::vector<Int>(moduli)) {}

  std::span<const Int> moduli() const noexcept { return moduli_; }
  std::size_t arity() const noexcept { return moduli_.size(); }
  Int operator[](std::size_t i) const { return moduli_[i]; }

  const FactoredNat& lcm() const noexcept { return lcm_; }
  std::span<const LocalProfile> profile() const noexcept { return profile_; }

  bool all_equal() const noexcept;
  bool pairwise_coprime() const noexcept;

  friend bool operator==(const ModuliTuple& a, const ModuliTuple& b) { return a.moduli_ == b.moduli_; }

private:
  std::vector<Int> moduli_;
  FactoredNat lcm_;
  std::vector<LocalProfile> profile_;
};

namespace detail {
inline Int mul_values(Int a, Int b) { return checked_mul(a, b); }
inline Rational mul_values(const Rational& a, const Rational& b) { return a * b; }
}  // namespace detail

/// Evaluates a multiplicative function of r variables as the product of its
/// values at prime-power tuples.
///
/// `local_rule(p, exponents)` must return the value at (p^e_1, ..., p^e_r);
/// it is called once per prime of lcm(m_1, ..., m_r), in increasing order.
/// With no primes (all moduli 1) the result is 1.
template <typename Rule>
auto multiplicative_eval(const ModuliTuple& moduli, Rule&& local_rule) {
  using Value = std::decay_t<decltype(local_rule(Int{}, std::span<const unsigned>{}))>;
  Value out(1);
  for (const auto& local : moduli.profile())
    out = detail::mul_values(out, local_rule(local.prime, std::span<const unsigned>(local.exponents)));
  return out;
}

}  // namespace ramsum
