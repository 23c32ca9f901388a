#include "ramsum/sums_products.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <optional>
#include <string>

#include "ramsum/parallel.hpp"
#include "ramsum/ramanujan.hpp"

namespace ramsum {
namespace {

// Moduli equal to 1 contribute the factor c_1 = 1 and are dropped.
template <typename Entries, typename T>
std::optional<std::pair<Entries, ModuliTuple>> drop_unit_moduli(std::span<const T> entries, const ModuliTuple& moduli) {
  std::vector<T> kept;
  std::vector<Int> kept_moduli;
  for (std::size_t i = 0; i < moduli.arity(); ++i) {
    if (moduli[i] == 1) continue;
    kept.push_back(entries[i]);
    kept_moduli.push_back(moduli[i]);
  }
  if (kept_moduli.empty()) return std::nullopt;
  return std::pair{Entries(std::move(kept)), ModuliTuple(std::move(kept_moduli))};
}

std::optional<std::pair<PolySystem, ModuliTuple>> drop_units(const PolySystem& system, const ModuliTuple& moduli) {
  return drop_unit_moduli<PolySystem>(system.polys(), moduli);
}

std::optional<std::pair<ShiftVector, ModuliTuple>> drop_units(const ShiftVector& a, const ModuliTuple& moduli) {
  return drop_unit_moduli<ShiftVector>(a.values(), moduli);
}

void check_arity(std::size_t got, const ModuliTuple& moduli) {
  if (got != moduli.arity())
    throw DomainError("expected " + std::to_string(moduli.arity()) + " polynomials or shifts, got " +
                      std::to_string(got));
}

/// Sum over k in [0, m) of prod_i c_{m_i}(g_i(k)), restricted to
/// gcd(k, m) = 1 when `coprime_only`. k = 0 stands in for k = m.
Int definitional_sum(const PolySystem& system, const ModuliTuple& moduli, bool coprime_only) {
  check_arity(system.arity(), moduli);
  const Int m = moduli.lcm().value();
  if (m > kOracleLimit) throw ScaleError("lcm " + std::to_string(m) + " exceeds oracle limit " + std::to_string(kOracleLimit));
  const std::size_t r = moduli.arity();
  // g_i(k) mod m_i depends only on k mod m_i, so each factor
  // c_{m_i}(g_i(k)), zeroed when k is not a unit modulo m_i, is tabulated
  // once per residue. gcd(k, m) = 1 iff k is a unit modulo every m_i.
  auto factor_table = [&](std::size_t i) {
    const FactoredNat mi = factorize(moduli[i]);
    std::vector<Int> t(static_cast<std::size_t>(moduli[i]));
    for (Int j = 0; j < moduli[i]; ++j)
      t[j] = coprime_only && std::gcd(j, moduli[i]) != 1 ? 0 : ramanujan_sum(mi, poly_eval_mod(system[i], j, moduli[i]));
    return t;
  };
  // All factors but the one with the largest modulus are multiplied into
  // a single table indexed by k mod lcm of their moduli.
  const std::size_t last = static_cast<std::size_t>(
      std::max_element(moduli.moduli().begin(), moduli.moduli().end()) - moduli.moduli().begin());
  Int head_mod = 1;
  for (std::size_t i = 0; i < r; ++i)
    if (i != last) head_mod = std::lcm(head_mod, moduli[i]);
  std::vector<Int> head(static_cast<std::size_t>(head_mod), 1);
  for (std::size_t i = 0; i < r; ++i) {
    if (i == last) continue;
    const auto t = factor_table(i);
    for (Int j = 0; j < head_mod; ++j) head[j] = checked_mul(head[j], t[j % moduli[i]]);
  }
  const std::vector<Int> tail = factor_table(last);
  const Int tail_mod = moduli[last];

  std::mutex mutex;
  std::vector<std::pair<std::size_t, Int>> partial;
  parallel_chunks(static_cast<std::size_t>(m), [&](std::size_t lo, std::size_t hi) {
    Int a = static_cast<Int>(lo) % head_mod, b = static_cast<Int>(lo) % tail_mod;
    Int acc = 0;
    for (std::size_t k = lo; k < hi; ++k) {
      acc = checked_add(acc, checked_mul(head[a], tail[b]));
      if (++a == head_mod) a = 0;
      if (++b == tail_mod) b = 0;
    }
    std::lock_guard lock(mutex);
    partial.emplace_back(lo, acc);
  });
  std::sort(partial.begin(), partial.end());
  Int total = 0;
  for (const auto& [lo, v] : partial) total = checked_add(total, v);
  return total;
}

enum class Weight { lcm, phi_lcm };

/// Prime-local value of the divisor-tuple convolution
///   sum_{f_i <= e_i} prod_i p^f_i mu(p^(e_i - f_i)) / w(p^max f) * count(f),
/// with w = identity (E-type) or w = phi scaled by phi(p^max e) (R-type).
/// Only f_i in {e_i - 1, e_i} survive the Moebius factor.
template <typename Count>
Int local_convolution(Int p, std::span<const unsigned> e, Weight weight, Count&& count) {
  const std::size_t r = e.size();
  std::vector<std::size_t> droppable;
  for (std::size_t i = 0; i < r; ++i)
    if (e[i] > 0) droppable.push_back(i);
  const unsigned top = *std::max_element(e.begin(), e.end());
  const Int phi_top = checked_mul(checked_pow(p, top - 1), p - 1);

  Int total = 0;
  std::vector<unsigned> f(e.begin(), e.end());
  for (std::size_t mask = 0; mask < (std::size_t{1} << droppable.size()); ++mask) {
    int sign = 1;
    for (std::size_t b = 0; b < droppable.size(); ++b) {
      const std::size_t i = droppable[b];
      const bool drop = (mask >> b) & 1;
      f[i] = e[i] - (drop ? 1 : 0);
      if (drop) sign = -sign;
    }
    const Int n = count(std::span<const unsigned>(f));
    if (n == 0) continue;
    unsigned sum_f = 0, max_f = 0;
    for (unsigned fi : f) {
      sum_f += fi;
      max_f = std::max(max_f, fi);
    }
    Int term;
    if (weight == Weight::lcm) {
      term = checked_pow(p, sum_f - max_f);
    } else {
      const Int phi_f = max_f == 0 ? 1 : checked_mul(checked_pow(p, max_f - 1), p - 1);
      term = exact_div(checked_mul(checked_pow(p, sum_f), phi_top), phi_f, "R-type convolution");
    }
    total = checked_add(total, sign * checked_mul(term, n));
  }
  return total;
}

template <typename Count>
Int convolution(const ModuliTuple& moduli, Weight weight, Count&& local_count) {
  return multiplicative_eval(moduli, [&](Int p, std::span<const unsigned> e) {
    return local_convolution(p, e, weight, [&](std::span<const unsigned> f) { return local_count(p, f); });
  });
}

std::vector<Int> prime_powers(Int p, std::span<const unsigned> f) {
  std::vector<Int> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = checked_pow(p, f[i]);
  return out;
}

Int omega_sign(const FactoredNat& n) { return distinct_prime_count(n) % 2 == 0 ? 1 : -1; }

}  // namespace

ShiftVector::ShiftVector(std::vector<Int> shifts) : shifts_(std::move(shifts)) {
  if (shifts_.empty()) throw DomainError("shift vector must be nonempty");
}

Int e_g_direct(const PolySystem& system, const ModuliTuple& moduli) {
  const Int raw = definitional_sum(system, moduli, false);
  return exact_div(raw, moduli.lcm().value(), "E_G definitional sum");
}

Int r_g_direct(const PolySystem& system, const ModuliTuple& moduli) {
  return definitional_sum(system, moduli, true);
}

Int e_g_fast(const PolySystem& system, const ModuliTuple& moduli) {
  check_arity(system.arity(), moduli);
  const auto reduced = drop_units(system, moduli);
  if (!reduced) return 1;
  const auto& [sys, mod] = *reduced;
  return convolution(mod, Weight::lcm, [&](Int p, std::span<const unsigned> f) {
    return local_root_count(sys, p, f, false);
  });
}

Int r_g_fast(const PolySystem& system, const ModuliTuple& moduli) {
  check_arity(system.arity(), moduli);
  const auto reduced = drop_units(system, moduli);
  if (!reduced) return 1;
  const auto& [sys, mod] = *reduced;
  return convolution(mod, Weight::phi_lcm, [&](Int p, std::span<const unsigned> f) {
    return local_root_count(sys, p, f, true);
  });
}

Int e_g(const PolySystem& system, const ModuliTuple& moduli, SumStrategy strategy) {
  return strategy == SumStrategy::direct ? e_g_direct(system, moduli) : e_g_fast(system, moduli);
}

Int r_g(const PolySystem& system, const ModuliTuple& moduli, SumStrategy strategy) {
  return strategy == SumStrategy::direct ? r_g_direct(system, moduli) : r_g_fast(system, moduli);
}

Int e_shift(const ShiftVector& a, const ModuliTuple& moduli, SumStrategy strategy) {
  check_arity(a.arity(), moduli);
  if (strategy == SumStrategy::direct) return e_g_direct(PolySystem::shifts(a.values()), moduli);
  if (strategy == SumStrategy::fast && a.arity() == 2 && std::abs(a[0] - a[1]) == 1) {
    const FactoredNat& m = moduli.lcm();
    return (moduli[0] == moduli[1] && is_squarefree(m)) ? omega_sign(m) : 0;
  }
  const auto reduced = drop_units(a, moduli);
  if (!reduced) return 1;
  const auto& [shifts, mod] = *reduced;
  return convolution(mod, Weight::lcm, [&](Int p, std::span<const unsigned> f) {
    return linear_system_root_count(shifts.values(), prime_powers(p, f), false);
  });
}

Int r_shift(const ShiftVector& a, const ModuliTuple& moduli, SumStrategy strategy) {
  check_arity(a.arity(), moduli);
  if (strategy == SumStrategy::direct) return r_g_direct(PolySystem::shifts(a.values()), moduli);
  if (strategy == SumStrategy::fast) {
    if (moduli.pairwise_coprime()) {
      Int out = mobius(moduli.lcm());
      for (std::size_t i = 0; i < a.arity() && out != 0; ++i) out = checked_mul(out, ramanujan_sum(moduli[i], a[i]));
      return out;
    }
    if (a.arity() == 2 && std::abs(a[0] - a[1]) == 1 && std::gcd(a[0], moduli[0]) == 1 &&
        std::gcd(a[1], moduli[1]) == 1) {
      if (!is_squarefree(factorize(moduli[0])) || !is_squarefree(factorize(moduli[1]))) return 0;
      const FactoredNat g = factorize(std::gcd(moduli[0], moduli[1]));
      return checked_mul(omega_sign(g), dedekind_psi(g));
    }
  }
  const auto reduced = drop_units(a, moduli);
  if (!reduced) return 1;
  const auto& [shifts, mod] = *reduced;
  return convolution(mod, Weight::phi_lcm, [&](Int p, std::span<const unsigned> f) {
    return linear_system_root_count(shifts.values(), prime_powers(p, f), true);
  });
}

Int r_func(const ModuliTuple& moduli, SumStrategy strategy) {
  const ShiftVector ones(std::vector<Int>(moduli.arity(), 1));
  if (strategy != SumStrategy::fast) return r_shift(ones, moduli, strategy);
  return multiplicative_eval(moduli, [](Int p, std::span<const unsigned> e) {
    std::vector<unsigned> present;
    for (unsigned ei : e)
      if (ei > 0) present.push_back(ei);
    return r_prime_power(PrimePowerProfile(p, std::move(present)));
  });
}

PrimePowerProfile::PrimePowerProfile(Int p, std::vector<unsigned> exponents) : p_(p), exponents_(std::move(exponents)) {
  if (!is_prime(p))
    throw DomainError("prime-power profile needs a prime, got " + std::to_string(p));
  if (exponents_.empty()) throw DomainError("prime-power profile needs at least one exponent");
  if (std::any_of(exponents_.begin(), exponents_.end(), [](unsigned e) { return e == 0; }))
    throw DomainError("prime-power profile exponents must be at least 1");
  std::sort(exponents_.begin(), exponents_.end(), std::greater<>());
  s_ = static_cast<unsigned>(std::count(exponents_.begin(), exponents_.end(), exponents_.front()));
  Int sum = 0;
  for (unsigned e : exponents_) sum += e;
  v_ = sum - static_cast<Int>(exponents_.size()) - static_cast<Int>(exponents_.front()) + 1;
}

Int h_poly(unsigned s, Int x) {
  if (s == 0) throw DomainError("h_s requires s >= 1");
  const Int numerator = checked_add(checked_pow(x - 1, s - 1), s % 2 == 0 ? 1 : -1);
  return exact_div(numerator, x, "h_s");
}

Int x_poly(unsigned r, Int p) {
  return checked_add(checked_pow(p - 1, r), (r % 2 == 0 ? 1 : -1) * (p - 2));
}

Int r_prime_power(const PrimePowerProfile& profile) {
  const Int p = profile.prime();
  const unsigned r = profile.r();
  if (profile.top() == 1) return x_poly(r, p);
  const unsigned s = profile.top_multiplicity();
  const Int h = h_poly(s, p);
  if (h == 0) return 0;
  return checked_mul(checked_mul(checked_pow(p, static_cast<unsigned>(profile.v() + profile.top())),
                                 checked_pow(p - 1, r - s + 1)),
                     h);
}

Rational g_r_value(unsigned r, const FactoredNat& m) {
  if (r == 0) throw DomainError("g_r requires r >= 1");
  Rational out = 1;
  for (const auto& [p, e] : m.factors()) {
    const Int local = r_prime_power(PrimePowerProfile(p, std::vector<unsigned>(r, e)));
    out *= make_rational(local, checked_pow(p, e));
  }
  return out;
}

}  // namespace ramsum
