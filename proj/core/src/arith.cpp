#include "ramsum/arith.hpp"

#include <algorithm>
#include <string>

#include "ramsum/ramanujan.hpp"

namespace ramsum {
namespace {

constexpr Int kPrimeTableLimit = 1'000'000;

const std::vector<Int>& small_primes() {
  static const std::vector<Int> table = primes_up_to(kPrimeTableLimit);
  return table;
}

void strip(Int& n, Int p, std::vector<PrimePower>& out) {
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  if (e > 0) out.push_back({p, e});
}

}  // namespace

std::vector<Int> primes_up_to(Int limit) {
  std::vector<Int> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (Int i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (Int j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

bool is_prime(Int n) {
  if (n < 2) return false;
  const FactoredNat f = factorize(n);
  return f.factors().size() == 1 && f.factors()[0].exponent == 1;
}

FactoredNat FactoredNat::from_factors(std::vector<PrimePower> factors) {
  FactoredNat out;
  Int prev = 1;
  for (const auto& [p, e] : factors) {
    if (p <= prev) throw DomainError("factor primes must be strictly increasing");
    if (e == 0) throw DomainError("factor exponents must be positive");
    if (!is_prime(p))
      throw DomainError("factor " + std::to_string(p) + " is not prime");
    out.value_ = checked_mul(out.value_, checked_pow(p, e));
    prev = p;
  }
  out.factors_ = std::move(factors);
  return out;
}

unsigned FactoredNat::exponent_of(Int p) const noexcept {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), p,
                             [](const PrimePower& pp, Int q) { return pp.prime < q; });
  return (it != factors_.end() && it->prime == p) ? it->exponent : 0;
}

FactoredNat factorize(Int n) {
  if (n < 1) throw DomainError("factorize requires n >= 1, got " + std::to_string(n));
  FactoredNat out;
  out.value_ = n;
  Int rest = n;
  for (Int p : small_primes()) {
    if (p > rest / p) break;
    strip(rest, p, out.factors_);
  }
  // Past the table, continue over odd candidates; only reached for n > 10^12.
  for (Int c = kPrimeTableLimit + 1; c <= rest / c; c += 2) strip(rest, c, out.factors_);
  if (rest > 1) out.factors_.push_back({rest, 1});
  return out;
}

std::vector<Int> divisors(const FactoredNat& n) {
  std::vector<Int> out{1};
  for (const auto& [p, e] : n.factors()) {
    const std::size_t base = out.size();
    Int pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int mobius(const FactoredNat& n) {
  int sign = 1;
  for (const auto& f : n.factors()) {
    if (f.exponent > 1) return 0;
    sign = -sign;
  }
  return sign;
}

Int euler_phi(const FactoredNat& n) {
  Int out = 1;
  for (const auto& [p, e] : n.factors()) out = checked_mul(out, checked_mul(checked_pow(p, e - 1), p - 1));
  return out;
}

Int dedekind_psi(const FactoredNat& n) {
  Int out = 1;
  for (const auto& [p, e] : n.factors()) out = checked_mul(out, checked_mul(checked_pow(p, e - 1), p + 1));
  return out;
}

unsigned distinct_prime_count(const FactoredNat& n) { return static_cast<unsigned>(n.factors().size()); }

bool is_squarefree(const FactoredNat& n) {
  return std::all_of(n.factors().begin(), n.factors().end(),
                     [](const PrimePower& f) { return f.exponent == 1; });
}

std::optional<CrtSolution> crt_solve(std::span<const Congruence> system) {
  Int x = 0;
  Int L = 1;
  for (const auto& [a, d] : system) {
    if (d < 1) throw DomainError("crt_solve requires positive moduli");
    const Int r = mod_floor(a, d);
    // Merge x (mod L) with r (mod d): x + L*t = r (mod d).
    const Int g = std::gcd(L, d);
    const Int diff = r - x;
    if (diff % g != 0) return std::nullopt;
    const Int dg = d / g;
    // Modular inverse of L/g modulo d/g via extended Euclid.
    Int old_r = mod_floor(L / g, dg), cur_r = dg, old_s = 1, cur_s = 0;
    while (cur_r != 0) {
      const Int q = old_r / cur_r;
      old_r -= q * cur_r;
      std::swap(old_r, cur_r);
      old_s -= q * cur_s;
      std::swap(old_s, cur_s);
    }
    const Int inv = dg == 1 ? 0 : mod_floor(old_s, dg);
    const auto t = static_cast<Int>(static_cast<Int128>(mod_floor(diff / g, dg)) * inv % dg);
    const Int next_L = checked_mul(L, dg);
    x = static_cast<Int>((static_cast<Int128>(L) * t + x) % next_L);
    L = next_L;
  }
  return CrtSolution{x, L};
}

Int coprime_count_in_class(Int n, Int d, Int x) {
  if (n < 1 || d < 1 || n % d != 0) throw DomainError("coprime_count_in_class requires d | n");
  if (x < 1 || x > d || std::gcd(x, d) != 1)
    throw DomainError("coprime_count_in_class requires 1 <= x <= d and gcd(x, d) = 1");
  Int count = 0;
  for (Int k = x; k <= n; k += d)
    if (std::gcd(k, n) == 1) ++count;
  return count;
}

RationalPair brauer_rademacher_sides(Int n, Int k) {
  if (n < 1 || k < 1) throw DomainError("brauer_rademacher_sides requires n, k >= 1");
  const FactoredNat fn = factorize(n);
  Rational lhs = 0;
  for (Int d : divisors(fn)) {
    if (std::gcd(d, k) != 1) continue;
    const int mu = mobius(factorize(n / d));
    if (mu == 0) continue;
    lhs += make_rational(d * mu, euler_phi(factorize(d)));
  }
  const Rational rhs = make_rational(checked_mul(mobius(fn), ramanujan_sum(fn, k)), euler_phi(fn));
  return {lhs, rhs};
}

}  // namespace ramsum
