#include "ramsum/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "ramsum/arith.hpp"

namespace ramsum {
namespace {

BigInt big_pow(Int base, unsigned exponent) {
  BigInt out = 1;
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

BigInt big_h(unsigned s, Int x) {
  BigInt numerator = big_pow(x - 1, s - 1) + (s % 2 == 0 ? 1 : -1);
  if (numerator % x != 0) throw ConsistencyError("h_s numerator not divisible by x");
  return numerator / x;
}

void require_r(unsigned r) {
  if (r < 2) throw DomainError("average-order results need r >= 2, got " + std::to_string(r));
}

/// Smallest prime factor of every n <= x (spf[0] = spf[1] = 0).
std::vector<Int> smallest_prime_factors(Int x) {
  std::vector<Int> spf(static_cast<std::size_t>(x) + 1, 0);
  for (Int i = 2; i <= x; ++i) {
    if (spf[i] != 0) continue;
    for (Int j = i; j <= x; j += i)
      if (spf[j] == 0) spf[j] = i;
  }
  return spf;
}

/// g_r(m) kept as numerator over the squarefree part of m, so that partial
/// sums can be formed over a common denominator.
struct SplitValue {
  BigInt numerator;
  Int denominator;
};

std::vector<SplitValue> g_r_split(unsigned r, Int x) {
  require_r(r);
  if (x < 1) throw DomainError("x must be positive");
  if (x > kSieveLimit) throw ScaleError("g_r sieve limited to x <= " + std::to_string(kSieveLimit));
  const std::vector<Int> spf = smallest_prime_factors(x);
  std::map<Int, EulerFactorData> local;
  std::vector<SplitValue> out(static_cast<std::size_t>(x));
  out[0] = {1, 1};
  for (Int m = 2; m <= x; ++m) {
    SplitValue v{1, 1};
    Int rest = m;
    while (rest > 1) {
      const Int p = spf[rest];
      unsigned e = 0;
      while (rest % p == 0) {
        rest /= p;
        ++e;
      }
      auto it = local.find(p);
      if (it == local.end()) it = local.emplace(p, EulerFactorData::at(r, p)).first;
      if (e == 1) {
        v.numerator *= it->second.x_r;
        v.denominator *= p;
      } else {
        v.numerator *= big_pow(p, (e - 1) * (r - 1)) * (p - 1) * it->second.h_r;
      }
    }
    out[m - 1] = std::move(v);
  }
  return out;
}

}  // namespace

EulerFactorData EulerFactorData::at(unsigned r, Int p) {
  require_r(r);
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  EulerFactorData d;
  d.p = p;
  d.x_r = big_pow(p - 1, r) + (r % 2 == 0 ? BigInt(p - 2) : BigInt(2 - p));
  d.h_r = big_h(r, p);
  d.a_r = Rational(d.x_r, BigInt(p)) - Rational(big_pow(p, r - 1));
  d.b_r = Rational(big_pow(p, r - 1) * (p - 1) * d.h_r - big_pow(p, r - 2) * d.x_r);
  return d;
}

Rational EulerFactorData::alpha_factor(unsigned r) const {
  const BigInt pr = big_pow(p, r);
  return Rational(1) + Rational(x_r - pr, pr * p) + Rational(BigInt(p) * (p - 1) * h_r - x_r, pr * p * p);
}

double alpha_r(unsigned r, Int prime_bound) {
  require_r(r);
  double product = 1.0;
  for (Int p : primes_up_to(prime_bound)) product *= EulerFactorData::at(r, p).alpha_factor(r).convert_to<double>();
  return product;
}

double alpha_tail_estimate(unsigned r, Int prime_bound) {
  require_r(r);
  if (prime_bound < 2) return std::numeric_limits<double>::infinity();
  return static_cast<double>(r) / static_cast<double>(prime_bound - 1);
}

std::vector<Rational> g_r_sieve(unsigned r, Int x) {
  std::vector<SplitValue> split = g_r_split(r, x);
  std::vector<Rational> out;
  out.reserve(split.size());
  for (auto& v : split) out.emplace_back(std::move(v.numerator), BigInt(v.denominator));
  return out;
}

bool dirichlet_decomposition_check(unsigned r, Int m_bound) {
  require_r(r);
  if (m_bound > 10'000) throw ScaleError("decomposition check limited to m <= 10^4");
  if (m_bound < 1) return true;
  const std::vector<Rational> g = g_r_sieve(r, m_bound);
  std::map<Int, EulerFactorData> local;
  auto F = [&](const FactoredNat& d) {
    Rational out = 1;
    for (const auto& [p, k] : d.factors()) {
      if (k >= 3) return Rational(0);
      auto it = local.find(p);
      if (it == local.end()) it = local.emplace(p, EulerFactorData::at(r, p)).first;
      out *= (k == 1) ? it->second.a_r : it->second.b_r;
    }
    return out;
  };
  for (Int m = 1; m <= m_bound; ++m) {
    Rational sum = 0;
    for (Int d : divisors(factorize(m))) {
      const Rational f = F(factorize(d));
      if (f != 0) sum += f * Rational(big_pow(m / d, r - 1));
    }
    if (sum != g[m - 1]) return false;
  }
  return true;
}

AsymptoticReport asymptotic_report(unsigned r, Int x, Int prime_bound) {
  const std::vector<SplitValue> split = g_r_split(r, x);
  // Common denominator: the product of all primes up to x.
  BigInt common = 1;
  for (Int p : primes_up_to(x)) common *= p;
  BigInt numerator = 0;
  for (const auto& v : split) numerator += v.numerator * (common / v.denominator);

  AsymptoticReport report;
  report.r = r;
  report.x = x;
  report.prime_bound = prime_bound;
  report.empirical = Rational(numerator, common);
  report.alpha = alpha_r(r, prime_bound);
  report.alpha_tail = alpha_tail_estimate(r, prime_bound);
  report.predicted = report.alpha / r * std::pow(static_cast<double>(x), static_cast<double>(r));
  report.ratio = report.empirical.convert_to<double>() / report.predicted;
  return report;
}

}  // namespace ramsum
