#include "ramsum/even_functions.hpp"

#include <algorithm>
#include <string>

#include "ramsum/ramanujan.hpp"

namespace ramsum {
namespace {

std::size_t divisor_index(std::span<const Int> divs, Int d) {
  auto it = std::lower_bound(divs.begin(), divs.end(), d);
  if (it == divs.end() || *it != d) throw DomainError(std::to_string(d) + " is not a divisor of the period");
  return static_cast<std::size_t>(it - divs.begin());
}

}  // namespace

Int SEvenFunction::checked_period(Int s) {
  if (s < 1) throw DomainError("period must be positive");
  return s;
}

SEvenFunction::SEvenFunction(Int s, std::vector<Rational> values)
    : s_(checked_period(s)), divisors_(ramsum::divisors(factorize(s))), values_(std::move(values)) {
  if (values_.size() != divisors_.size())
    throw DomainError("s-even function needs one value per divisor of " + std::to_string(s));
}

SEvenFunction SEvenFunction::ramanujan(Int n, Int s) {
  if (n < 1 || s < 1 || s % n != 0) throw DomainError("c_n is s-even only for n | s");
  const FactoredNat fn = factorize(n);
  return from_function(s, [&](Int d) { return make_rational(ramanujan_sum(fn, d)); });
}

SEvenFunction SEvenFunction::constant(Int s, const Rational& value) {
  return from_function(s, [&](Int) { return value; });
}

const Rational& SEvenFunction::at_divisor(Int d) const { return values_[divisor_index(divisors_, d)]; }

FourierCoefficients::FourierCoefficients(Int s, std::vector<Rational> alpha)
    : s_(s), divisors_(s >= 1 ? ramsum::divisors(factorize(s)) : std::vector<Int>{}), alpha_(std::move(alpha)) {
  if (s < 1) throw DomainError("period must be positive");
  if (alpha_.size() != divisors_.size())
    throw DomainError("coefficient list needs one entry per divisor of " + std::to_string(s));
}

const Rational& FourierCoefficients::at(Int d) const { return alpha_[divisor_index(divisors_, d)]; }

Rational evaluate(const SEvenFunction& f, Int n) {
  const Int s = f.period();
  return f.at_divisor(std::gcd(mod_floor(n, s), s));
}

FourierCoefficients fourier_coefficients(const SEvenFunction& f) {
  const Int s = f.period();
  const auto divs = f.divisors();
  std::vector<Rational> alpha;
  alpha.reserve(divs.size());
  for (Int d : divs) {
    Rational acc = 0;
    for (std::size_t i = 0; i < divs.size(); ++i) {
      const Int e = divs[i];
      const Int c = ramanujan_sum(s / e, s / d);
      if (c != 0) acc += f.values()[i] * c;
    }
    alpha.push_back(acc / s);
  }
  return FourierCoefficients(s, std::move(alpha));
}

SEvenFunction from_fourier(const FourierCoefficients& coeffs) {
  const auto divs = coeffs.divisors();
  return SEvenFunction::from_function(coeffs.period(), [&](Int e) {
    Rational acc = 0;
    for (std::size_t i = 0; i < divs.size(); ++i)
      if (coeffs.alpha()[i] != 0) acc += coeffs.alpha()[i] * ramanujan_sum(divs[i], e);
    return acc;
  });
}

SEvenFunction cauchy_convolve(const SEvenFunction& f, const SEvenFunction& g, ConvolutionStrategy strategy) {
  const Int s = f.period();
  if (g.period() != s)
    throw DomainError("Cauchy convolution needs equal periods, got " + std::to_string(s) + " and " +
                      std::to_string(g.period()));
  if (strategy == ConvolutionStrategy::naive) {
    return SEvenFunction::from_function(s, [&](Int n) {
      Rational acc = 0;
      for (Int k = 0; k < s; ++k) acc += evaluate(f, k) * evaluate(g, n - k);
      return acc;
    });
  }
  const FourierCoefficients af = fourier_coefficients(f);
  const FourierCoefficients ag = fourier_coefficients(g);
  std::vector<Rational> alpha(af.alpha().size());
  for (std::size_t i = 0; i < alpha.size(); ++i) alpha[i] = af.alpha()[i] * ag.alpha()[i] * s;
  return from_fourier(FourierCoefficients(s, std::move(alpha)));
}

Rational coprime_shift_sum(const SEvenFunction& f, Int a) {
  const Int s = f.period();
  Rational direct = 0;
  for (Int k = 1; k <= s; ++k)
    if (std::gcd(k, s) == 1) direct += evaluate(f, checked_sub(a, k));

  const FourierCoefficients coeffs = fourier_coefficients(f);
  Rational spectral = 0;
  for (std::size_t i = 0; i < coeffs.divisors().size(); ++i) {
    const Int d = coeffs.divisors()[i];
    const FactoredNat fd = factorize(d);
    const int mu = mobius(fd);
    if (mu == 0 || coeffs.alpha()[i] == 0) continue;
    spectral += coeffs.alpha()[i] * make_rational(checked_mul(mu, ramanujan_sum(fd, a)), euler_phi(fd));
  }
  spectral *= euler_phi(s);

  if (direct != spectral)
    throw ConsistencyError("coprime shift sum mismatch: direct " + direct.str() + " vs coefficient form " +
                           spectral.str());
  return direct;
}

Int t_a(const ModuliTuple& moduli, Int a, TStrategy strategy) {
  const std::size_t r = moduli.arity();
  const FactoredNat& lcm = moduli.lcm();
  const Int m = lcm.value();

  switch (strategy) {
    case TStrategy::closed: {
      if (!moduli.all_equal()) return 0;
      return checked_mul(checked_mul(checked_pow(m, static_cast<unsigned>(r - 1)), mobius(lcm)),
                         ramanujan_sum(lcm, a));
    }
    case TStrategy::spectral: {
      SEvenFunction kernel = SEvenFunction::ramanujan(moduli[0], m);
      for (std::size_t i = 1; i < r; ++i)
        kernel = cauchy_convolve(kernel, SEvenFunction::ramanujan(moduli[i], m), ConvolutionStrategy::spectral);
      return to_int(coprime_shift_sum(kernel, a));
    }
    case TStrategy::direct: {
      Int cells = 1;
      for (std::size_t i = 0; i < r; ++i) {
        cells = checked_mul(cells, m);
        if (cells > kTDirectLimit) throw ScaleError("direct T_a limited to m^r <= " + std::to_string(kTDirectLimit));
      }
      std::vector<std::vector<Int>> c_tables(r);
      for (std::size_t i = 0; i < r; ++i) {
        const FactoredNat mi = factorize(moduli[i]);
        for (Int j = 0; j < moduli[i]; ++j) c_tables[i].push_back(ramanujan_sum(mi, j));
      }
      // Odometer over (k_1, ..., k_{r-1}, l) in [0, m)^r.
      std::vector<Int> digit(r, 0);
      Int total = 0;
      for (Int cell = 0; cell < cells; ++cell) {
        const Int l = digit[r - 1];
        if (std::gcd(l, m) == 1) {
          Int term = 1;
          Int shift = l - a;
          for (std::size_t i = 0; i + 1 < r && term != 0; ++i) {
            term = checked_mul(term, c_tables[i][digit[i] % moduli[i]]);
            shift += digit[i];
          }
          if (term != 0) total = checked_add(total, checked_mul(term, c_tables[r - 1][mod_floor(shift, moduli[r - 1])]));
        }
        for (std::size_t i = 0; i < r && ++digit[i] == m; ++i) digit[i] = 0;
      }
      return total;
    }
  }
  throw DomainError("unknown T_a strategy");
}

}  // namespace ramsum
