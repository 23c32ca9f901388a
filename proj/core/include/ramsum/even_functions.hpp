#pragma once

#include <span>
#include <vector>

#include "ramsum/arith.hpp"
#include "ramsum/moduli.hpp"
#include "ramsum/rational.hpp"

namespace ramsum {

/// An s-even function: f(n) = f(gcd(n, s)) for every integer n.
///
/// Only the values on the divisors of s are stored, in increasing divisor
/// order, so the defining property holds by construction.
class SEvenFunction {
public:
  /// `values[i]` is f at the i-th divisor of s in increasing order.
  SEvenFunction(Int s, std::vector<Rational> values);

  template <typename Fn>
  static SEvenFunction from_function(Int s, Fn&& fn) {
    std::vector<Rational> values;
    for (Int d : ramsum::divisors(factorize(checked_period(s)))) values.emplace_back(fn(d));
    return SEvenFunction(s, std::move(values));
  }

  /// c_n viewed as an s-even function; requires n | s.
  static SEvenFunction ramanujan(Int n, Int s);
  static SEvenFunction constant(Int s, const Rational& value);
  static SEvenFunction zero(Int s) { return constant(s, 0); }

  Int period() const noexcept { return s_; }
  std::span<const Int> divisors() const noexcept { return divisors_; }
  std::span<const Rational> values() const noexcept { return values_; }
  const Rational& at_divisor(Int d) const;

  friend bool operator==(const SEvenFunction&, const SEvenFunction&) = default;

private:
  static Int checked_period(Int s);

  Int s_;
  std::vector<Int> divisors_;
  std::vector<Rational> values_;
};

/// Ramanujan-Fourier coefficients alpha(d), d | s, with
/// f(n) = sum_{d | s} alpha(d) c_d(n).
class FourierCoefficients {
public:
  FourierCoefficients(Int s, std::vector<Rational> alpha);

  Int period() const noexcept { return s_; }
  std::span<const Int> divisors() const noexcept { return divisors_; }
  std::span<const Rational> alpha() const noexcept { return alpha_; }
  const Rational& at(Int d) const;

  friend bool operator==(const FourierCoefficients&, const FourierCoefficients&) = default;

private:
  Int s_;
  std::vector<Int> divisors_;
  std::vector<Rational> alpha_;
};

Rational evaluate(const SEvenFunction& f, Int n);

/// alpha(d) = (1/s) sum_{e | s} f(e) c_{s/e}(s/d).
FourierCoefficients fourier_coefficients(const SEvenFunction& f);

/// f(e) = sum_{d | s} alpha(d) c_d(e) on every divisor e.
SEvenFunction from_fourier(const FourierCoefficients& coeffs);

enum class ConvolutionStrategy { naive, spectral };

/// (f (x) g)(n) = sum_{k mod s} f(k) g(n - k). `spectral` multiplies
/// coefficients, alpha(d) = s alpha_f(d) alpha_g(d), and inverts.
SEvenFunction cauchy_convolve(const SEvenFunction& f, const SEvenFunction& g,
                              ConvolutionStrategy strategy = ConvolutionStrategy::spectral);

/// sum_{1 <= k <= s, gcd(k, s) = 1} f(a - k), computed directly and as
/// phi(s) sum_{d | s} alpha(d) mu(d) c_d(a) / phi(d). A mismatch throws
/// ConsistencyError.
Rational coprime_shift_sum(const SEvenFunction& f, Int a);

enum class TStrategy { closed, spectral, direct };

/// Largest m^r the direct T_a summation accepts.
inline constexpr Int kTDirectLimit = 10'000'000;

/// T_a(m_1, ..., m_r): the sum over k_1, ..., k_{r-1}, l (mod m) with
/// gcd(l, m) = 1 of c_{m_1}(k_1) ... c_{m_{r-1}}(k_{r-1}) c_{m_r}(k_1 + ... + k_{r-1} + l - a).
Int t_a(const ModuliTuple& moduli, Int a, TStrategy strategy = TStrategy::closed);

}  // namespace ramsum
