#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "ramsum/congruences.hpp"
#include "ramsum/moduli.hpp"
#include "ramsum/polynomial.hpp"
#include "ramsum/rational.hpp"

namespace ramsum {

/// Largest lcm the definitional oracles will sum over.
inline constexpr Int kOracleLimit = 1'000'000;

/// How a sum of products of Ramanujan sums is evaluated.
///
/// `fast` picks a closed form whenever its hypotheses hold and otherwise
/// falls back to `general`, the divisor-tuple convolution evaluated prime by
/// prime. `direct` sums the definition term by term.
enum class SumStrategy { fast, general, direct };

/// Shift vector a = (a_1, ..., a_r), r >= 1, for the linear systems x - a_i.
class ShiftVector {
public:
  explicit ShiftVector(std::vector<Int> shifts);
  ShiftVector(std::initializer_list<Int> shifts) : ShiftVector(std::vector<Int>(shifts)) {}

  std::span<const Int> values() const noexcept { return shifts_; }
  std::size_t arity() const noexcept { return shifts_.size(); }
  Int operator[](std::size_t i) const { return shifts_[i]; }

private:
  std::vector<Int> shifts_;
};

// E_G(m_1, ..., m_r) = (1/m) sum_{k=1}^{m} prod_i c_{m_i}(g_i(k)).
Int e_g_direct(const PolySystem& system, const ModuliTuple& moduli);
Int e_g_fast(const PolySystem& system, const ModuliTuple& moduli);

// R_G(m_1, ..., m_r) = sum over k <= m, gcd(k, m) = 1 of prod_i c_{m_i}(g_i(k)).
Int r_g_direct(const PolySystem& system, const ModuliTuple& moduli);
Int r_g_fast(const PolySystem& system, const ModuliTuple& moduli);

Int e_g(const PolySystem& system, const ModuliTuple& moduli, SumStrategy strategy = SumStrategy::fast);
Int r_g(const PolySystem& system, const ModuliTuple& moduli, SumStrategy strategy = SumStrategy::fast);

/// E for the system (x - a_1, ..., x - a_r). The fast path covers r = 2 with
/// |a_1 - a_2| = 1: (-1)^omega(m) when m_1 = m_2 = m is squarefree, else 0.
Int e_shift(const ShiftVector& a, const ModuliTuple& moduli, SumStrategy strategy = SumStrategy::fast);

/// R for the system (x - a_1, ..., x - a_r). Fast paths: pairwise coprime
/// moduli give mu(m) prod c_{m_i}(a_i); r = 2 with gcd(a_i, m_i) = 1 and
/// |a_1 - a_2| = 1 gives (-1)^omega(g) psi(g), g = gcd(m_1, m_2), for
/// squarefree moduli and 0 otherwise.
Int r_shift(const ShiftVector& a, const ModuliTuple& moduli, SumStrategy strategy = SumStrategy::fast);

/// R(m_1, ..., m_r), the all-ones shift. `fast` multiplies the prime-power
/// closed form, `general` runs the convolution and `direct` the definition.
Int r_func(const ModuliTuple& moduli, SumStrategy strategy = SumStrategy::fast);

/// Exponents of one prime sorted descending, e = e_1 = ... = e_s > e_{s+1}.
class PrimePowerProfile {
public:
  /// Exponents may arrive in any order but must all be at least one.
  PrimePowerProfile(Int p, std::vector<unsigned> exponents);

  Int prime() const noexcept { return p_; }
  std::span<const unsigned> exponents() const noexcept { return exponents_; }
  unsigned r() const noexcept { return static_cast<unsigned>(exponents_.size()); }
  unsigned top() const noexcept { return exponents_.front(); }
  unsigned top_multiplicity() const noexcept { return s_; }
  /// sum e_j - r - e + 1
  Int v() const noexcept { return v_; }

private:
  Int p_;
  std::vector<unsigned> exponents_;
  unsigned s_;
  Int v_;
};

/// h_s(x) = ((x - 1)^(s-1) + (-1)^s) / x; the division is checked exact.
Int h_poly(unsigned s, Int x);

/// (p - 1)^r + (-1)^r (p - 2), the value of R(p, ..., p).
Int x_poly(unsigned r, Int p);

/// R(p^e_1, ..., p^e_r) in closed form.
Int r_prime_power(const PrimePowerProfile& profile);

/// g_r(m) = R(m, ..., m) / m, assembled from prime-power values.
Rational g_r_value(unsigned r, const FactoredNat& m);

}  // namespace ramsum
