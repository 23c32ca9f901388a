#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ramsum/checked.hpp"

namespace ramsum {

/// Univariate polynomial with integer coefficients, constant term first.
/// Canonical: no trailing zero coefficients, so the zero polynomial is empty.
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coefficients);
  IntPolynomial(std::initializer_list<Int> coefficients) : IntPolynomial(std::vector<Int>(coefficients)) {}

  /// x - a
  static IntPolynomial shift(Int a) { return IntPolynomial({checked_sub(0, a), 1}); }

  std::span<const Int> coefficients() const noexcept { return coefficients_; }
  bool is_zero() const noexcept { return coefficients_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }

  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
  std::vector<Int> coefficients_;
};

/// Parses signed terms in x with optional coefficients and `^` powers, for
/// example "x^2-1", "-2x^3+x-7" or "3*x + 5". Whitespace is ignored and like
/// terms are combined. Throws ParseError carrying the offending position.
IntPolynomial parse_polynomial(std::string_view text);

/// g(x) mod n in [0, n), by Horner's rule with every step reduced mod n.
Int poly_eval_mod(const IntPolynomial& g, Int x, Int n);

/// An ordered system G = (g_1, ..., g_r), r >= 1.
class PolySystem {
public:
  explicit PolySystem(std::vector<IntPolynomial> polys);
  PolySystem(std::initializer_list<IntPolynomial> polys) : PolySystem(std::vector<IntPolynomial>(polys)) {}

  /// (x - a_1, ..., x - a_r)
  static PolySystem shifts(std::span<const Int> a);
  /// r copies of g.
  static PolySystem repeated(const IntPolynomial& g, std::size_t r);

  std::span<const IntPolynomial> polys() const noexcept { return polys_; }
  std::size_t arity() const noexcept { return polys_.size(); }
  const IntPolynomial& operator[](std::size_t i) const { return polys_[i]; }

private:
  std::vector<IntPolynomial> polys_;
};

}  // namespace ramsum
