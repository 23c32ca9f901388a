#include "ramsum/polynomial.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

namespace ramsum {
namespace {

constexpr Int kMaxDegree = 1000;

class PolyParser {
public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  IntPolynomial parse() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
    std::vector<Int> coefficients;
    bool first = true;
    while (true) {
      skip_space();
      if (pos_ == text_.size()) break;
      int sign = 1;
      const char c = text_[pos_];
      if (c == '+' || c == '-') {
        sign = (c == '-') ? -1 : 1;
        ++pos_;
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      auto [coefficient, power] = term();
      if (static_cast<std::size_t>(power) >= coefficients.size()) coefficients.resize(power + 1, 0);
      coefficients[power] = checked_add(coefficients[power], checked_mul(sign, coefficient));
      first = false;
    }
    return IntPolynomial(std::move(coefficients));
  }

private:
  std::pair<Int, Int> term() {
    skip_space();
    const std::size_t start = pos_;
    bool has_number = false;
    Int coefficient = 1;
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      coefficient = number();
      has_number = true;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        skip_space();
        if (pos_ == text_.size() || text_[pos_] != 'x') throw ParseError("expected 'x' after '*'", pos_);
      }
    }
    if (pos_ < text_.size() && text_[pos_] == 'x') {
      ++pos_;
      skip_space();
      Int power = 1;
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        skip_space();
        const std::size_t exp_pos = pos_;
        if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
          throw ParseError("expected exponent after '^'", pos_);
        power = number();
        if (power > kMaxDegree) throw ParseError("exponent exceeds " + std::to_string(kMaxDegree), exp_pos);
      }
      return {coefficient, power};
    }
    if (!has_number) {
      if (pos_ == text_.size()) throw ParseError("expected term", pos_);
      throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_ == start ? start : pos_);
    }
    return {coefficient, 0};
  }

  Int number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    Int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc()) throw ParseError("integer out of range", start);
    return value;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPolynomial::IntPolynomial(std::vector<Int> coefficients) : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Int c = coefficients_[i];
    if (c == 0) continue;
    if (c < 0) out += '-';
    else if (!out.empty()) out += '+';
    // Magnitude as unsigned so INT64_MIN prints correctly.
    const auto mag = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    if (mag != 1 || i == 0) out += std::to_string(mag);
    if (i >= 1) out += 'x';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out;
}

IntPolynomial parse_polynomial(std::string_view text) { return PolyParser(text).parse(); }

Int poly_eval_mod(const IntPolynomial& g, Int x, Int n) {
  if (n < 1) throw DomainError("poly_eval_mod requires n >= 1");
  const auto coeffs = g.coefficients();
  const Int xr = mod_floor(x, n);
  Int128 acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = (acc * xr + mod_floor(*it, n)) % n;
  return static_cast<Int>(acc);
}

PolySystem::PolySystem(std::vector<IntPolynomial> polys) : polys_(std::move(polys)) {
  if (polys_.empty()) throw DomainError("polynomial system must be nonempty");
}

PolySystem PolySystem::shifts(std::span<const Int> a) {
  std::vector<IntPolynomial> polys;
  polys.reserve(a.size());
  for (Int ai : a) polys.push_back(IntPolynomial::shift(ai));
  return PolySystem(std::move(polys));
}

PolySystem PolySystem::repeated(const IntPolynomial& g, std::size_t r) {
  return PolySystem(std::vector<IntPolynomial>(r, g));
}

}  // namespace ramsum
