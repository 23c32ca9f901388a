#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ramsum {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Input is valid but too large for an oracle-scale computation.
class ScaleError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A fixed-width intermediate result does not fit in 64 bits.
class OverflowError : public std::overflow_error {
public:
  using std::overflow_error::overflow_error;
};

/// Two independent evaluation routes disagreed, or an exact division left a
/// remainder. Always indicates a bug.
class ConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Polynomial text that does not match the grammar.
class ParseError : public DomainError {
public:
  ParseError(const std::string& what, std::size_t position)
      : DomainError(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

}  // namespace ramsum
