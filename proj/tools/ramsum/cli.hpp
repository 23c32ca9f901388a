#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramsum/checked.hpp"
#include "ramsum/polynomial.hpp"

namespace ramsum::cli {

enum class Subcommand { c, E, R, T, roots, alpha, asymptotic, verify };
enum class OutputFormat { plain, json, csv };

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kDomainError = 2,
  kScaleError = 3,
  kVerificationFailure = 4,
};

/// Bad flags, malformed lists or arity mismatches.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Inclusive modulus range for table mode.
struct Range {
  Int lo;
  Int hi;
};

/// A validated command line. Fields not used by the subcommand stay empty.
struct CommandRequest {
  Subcommand subcommand = Subcommand::c;
  std::vector<Int> moduli;
  std::vector<std::string> poly_texts;
  std::vector<IntPolynomial> polys;
  std::vector<Int> shifts;
  std::optional<Int> a;
  std::optional<Int> r;
  std::optional<Int> x;
  std::optional<Int> prime_bound;
  std::string strategy;
  OutputFormat format = OutputFormat::plain;
  std::optional<Range> range;
  bool units_only = false;
  std::string suite;
  std::optional<Int> max;
};

/// argv without the program name. Throws UsageError, or ParseError for a
/// polynomial syntax error.
CommandRequest parse_args(const std::vector<std::string>& argv);

struct Outcome {
  int exit_code = kSuccess;
  std::string out;
};

/// Runs a validated request. Library errors propagate.
Outcome execute(const CommandRequest& request);

/// parse_args + execute with every error mapped to its exit code; in json
/// mode errors are printed as {"error": {...}} on `out`, otherwise as text
/// on `err`.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

/// Comma-separated integers without spaces, e.g. "3,3".
std::vector<Int> parse_int_list(const std::string& text, const std::string& flag);

std::string subcommand_name(Subcommand s);

}  // namespace ramsum::cli
