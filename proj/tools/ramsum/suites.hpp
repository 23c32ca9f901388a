#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramsum/checked.hpp"

namespace ramsum::suites {

/// Outcome of one invariant suite. Only the first failure is described so
/// that the report stays short and byte-stable.
struct SuiteResult {
  std::string name;
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  std::string first_failure;

  bool passed() const noexcept { return failures == 0; }
  void check(bool ok, const std::string& what);
  void absorb(const SuiteResult& other);
};

// Sum and orthogonality relations of c_n(k) for n, l <= max_n.
SuiteResult orthogonality(Int max_n = 60);

// Sum over units k of c_n(k - a) = mu(n) c_n(a), n <= max_n, |a| <= max_a.
SuiteResult cohen(Int max_n = 200, Int max_a = 50);

// Fast against definitional E_G and R_G on the seven-polynomial corpus,
// every arity up to max_r and every modulus up to max_m.
SuiteResult theorems(Int max_m = 20, unsigned max_r = 3);

// Closed forms for adjacent shifts, x^2 - 1 and pairwise coprime moduli.
// max_n bounds the x^2 - 1 checks; the shift checks use min(max_n, 60) and
// the coprime checks min(max_n, 30).
SuiteResult corollaries(Int max_n = 500);

// Prime-power values of R for p in {2, 3, 5}, r <= 4, exponents <= max_e.
SuiteResult prime_power(unsigned max_e = 3);

// Closed, spectral and direct T_a agree for lcm <= max_m, r <= 3, |a| <= 6;
// T_a is multiplicative on coprime tuples with moduli <= 30.
SuiteResult t_a(Int max_m = 12);

// E_G, R_G, N_G, eta_G and T_a factor over coprime decompositions;
// `cases` random decompositions each from a fixed seed.
SuiteResult multiplicativity(int cases = 500, std::uint64_t seed = 0x5eed);

// g_r = F_r * id_{r-1} for m <= m_bound and r in {2, 3, 4}.
SuiteResult dirichlet(Int m_bound = 2000);

// CRT against residue scans (lcm <= max_crt_lcm), coprime counts in residue
// classes (n <= max_coprime), Brauer-Rademacher (n, k <= max_br) and the
// two-sided coprime shift sum (period <= max_period).
SuiteResult lemmas(Int max_br = 300, Int max_coprime = 500, Int max_crt_lcm = 2000, Int max_period = 60);

/// Names accepted by `run`, in canonical order; "all" runs each of them.
const std::vector<std::string>& suite_names();

/// Runs one named suite (or all of them). `max` overrides the main range
/// parameter of each suite.
std::vector<SuiteResult> run(const std::string& name, std::optional<Int> max = std::nullopt);

}  // namespace ramsum::suites
