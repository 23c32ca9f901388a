#pragma once

#include <span>

#include "ramsum/moduli.hpp"
#include "ramsum/polynomial.hpp"

namespace ramsum {

/// Number of solutions x (mod modulus) of a simultaneous congruence system.
struct RootCount {
  Int count;
  Int modulus;

  friend bool operator==(const RootCount&, const RootCount&) = default;
};

enum class RootStrategy { direct, multiplicative };

/// Largest residue range either strategy will scan.
inline constexpr Int kRootScanLimit = 1'000'000'000;

/// Counts x (mod m), m = lcm(m_1, ..., m_r), with g_i(x) = 0 (mod m_i) for
/// every i; with `units_only` additionally gcd(x, m) = 1.
///
/// `direct` scans all residues mod m. `multiplicative` counts per prime power
/// of m and multiplies the local counts.
RootCount count_roots(const PolySystem& system, const ModuliTuple& moduli, bool units_only,
                      RootStrategy strategy = RootStrategy::multiplicative);

/// Local count at (p^e_1, ..., p^e_r): residues x mod p^max(e) with
/// g_i(x) = 0 (mod p^e_i), and p not dividing x when `units_only` and
/// max(e) > 0. Scans the residues directly.
Int local_root_count(const PolySystem& system, Int p, std::span<const unsigned> exponents, bool units_only);

/// Closed form for the linear system x = a_i (mod d_i): 1 when
/// gcd(d_i, d_j) | a_i - a_j for all pairs (and, with `units_only`,
/// gcd(d_i, a_i) = 1 for all i), otherwise 0.
Int linear_system_root_count(std::span<const Int> a, std::span<const Int> d, bool units_only);

}  // namespace ramsum
