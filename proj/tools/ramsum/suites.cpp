#include "suites.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "ramsum/asymptotics.hpp"
#include "ramsum/congruences.hpp"
#include "ramsum/even_functions.hpp"
#include "ramsum/ramanujan.hpp"
#include "ramsum/sums_products.hpp"

namespace ramsum::suites {
namespace {

std::string join(std::span<const Int> v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

std::string join(const PolySystem& g) {
  std::string out;
  for (std::size_t i = 0; i < g.arity(); ++i) out += (i ? ";" : "") + g[i].to_string();
  return out;
}

std::string mismatch(const std::string& what, Int got, Int want, const std::string& where) {
  return what + " " + std::to_string(got) + " != " + std::to_string(want) + " at " + where;
}

const std::vector<IntPolynomial>& corpus() {
  static const std::vector<IntPolynomial> polys = [] {
    std::vector<IntPolynomial> v;
    for (const char* text : {"x", "x-1", "x-2", "x+1", "x^2-1", "x^2+x+1", "2x-1"}) v.push_back(parse_polynomial(text));
    return v;
  }();
  return polys;
}

/// Calls `body(tuple)` for every tuple in [1, max]^r in lexicographic order.
template <typename Body>
void for_each_tuple(std::size_t r, Int max, Body&& body) {
  std::vector<Int> t(r, 1);
  while (true) {
    body(std::as_const(t));
    std::size_t i = r;
    while (i > 0 && t[i - 1] == max) t[--i] = 1;
    if (i == 0) return;
    ++t[i - 1];
  }
}

Int sign_of_omega(const FactoredNat& n) { return distinct_prime_count(n) % 2 ? -1 : 1; }

Int odd_part(Int n, unsigned& twos) {
  twos = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++twos;
  }
  return n;
}

Int random_in(std::mt19937_64& rng, Int lo, Int hi) { return lo + static_cast<Int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); }

/// Coprime decomposition (m_i), (n_i) with gcd(prod m, prod n) = 1 and
/// lcm(m_i n_i) <= max_lcm; neither side is all ones.
struct Decomposition {
  std::vector<Int> m, n, mn;
};

Decomposition random_decomposition(std::mt19937_64& rng, std::size_t r, Int max_modulus, Int max_lcm) {
  while (true) {
    Decomposition d;
    Int pm = 1, pn = 1, l = 1;
    for (std::size_t i = 0; i < r; ++i) {
      d.m.push_back(random_in(rng, 1, max_modulus));
      d.n.push_back(random_in(rng, 1, max_modulus));
      d.mn.push_back(d.m.back() * d.n.back());
      pm *= d.m.back();
      pn *= d.n.back();
      l = std::lcm(l, d.mn.back());
    }
    if (pm > 1 && pn > 1 && std::gcd(pm, pn) == 1 && l <= max_lcm) return d;
  }
}

}  // namespace

void SuiteResult::check(bool ok, const std::string& what) {
  ++cases;
  if (ok) return;
  if (failures == 0) first_failure = what;
  ++failures;
}

void SuiteResult::absorb(const SuiteResult& other) {
  cases += other.cases;
  if (failures == 0 && other.failures > 0) first_failure = other.first_failure;
  failures += other.failures;
}

SuiteResult orthogonality(Int max_n) {
  SuiteResult res{"orthogonality", 0, 0, {}};
  const RamanujanTable c(max_n);
  for (Int n = 1; n <= max_n; ++n) {
    Int sum = 0;
    for (Int k = 1; k <= n; ++k) sum += c.at(n, k);
    res.check(sum == (n == 1 ? 1 : 0), mismatch("row sum", sum, n == 1 ? 1 : 0, "n=" + std::to_string(n)));
  }
  for (Int l = 1; l <= max_n; ++l)
    for (Int n = 1; n <= max_n; ++n) {
      const Int L = std::lcm(l, n);
      Int raw = 0;
      for (Int k = 1; k <= L; ++k) raw = checked_add(raw, c.at(l, k) * c.at(n, k));
      const Int want = l == n ? euler_phi(n) : 0;
      const std::string where = "l=" + std::to_string(l) + " n=" + std::to_string(n);
      res.check(raw % L == 0 && raw / L == want, mismatch("mean product", raw / L, want, where));
    }
  return res;
}

SuiteResult cohen(Int max_n, Int max_a) {
  SuiteResult res{"cohen", 0, 0, {}};
  const RamanujanTable c(max_n);
  for (Int n = 1; n <= max_n; ++n) {
    const auto cn = SEvenFunction::ramanujan(n, n);
    for (Int a = -max_a; a <= max_a; ++a) {
      Int lhs = 0;
      for (Int k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) lhs += c.at(n, k - a);
      const Int rhs = mobius(n) * c.at(n, a);
      const std::string where = "n=" + std::to_string(n) + " a=" + std::to_string(a);
      res.check(lhs == rhs, mismatch("unit sum", lhs, rhs, where));
      res.check(r_shift(ShiftVector{a}, ModuliTuple{n}, SumStrategy::general) == rhs, "R_(a) general at " + where);
      res.check(coprime_shift_sum(cn, a) == rhs, "coprime shift sum at " + where);
    }
  }
  return res;
}

SuiteResult theorems(Int max_m, unsigned max_r) {
  SuiteResult res{"theorems", 0, 0, {}};
  const auto& polys = corpus();
  for (std::size_t r = 1; r <= max_r; ++r) {
    // Every system of r corpus polynomials, indexed in base 7.
    std::vector<PolySystem> systems;
    std::size_t count = 1;
    for (std::size_t i = 0; i < r; ++i) count *= polys.size();
    for (std::size_t code = 0; code < count; ++code) {
      std::vector<IntPolynomial> g;
      for (std::size_t i = 0, c = code; i < r; ++i, c /= polys.size()) g.push_back(polys[c % polys.size()]);
      systems.emplace_back(std::move(g));
    }
    for_each_tuple(r, max_m, [&](const std::vector<Int>& t) {
      const ModuliTuple m(t);
      for (const auto& g : systems) {
        // The location string is only built for a mismatch.
        auto where = [&] { return "G=(" + join(g) + ") m=(" + join(t) + ")"; };
        const Int ef = e_g_fast(g, m), ed = e_g_direct(g, m);
        res.check(ef == ed, ef == ed ? std::string() : mismatch("E fast", ef, ed, where()));
        const Int rf = r_g_fast(g, m), rd = r_g_direct(g, m);
        res.check(rf == rd, rf == rd ? std::string() : mismatch("R fast", rf, rd, where()));
      }
    });
  }
  return res;
}

SuiteResult corollaries(Int max_n) {
  SuiteResult res{"corollaries", 0, 0, {}};
  const Int pair_max = std::min<Int>(max_n, 60);
  const Int coprime_max = std::min<Int>(max_n, 30);

  // Adjacent shifts in E: (-1)^omega(m) for m_1 = m_2 = m squarefree.
  const std::vector<std::pair<Int, Int>> adjacent{{0, 1}, {1, 0}, {-3, -2}, {7, 6}};
  for (Int m1 = 1; m1 <= pair_max; ++m1)
    for (Int m2 = 1; m2 <= pair_max; ++m2) {
      const ModuliTuple m{m1, m2};
      const FactoredNat f1 = factorize(m1);
      const Int want = (m1 == m2 && is_squarefree(f1)) ? sign_of_omega(f1) : 0;
      for (const auto& [a1, a2] : adjacent) {
        const ShiftVector a{a1, a2};
        const std::string where = "a=(" + std::to_string(a1) + "," + std::to_string(a2) + ") m=(" + join(m.moduli()) + ")";
        for (auto s : {SumStrategy::fast, SumStrategy::general, SumStrategy::direct}) {
          const Int got = e_shift(a, m, s);
          res.check(got == want, mismatch("E_(a)", got, want, where));
        }
      }
    }

  // x^2 - 1: E and R by the power of two and the odd squarefree part.
  const PolySystem quadratic{parse_polynomial("x^2-1")};
  for (Int n = 1; n <= max_n; ++n) {
    unsigned j = 0;
    const Int odd = odd_part(n, j);
    const FactoredNat fo = factorize(odd);
    const bool sqf = is_squarefree(fo);
    const Int e_want = (sqf && (j == 0 || j == 2)) ? 1 : (sqf && j == 3) ? 2 : 0;
    const Int d_j[] = {1, 1, 4, 16};
    const Int r_want = (sqf && j <= 3) ? d_j[j] * dedekind_psi(fo) : 0;
    const ModuliTuple m{n};
    const std::string where = "n=" + std::to_string(n);
    for (auto s : {SumStrategy::fast, SumStrategy::direct}) {
      const Int e = e_g(quadratic, m, s), r = r_g(quadratic, m, s);
      res.check(e == e_want, mismatch("E_{x^2-1}", e, e_want, where));
      res.check(r == r_want, mismatch("R_{x^2-1}", r, r_want, where));
    }
  }

  // Pairwise coprime moduli: R_(a) = mu(m) prod c_{m_i}(a_i).
  std::mt19937_64 rng(0xc09);
  for (std::size_t r = 2; r <= 3; ++r)
    for_each_tuple(r, coprime_max, [&](const std::vector<Int>& t) {
      const ModuliTuple m(t);
      if (!m.pairwise_coprime()) return;
      for (int rep = 0; rep < 2; ++rep) {
        std::vector<Int> a(r);
        for (auto& ai : a) ai = random_in(rng, -6, 6);
        Int want = mobius(m.lcm());
        for (std::size_t i = 0; i < r; ++i) want *= ramanujan_sum(t[i], a[i]);
        const ShiftVector sv(a);
        const std::string where = "a=(" + join(a) + ") m=(" + join(t) + ")";
        for (auto s : {SumStrategy::fast, SumStrategy::general, SumStrategy::direct}) {
          const Int got = r_shift(sv, m, s);
          res.check(got == want, mismatch("R_(a) coprime", got, want, where));
        }
      }
    });

  // Adjacent unit shifts in R: (-1)^omega(g) psi(g), g = gcd(m_1, m_2).
  for (Int m1 = 1; m1 <= pair_max; ++m1)
    for (Int m2 = 1; m2 <= pair_max; ++m2) {
      const ModuliTuple m{m1, m2};
      const FactoredNat g = factorize(std::gcd(m1, m2));
      const bool sqf = is_squarefree(factorize(m1)) && is_squarefree(factorize(m2));
      const Int want = sqf ? sign_of_omega(g) * dedekind_psi(g) : 0;
      for (Int a1 = -3; a1 <= 3; ++a1)
        for (Int a2 : {a1 - 1, a1 + 1}) {
          if (std::gcd(a1, m1) != 1 || std::gcd(a2, m2) != 1) continue;
          const ShiftVector a{a1, a2};
          const std::string where = "a=(" + std::to_string(a1) + "," + std::to_string(a2) + ") m=(" + join(m.moduli()) + ")";
          for (auto s : {SumStrategy::fast, SumStrategy::general, SumStrategy::direct}) {
            const Int got = r_shift(a, m, s);
            res.check(got == want, mismatch("R_(a) adjacent", got, want, where));
          }
        }
    }
  return res;
}

SuiteResult prime_power(unsigned max_e) {
  SuiteResult res{"prime_power", 0, 0, {}};
  for (Int p : {2, 3, 5})
    for (std::size_t r = 1; r <= 4; ++r)
      for_each_tuple(r, max_e, [&](const std::vector<Int>& t) {
        std::vector<unsigned> e(t.begin(), t.end());
        std::vector<Int> moduli;
        for (unsigned ei : e) moduli.push_back(checked_pow(p, ei));
        const ModuliTuple m(moduli);
        const PrimePowerProfile prof(p, e);
        const Int closed = r_prime_power(prof);
        const std::string where = "p=" + std::to_string(p) + " e=(" + join(t) + ")";
        if (m.lcm().value() <= kOracleLimit) {
          const Int direct = r_func(m, SumStrategy::direct);
          res.check(closed == direct, mismatch("R closed", closed, direct, where));
        }
        const Int general = r_func(m, SumStrategy::general);
        res.check(closed == general, mismatch("R closed", closed, general, where + " (general)"));
        if (prof.top() == 1) {
          const Int want = checked_pow(p - 1, static_cast<unsigned>(r)) + (r % 2 ? -(p - 2) : (p - 2));
          res.check(closed == want, mismatch("R(p,...,p)", closed, want, where));
        }
        const unsigned s = prof.top_multiplicity();
        const bool zero = prof.top() > 1 && (s == 1 || (s % 2 == 1 && p == 2));
        res.check((closed == 0) == zero && closed >= 0, "zero classification at " + where);
      });
  return res;
}

SuiteResult t_a(Int max_m) {
  SuiteResult res{"t_a", 0, 0, {}};
  for (std::size_t r = 1; r <= 3; ++r)
    for_each_tuple(r, max_m, [&](const std::vector<Int>& t) {
      const ModuliTuple m(t);
      if (m.lcm().value() > max_m) return;
      for (Int a = -6; a <= 6; ++a) {
        const Int closed = ramsum::t_a(m, a, TStrategy::closed);
        const Int spectral = ramsum::t_a(m, a, TStrategy::spectral);
        const Int direct = ramsum::t_a(m, a, TStrategy::direct);
        const std::string where = "m=(" + join(t) + ") a=" + std::to_string(a);
        res.check(spectral == closed, mismatch("T spectral", spectral, closed, where));
        res.check(direct == closed, mismatch("T direct", direct, closed, where));
      }
    });
  std::mt19937_64 rng(0x7a);
  for (int i = 0; i < 1000; ++i) {
    const auto d = random_decomposition(rng, 1 + rng() % 3, 30, 1'000'000);
    const Int a = random_in(rng, -6, 6);
    const std::string where = "m=(" + join(d.m) + ") n=(" + join(d.n) + ") a=" + std::to_string(a);
    for (auto s : {TStrategy::closed, TStrategy::spectral}) {
      const Int whole = ramsum::t_a(ModuliTuple(d.mn), a, s);
      const Int parts = ramsum::t_a(ModuliTuple(d.m), a, s) * ramsum::t_a(ModuliTuple(d.n), a, s);
      res.check(whole == parts, mismatch("T product", whole, parts, where));
    }
  }
  return res;
}

SuiteResult multiplicativity(int cases, std::uint64_t seed) {
  SuiteResult res{"multiplicativity", 0, 0, {}};
  std::mt19937_64 rng(seed);
  const auto& polys = corpus();
  auto random_system = [&](std::size_t r) {
    std::vector<IntPolynomial> g;
    for (std::size_t i = 0; i < r; ++i) g.push_back(polys[rng() % polys.size()]);
    return PolySystem(std::move(g));
  };
  auto where = [](const char* fn, const PolySystem& g, const Decomposition& d) {
    return std::string(fn) + " G=(" + join(g) + ") m=(" + join(d.m) + ") n=(" + join(d.n) + ")";
  };
  for (int i = 0; i < cases; ++i) {
    const auto d = random_decomposition(rng, 1 + rng() % 3, 30, 100'000);
    const auto g = random_system(d.m.size());
    const Int whole = e_g_direct(g, ModuliTuple(d.mn));
    const Int parts = e_g_direct(g, ModuliTuple(d.m)) * e_g_direct(g, ModuliTuple(d.n));
    res.check(whole == parts, mismatch("product", whole, parts, where("E_G", g, d)));
  }
  for (int i = 0; i < cases; ++i) {
    const auto d = random_decomposition(rng, 1 + rng() % 3, 30, 100'000);
    const auto g = random_system(d.m.size());
    const Int whole = r_g_direct(g, ModuliTuple(d.mn));
    const Int parts = r_g_direct(g, ModuliTuple(d.m)) * r_g_direct(g, ModuliTuple(d.n));
    res.check(whole == parts, mismatch("product", whole, parts, where("R_G", g, d)));
  }
  for (bool units : {false, true})
    for (int i = 0; i < cases; ++i) {
      const auto d = random_decomposition(rng, 1 + rng() % 3, 30, 100'000);
      const auto g = random_system(d.m.size());
      auto count = [&](const std::vector<Int>& m) { return count_roots(g, ModuliTuple(m), units, RootStrategy::direct).count; };
      const Int whole = count(d.mn), parts = count(d.m) * count(d.n);
      res.check(whole == parts, mismatch("product", whole, parts, where(units ? "eta_G" : "N_G", g, d)));
    }
  for (int i = 0; i < cases; ++i) {
    const std::size_t r = 1 + rng() % 3;
    // Direct T_a needs lcm^r <= 10^7.
    const Int max_lcm = r == 1 ? 100'000 : r == 2 ? 3000 : 200;
    const auto d = random_decomposition(rng, r, 15, max_lcm);
    const Int a = random_in(rng, -6, 6);
    const Int whole = ramsum::t_a(ModuliTuple(d.mn), a, TStrategy::direct);
    const Int parts = ramsum::t_a(ModuliTuple(d.m), a, TStrategy::direct) * ramsum::t_a(ModuliTuple(d.n), a, TStrategy::direct);
    res.check(whole == parts, mismatch("product", whole, parts,
                                       "T_a m=(" + join(d.m) + ") n=(" + join(d.n) + ") a=" + std::to_string(a)));
  }
  return res;
}

SuiteResult dirichlet(Int m_bound) {
  SuiteResult res{"dirichlet", 0, 0, {}};
  for (unsigned r : {2u, 3u, 4u})
    res.check(dirichlet_decomposition_check(r, m_bound),
              "g_r != F_r * id_{r-1} for r=" + std::to_string(r) + " below " + std::to_string(m_bound));
  return res;
}

SuiteResult lemmas(Int max_br, Int max_coprime, Int max_crt_lcm, Int max_period) {
  SuiteResult res{"lemmas", 0, 0, {}};

  // CRT: every residue pair for moduli up to 60, then random systems of up
  // to three congruences whose moduli divide a random L <= max_crt_lcm.
  auto scan_check = [&](const std::vector<Congruence>& system) {
    Int L = 1;
    for (const auto& c : system) L = std::lcm(L, c.modulus);
    std::optional<CrtSolution> want;
    for (Int x = 0; x < L && !want; ++x)
      if (std::all_of(system.begin(), system.end(), [&](const Congruence& c) { return mod_floor(x - c.residue, c.modulus) == 0; }))
        want = CrtSolution{x, L};
    std::string where = "system";
    for (const auto& c : system) where += " " + std::to_string(c.residue) + " mod " + std::to_string(c.modulus);
    res.check(crt_solve(system) == want, "CRT at " + where);
  };
  const Int pair_max = std::min<Int>(max_crt_lcm, 60);
  for (Int d1 = 1; d1 <= pair_max; ++d1)
    for (Int d2 = 1; d2 <= pair_max; ++d2) {
      const Int L = std::lcm(d1, d2);
      if (L > max_crt_lcm) continue;
      std::vector<Int> hit(static_cast<std::size_t>(d1 * d2), -1);
      for (Int x = 0; x < L; ++x) hit[(x % d1) * d2 + x % d2] = x;
      for (Int a1 = 0; a1 < d1; ++a1)
        for (Int a2 = 0; a2 < d2; ++a2) {
          const std::vector<Congruence> system{{a1, d1}, {a2, d2}};
          const Int h = hit[a1 * d2 + a2];
          const auto want = h < 0 ? std::nullopt : std::optional<CrtSolution>(CrtSolution{h, L});
          res.check(crt_solve(system) == want, "CRT at " + std::to_string(a1) + " mod " + std::to_string(d1) + ", " +
                                                   std::to_string(a2) + " mod " + std::to_string(d2));
        }
    }
  std::mt19937_64 rng(0x1e3);
  for (int i = 0; i < 20000; ++i) {
    const auto divs = divisors(factorize(random_in(rng, 1, max_crt_lcm)));
    std::vector<Congruence> system;
    for (std::size_t j = 0, r = 1 + rng() % 3; j < r; ++j)
      system.push_back({random_in(rng, -100, 100), divs[rng() % divs.size()]});
    scan_check(system);
  }

  for (Int n = 1; n <= max_coprime; ++n)
    for (Int d : divisors(factorize(n)))
      for (Int x = 1; x <= d; ++x) {
        if (std::gcd(x, d) != 1) continue;
        const Int got = coprime_count_in_class(n, d, x), want = euler_phi(n) / euler_phi(d);
        res.check(got == want, mismatch("coprime count", got, want,
                                        "n=" + std::to_string(n) + " d=" + std::to_string(d) + " x=" + std::to_string(x)));
      }

  for (Int n = 1; n <= max_br; ++n)
    for (Int k = 1; k <= max_br; ++k) {
      const auto s = brauer_rademacher_sides(n, k);
      res.check(s.lhs == s.rhs, "Brauer-Rademacher at n=" + std::to_string(n) + " k=" + std::to_string(k));
    }

  // Both sides of the coprime shift sum are compared inside the call; a
  // disagreement surfaces as ConsistencyError. f(a - k) has period s in a.
  for (Int s = 1; s <= max_period; ++s) {
    std::vector<SEvenFunction> fs;
    for (Int d : divisors(factorize(s))) fs.push_back(SEvenFunction::ramanujan(d, s));
    fs.push_back(SEvenFunction::from_function(s, [&](Int) { return make_rational(random_in(rng, -9, 9), random_in(rng, 1, 4)); }));
    for (std::size_t i = 0; i < fs.size(); ++i)
      for (Int a = 0; a < s; ++a) {
        bool ok = true;
        try {
          coprime_shift_sum(fs[i], a);
        } catch (const ConsistencyError&) {
          ok = false;
        }
        res.check(ok, "coprime shift sum at s=" + std::to_string(s) + " f#" + std::to_string(i) + " a=" + std::to_string(a));
      }
  }
  return res;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"orthogonality", "cohen",            "theorems",  "corollaries", "prime_power",
                                              "t_a",           "multiplicativity", "dirichlet", "lemmas"};
  return names;
}

std::vector<SuiteResult> run(const std::string& name, std::optional<Int> max) {
  if (max && *max < 1) throw DomainError("--max must be positive");
  auto one = [&](const std::string& n) -> SuiteResult {
    if (n == "orthogonality") return max ? orthogonality(*max) : orthogonality();
    if (n == "cohen") return max ? cohen(*max) : cohen();
    if (n == "theorems") return max ? theorems(*max) : theorems();
    if (n == "corollaries") return max ? corollaries(*max) : corollaries();
    if (n == "prime_power") return max ? prime_power(static_cast<unsigned>(std::min<Int>(*max, 6))) : prime_power();
    if (n == "t_a") return max ? t_a(*max) : t_a();
    if (n == "multiplicativity") return max ? multiplicativity(static_cast<int>(std::min<Int>(*max, 1'000'000))) : multiplicativity();
    if (n == "dirichlet") return max ? dirichlet(*max) : dirichlet();
    if (n == "lemmas") return max ? lemmas(*max, *max, *max, std::min<Int>(*max, 60)) : lemmas();
    throw DomainError("unknown suite '" + n + "'");
  };
  std::vector<SuiteResult> out;
  if (name == "all") {
    for (const auto& n : suite_names()) out.push_back(one(n));
  } else {
    out.push_back(one(name));
  }
  return out;
}

}  // namespace ramsum::suites
