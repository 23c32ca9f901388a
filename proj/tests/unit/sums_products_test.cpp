#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ramsum/ramanujan.hpp"
#include "ramsum/sums_products.hpp"

using namespace ramsum;

namespace {

PolySystem polys(std::initializer_list<const char*> texts) {
  std::vector<IntPolynomial> out;
  for (const char* t : texts) out.push_back(parse_polynomial(t));
  return PolySystem(out);
}

const std::vector<IntPolynomial>& corpus() {
  static const std::vector<IntPolynomial> c = [] {
    std::vector<IntPolynomial> v;
    for (const char* t : {"x", "x-1", "x-2", "x+1", "x^2-1", "x^2+x+1", "2x-1"}) v.push_back(parse_polynomial(t));
    return v;
  }();
  return c;
}

// E and R from the definition with exponential Ramanujan sums.
std::pair<Int, Int> oracle_e_r(const std::vector<IntPolynomial>& g, const std::vector<Int>& m) {
  const Int L = oracle::lcm_of(m);
  Int e = 0, r = 0;
  for (Int k = 1; k <= L; ++k) {
    Int term = 1;
    for (std::size_t i = 0; i < g.size(); ++i)
      term *= oracle::ramanujan(m[i], oracle::poly_mod({g[i].coefficients().begin(), g[i].coefficients().end()}, k, m[i]));
    e += term;
    if (std::gcd(k, L) == 1) r += term;
  }
  EXPECT_EQ(e % L, 0);
  return {e / L, r};
}

}  // namespace

TEST(EG, Examples) {
  EXPECT_EQ(e_g_direct(polys({"x"}), ModuliTuple{5}), 0);
  EXPECT_EQ(e_g_direct(polys({"x", "x"}), ModuliTuple{6, 6}), 2);
  EXPECT_EQ(e_g_direct(polys({"x^2-1"}), ModuliTuple{8}), 2);
  EXPECT_EQ(e_g_fast(polys({"x", "x"}), ModuliTuple{6, 6}), 2);
  EXPECT_EQ(e_g_fast(polys({"x^2-1"}), ModuliTuple{4}), 1);
  EXPECT_EQ(e_g_fast(polys({"x^2-1", "x"}), ModuliTuple{1, 1}), 1);
  EXPECT_EQ(e_g_direct(polys({"x^2-1", "x"}), ModuliTuple{1, 1}), 1);
}

TEST(RG, Examples) {
  EXPECT_EQ(r_g_direct(polys({"x-1", "x-1"}), ModuliTuple{3, 3}), 5);
  EXPECT_EQ(r_g_direct(polys({"x^2-1"}), ModuliTuple{4}), 4);
  EXPECT_EQ(r_g_direct(polys({"x-1"}), ModuliTuple{1}), 1);
  EXPECT_EQ(r_g_fast(polys({"x-1", "x-1"}), ModuliTuple{4, 4}), 8);
  EXPECT_EQ(r_g_fast(polys({"x-1", "x-1"}), ModuliTuple{4, 2}), 0);
  EXPECT_EQ(r_g_fast(polys({"x^2-1"}), ModuliTuple{8}), 16);
  EXPECT_EQ(r_g_fast(polys({"x-1"}), ModuliTuple{1}), 1);
}

TEST(EG, Errors) {
  EXPECT_THROW(e_g_direct(polys({"x"}), ModuliTuple{6, 6}), DomainError);
  EXPECT_THROW(e_g_fast(polys({"x"}), ModuliTuple{6, 6}), DomainError);
  EXPECT_THROW(e_g_direct(polys({"x", "x"}), ModuliTuple{1009, 1013}), ScaleError);
  EXPECT_THROW(ShiftVector(std::vector<Int>{}), DomainError);
}

TEST(EG, DirectMatchesExponentialOracle) {
  const auto& c = corpus();
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j)
      for (Int m1 = 1; m1 <= 12; ++m1)
        for (Int m2 = 1; m2 <= 12; m2 += 1) {
          const auto [e, r] = oracle_e_r({c[i], c[j]}, {m1, m2});
          const PolySystem g{c[i], c[j]};
          const ModuliTuple m{m1, m2};
          ASSERT_EQ(e_g_direct(g, m), e);
          ASSERT_EQ(r_g_direct(g, m), r);
        }
}

TEST(EG, FastMatchesDirectOnCorpus) {
  // Pairs exhaustively up to 20, triples on a coarser grid; the full triple
  // sweep runs in the acceptance suite.
  const auto& c = corpus();
  for (const auto& g1 : c)
    for (Int m1 = 1; m1 <= 20; ++m1) {
      const PolySystem g{g1};
      const ModuliTuple m{m1};
      ASSERT_EQ(e_g_fast(g, m), e_g_direct(g, m));
      ASSERT_EQ(r_g_fast(g, m), r_g_direct(g, m));
    }
  for (const auto& g1 : c)
    for (const auto& g2 : c)
      for (Int m1 = 1; m1 <= 20; ++m1)
        for (Int m2 = 1; m2 <= 20; ++m2) {
          const PolySystem g{g1, g2};
          const ModuliTuple m{m1, m2};
          ASSERT_EQ(e_g_fast(g, m), e_g_direct(g, m)) << g1.to_string() << ',' << g2.to_string() << ' ' << m1 << ',' << m2;
          ASSERT_EQ(r_g_fast(g, m), r_g_direct(g, m)) << g1.to_string() << ',' << g2.to_string() << ' ' << m1 << ',' << m2;
        }
  std::mt19937_64 rng(3);
  for (int t = 0; t < 3000; ++t) {
    const PolySystem g{c[rng() % 7], c[rng() % 7], c[rng() % 7]};
    const ModuliTuple m{1 + static_cast<Int>(rng() % 20), 1 + static_cast<Int>(rng() % 20), 1 + static_cast<Int>(rng() % 20)};
    ASSERT_EQ(e_g_fast(g, m), e_g_direct(g, m));
    ASSERT_EQ(r_g_fast(g, m), r_g_direct(g, m));
  }
}

TEST(EG, MultiplicativeOverCoprimeTuples) {
  const auto& c = corpus();
  std::mt19937_64 rng(5);
  int done = 0;
  while (done < 500) {
    const std::size_t r = 1 + rng() % 3;
    std::vector<IntPolynomial> g;
    std::vector<Int> ms, ns, mn;
    Int pm = 1, pn = 1;
    for (std::size_t i = 0; i < r; ++i) {
      g.push_back(c[rng() % c.size()]);
      ms.push_back(1 + static_cast<Int>(rng() % 30));
      ns.push_back(1 + static_cast<Int>(rng() % 30));
      pm *= ms.back();
      pn *= ns.back();
      mn.push_back(ms.back() * ns.back());
    }
    if (std::gcd(pm, pn) != 1) continue;
    ++done;
    const PolySystem G(g);
    const ModuliTuple M(ms), N(ns), MN(mn);
    ASSERT_EQ(e_g_fast(G, MN), e_g_fast(G, M) * e_g_fast(G, N));
    ASSERT_EQ(r_g_fast(G, MN), r_g_fast(G, M) * r_g_fast(G, N));
    if (MN.lcm().value() <= 20000) {
      ASSERT_EQ(e_g_direct(G, MN), e_g_direct(G, M) * e_g_direct(G, N));
      ASSERT_EQ(r_g_direct(G, MN), r_g_direct(G, M) * r_g_direct(G, N));
    }
  }
}

TEST(RG, SamePolynomialOnCoprimeModuli) {
  // R_G(m_1, ..., m_r) = R_g(m) for g_1 = ... = g_r = g and pairwise coprime m_i.
  for (const auto& g : corpus())
    for (Int m1 = 1; m1 <= 30; ++m1)
      for (Int m2 = 1; m2 <= 30; ++m2) {
        if (std::gcd(m1, m2) != 1) continue;
        ASSERT_EQ(r_g_fast(PolySystem::repeated(g, 2), ModuliTuple{m1, m2}), r_g_fast(PolySystem{g}, ModuliTuple{m1 * m2}));
        ASSERT_EQ(r_g_direct(PolySystem::repeated(g, 2), ModuliTuple{m1, m2}),
                  r_g_direct(PolySystem{g}, ModuliTuple{m1 * m2}));
      }
}

TEST(Shift, Examples) {
  EXPECT_EQ(e_shift(ShiftVector{0, 1}, ModuliTuple{6, 6}), 1);
  EXPECT_EQ(e_shift(ShiftVector{0, 1}, ModuliTuple{4, 4}), 0);
  EXPECT_EQ(e_shift(ShiftVector{0, 0}, ModuliTuple{6, 6}), 2);
  EXPECT_EQ(r_shift(ShiftVector{1, 2}, ModuliTuple{3, 3}), -4);
  EXPECT_EQ(r_shift(ShiftVector{0, 1}, ModuliTuple{2, 3}), -1);
  EXPECT_EQ(r_shift(ShiftVector{1, 1}, ModuliTuple{3, 3}), 5);
  EXPECT_EQ(e_shift(ShiftVector{4, 9}, ModuliTuple{1, 1}), 1);
}

TEST(Shift, StrategiesAgree) {
  for (Int a1 = -3; a1 <= 3; ++a1)
    for (Int a2 = -3; a2 <= 3; ++a2)
      for (Int m1 = 1; m1 <= 18; ++m1)
        for (Int m2 = 1; m2 <= 18; ++m2) {
          const ShiftVector a{a1, a2};
          const ModuliTuple m{m1, m2};
          const Int e = e_shift(a, m, SumStrategy::direct);
          const Int r = r_shift(a, m, SumStrategy::direct);
          ASSERT_EQ(e_shift(a, m, SumStrategy::fast), e);
          ASSERT_EQ(e_shift(a, m, SumStrategy::general), e);
          ASSERT_EQ(r_shift(a, m, SumStrategy::fast), r) << a1 << ' ' << a2 << ' ' << m1 << ' ' << m2;
          ASSERT_EQ(r_shift(a, m, SumStrategy::general), r);
        }
}

TEST(Shift, CohenIdentity) {
  for (Int n = 1; n <= 200; ++n)
    for (Int a = -50; a <= 50; ++a) {
      const Int expected = mobius(n) * ramanujan_sum(n, a);
      ASSERT_EQ(r_shift(ShiftVector{a}, ModuliTuple{n}), expected);
      ASSERT_EQ(r_shift(ShiftVector{a}, ModuliTuple{n}, SumStrategy::general), expected);
    }
}

TEST(Shift, AdjacentShiftClosedForms) {
  for (Int m = 1; m <= 200; ++m) {
    const auto f = factorize(m);
    const Int expected = is_squarefree(f) ? (distinct_prime_count(f) % 2 ? -1 : 1) : 0;
    ASSERT_EQ(e_shift(ShiftVector{0, 1}, ModuliTuple{m, m}, SumStrategy::general), expected);
    ASSERT_EQ(e_shift(ShiftVector{5, 4}, ModuliTuple{m, m}, SumStrategy::general), expected);
  }
}

TEST(RFunc, Examples) {
  EXPECT_EQ(r_func(ModuliTuple{3, 3}), 5);
  EXPECT_EQ(r_func(ModuliTuple{4, 4}), 8);
  EXPECT_EQ(r_func(ModuliTuple{3, 3, 3}), 7);
  EXPECT_EQ(r_func(ModuliTuple{9, 9, 9}), 162);
  EXPECT_EQ(r_func(ModuliTuple{1, 1}), 1);
  EXPECT_EQ(r_func(ModuliTuple{3, 3, 3}, SumStrategy::direct), 7);
}

TEST(RFunc, StrategiesAgreeAndNonnegative) {
  for (Int m1 = 1; m1 <= 24; ++m1)
    for (Int m2 = 1; m2 <= 24; ++m2)
      for (Int m3 = 1; m3 <= 12; ++m3) {
        const ModuliTuple m{m1, m2, m3};
        const Int fast = r_func(m);
        ASSERT_GE(fast, 0);
        ASSERT_EQ(fast, r_func(m, SumStrategy::general));
        ASSERT_EQ(fast, r_func(m, SumStrategy::direct));
      }
}

TEST(PrimePower, Examples) {
  EXPECT_EQ(r_prime_power(PrimePowerProfile(3, {1, 1})), 5);
  EXPECT_EQ(r_prime_power(PrimePowerProfile(2, {2, 2})), 8);
  EXPECT_EQ(r_prime_power(PrimePowerProfile(2, {3, 1})), 0);
  EXPECT_EQ(r_prime_power(PrimePowerProfile(2, {1, 3})), 0);
  EXPECT_EQ(r_prime_power(PrimePowerProfile(3, {2, 2, 2})), 162);
  const PrimePowerProfile prof(5, {1, 3, 3, 2});
  EXPECT_EQ(std::vector<unsigned>(prof.exponents().begin(), prof.exponents().end()), (std::vector<unsigned>{3, 3, 2, 1}));
  EXPECT_EQ(prof.top(), 3u);
  EXPECT_EQ(prof.top_multiplicity(), 2u);
  EXPECT_EQ(prof.v(), 9 - 4 - 3 + 1);
}

TEST(PrimePower, Errors) {
  EXPECT_THROW(PrimePowerProfile(4, {1}), DomainError);
  EXPECT_THROW(PrimePowerProfile(3, {}), DomainError);
  EXPECT_THROW(PrimePowerProfile(3, {2, 0}), DomainError);
  EXPECT_THROW(h_poly(0, 3), DomainError);
}

TEST(PrimePower, MatchesDirectAndZeroClassification) {
  for (Int p : {2, 3, 5})
    for (unsigned r = 1; r <= 4; ++r) {
      std::vector<unsigned> e(r, 1);
      while (true) {
        const PrimePowerProfile prof(p, e);
        std::vector<Int> moduli;
        for (unsigned ei : e) moduli.push_back(checked_pow(p, ei));
        const ModuliTuple m(moduli);
        const Int closed = r_prime_power(prof);
        if (m.lcm().value() <= kOracleLimit) ASSERT_EQ(closed, r_func(m, SumStrategy::direct));
        ASSERT_EQ(closed, r_func(m, SumStrategy::general));
        const unsigned s = prof.top_multiplicity();
        const bool zero = prof.top() > 1 && (s == 1 || (s % 2 == 1 && p == 2));
        ASSERT_EQ(closed == 0, zero) << p << " r=" << r;
        if (prof.top() == 1) ASSERT_EQ(closed, checked_pow(p - 1, r) + (r % 2 ? -1 : 1) * (p - 2));
        std::size_t i = 0;
        while (i < r && e[i] == 3) e[i++] = 1;
        if (i == r) break;
        ++e[i];
      }
    }
}

TEST(PrimePower, HPolyIsExact) {
  for (unsigned s = 1; s <= 12; ++s)
    for (Int x = 2; x <= 50; ++x) ASSERT_EQ(h_poly(s, x) * x, checked_pow(x - 1, s - 1) + (s % 2 ? -1 : 1));
  EXPECT_EQ(h_poly(1, 7), 0);
  EXPECT_EQ(h_poly(2, 2), 1);
}

TEST(GR, Values) {
  EXPECT_EQ(g_r_value(2, factorize(4)), 2);
  EXPECT_EQ(g_r_value(2, factorize(3)), make_rational(5, 3));
  EXPECT_EQ(g_r_value(2, factorize(1)), 1);
  for (unsigned r = 1; r <= 4; ++r)
    for (Int m = 1; m <= 60; ++m)
      ASSERT_EQ(g_r_value(r, factorize(m)), make_rational(r_func(ModuliTuple(std::vector<Int>(r, m))), m));
}
