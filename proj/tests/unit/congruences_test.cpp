#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ramsum/congruences.hpp"

using namespace ramsum;

namespace {

std::vector<Int> coeffs(const IntPolynomial& g) { return {g.coefficients().begin(), g.coefficients().end()}; }

IntPolynomial random_poly(std::mt19937_64& rng, int max_degree) {
  const int degree = static_cast<int>(rng() % (max_degree + 1));
  std::vector<Int> c(degree + 1);
  for (auto& v : c) v = static_cast<Int>(rng() % 11) - 5;
  c.back() = (rng() % 2) ? 1 : -2;
  return IntPolynomial(c);
}

}  // namespace

TEST(Parse, Examples) {
  EXPECT_EQ(coeffs(parse_polynomial("x^2-1")), (std::vector<Int>{-1, 0, 1}));
  EXPECT_EQ(coeffs(parse_polynomial("x")), (std::vector<Int>{0, 1}));
  EXPECT_EQ(coeffs(parse_polynomial("-2x^3+x-7")), (std::vector<Int>{-7, 1, 0, -2}));
  EXPECT_EQ(coeffs(parse_polynomial("5")), (std::vector<Int>{5}));
  EXPECT_EQ(coeffs(parse_polynomial(" 3 * x + 5 ")), (std::vector<Int>{5, 3}));
  EXPECT_EQ(coeffs(parse_polynomial("x^2 + x^2 - 2x^2")), std::vector<Int>{});
  EXPECT_TRUE(parse_polynomial("0").is_zero());
  EXPECT_EQ(parse_polynomial("x^0+1"), (IntPolynomial{2}));
}

TEST(Parse, ErrorsCarryPosition) {
  auto position_of = [](std::string_view text) -> std::ptrdiff_t {
    try {
      parse_polynomial(text);
    } catch (const ParseError& e) {
      return static_cast<std::ptrdiff_t>(e.position());
    }
    return -1;
  };
  EXPECT_EQ(position_of(""), 0);
  EXPECT_EQ(position_of("   "), 3);
  EXPECT_EQ(position_of("x^2-y"), 4);
  EXPECT_EQ(position_of("x^"), 2);
  EXPECT_EQ(position_of("x x"), 2);
  EXPECT_EQ(position_of("3*"), 2);
  EXPECT_EQ(position_of("x^1001"), 2);
  EXPECT_THROW(parse_polynomial("x+"), DomainError);
}

TEST(Parse, RoundTripsThroughToString) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const auto g = random_poly(rng, 5);
    ASSERT_EQ(parse_polynomial(g.to_string()), g) << g.to_string();
  }
}

TEST(PolyEvalMod, Examples) {
  EXPECT_EQ(poly_eval_mod(parse_polynomial("x^2-1"), 3, 8), 0);
  EXPECT_EQ(poly_eval_mod(parse_polynomial("x-3"), 3, 7), 0);
  EXPECT_EQ(poly_eval_mod(parse_polynomial("x^2-1"), 2, 5), 3);
  EXPECT_EQ(poly_eval_mod(parse_polynomial("x^2-1"), -2, 5), 3);
  EXPECT_EQ(poly_eval_mod(IntPolynomial{}, 9, 4), 0);
  EXPECT_THROW(poly_eval_mod(IntPolynomial{1}, 1, 0), DomainError);
}

TEST(PolyEvalMod, AgreesWithPowerSum) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 5000; ++i) {
    const auto g = random_poly(rng, 4);
    const Int n = 1 + static_cast<Int>(rng() % 1000);
    const Int x = static_cast<Int>(rng() % 4001) - 2000;
    ASSERT_EQ(poly_eval_mod(g, x, n), oracle::poly_mod(coeffs(g), x, n));
  }
}

TEST(CountRoots, Examples) {
  const PolySystem q{parse_polynomial("x^2-1")};
  EXPECT_EQ(count_roots(q, ModuliTuple{8}, false), (RootCount{4, 8}));
  EXPECT_EQ(count_roots(q, ModuliTuple{12}, false), (RootCount{4, 12}));
  EXPECT_EQ(count_roots(q, ModuliTuple{12}, false, RootStrategy::direct), (RootCount{4, 12}));
  for (Int pa : {3, 9, 27, 5, 25, 7, 49, 343})
    for (auto strategy : {RootStrategy::direct, RootStrategy::multiplicative})
      EXPECT_EQ(count_roots(q, ModuliTuple{pa}, false, strategy).count, 2) << pa;
  for (Int d = 1; d <= 30; ++d) EXPECT_EQ(count_roots(PolySystem{IntPolynomial::shift(-4)}, ModuliTuple{d}, false).count, 1);
}

TEST(CountRoots, Errors) {
  const PolySystem one{parse_polynomial("x")};
  EXPECT_THROW(count_roots(one, ModuliTuple{6, 6}, false), DomainError);
  EXPECT_THROW(count_roots(one, ModuliTuple{Int{2000000011}}, false, RootStrategy::direct), ScaleError);
  EXPECT_THROW(PolySystem(std::vector<IntPolynomial>{}), DomainError);
}

TEST(CountRoots, StrategiesAgreeAndMatchScan) {
  std::mt19937_64 rng(23);
  int done = 0;
  while (done < 1500) {
    const std::size_t r = 1 + rng() % 3;
    std::vector<IntPolynomial> polys;
    std::vector<std::vector<Int>> raw;
    std::vector<Int> moduli;
    for (std::size_t i = 0; i < r; ++i) {
      polys.push_back(random_poly(rng, 3));
      raw.push_back(coeffs(polys.back()));
      moduli.push_back(1 + static_cast<Int>(rng() % 100));
    }
    if (oracle::lcm_of(moduli) > 1000) continue;
    ++done;
    const PolySystem system(polys);
    const ModuliTuple m(moduli);
    for (bool units : {false, true}) {
      const auto direct = count_roots(system, m, units, RootStrategy::direct);
      const auto mult = count_roots(system, m, units, RootStrategy::multiplicative);
      ASSERT_EQ(direct, mult);
      // The oracle asks gcd(x, m_i) = 1 for each i separately.
      ASSERT_EQ(direct.count, oracle::roots(raw, moduli, units));
      ASSERT_GE(direct.count, 0);
      ASSERT_LE(direct.count, direct.modulus);
    }
    ASSERT_LE(count_roots(system, m, true).count, count_roots(system, m, false).count);
  }
}

TEST(CountRoots, MultiplicativeOverCoprimeTuples) {
  std::mt19937_64 rng(29);
  int done = 0;
  while (done < 400) {
    const std::size_t r = 1 + rng() % 3;
    std::vector<IntPolynomial> polys;
    std::vector<Int> ms, ns, mn;
    Int pm = 1, pn = 1;
    for (std::size_t i = 0; i < r; ++i) {
      polys.push_back(random_poly(rng, 3));
      ms.push_back(1 + static_cast<Int>(rng() % 60));
      ns.push_back(1 + static_cast<Int>(rng() % 60));
      pm *= ms.back();
      pn *= ns.back();
      mn.push_back(ms.back() * ns.back());
    }
    if (std::gcd(pm, pn) != 1 || oracle::lcm_of(mn) > 200000) continue;
    ++done;
    const PolySystem g(polys);
    for (bool units : {false, true})
      ASSERT_EQ(count_roots(g, ModuliTuple(mn), units, RootStrategy::direct).count,
                count_roots(g, ModuliTuple(ms), units, RootStrategy::direct).count *
                    count_roots(g, ModuliTuple(ns), units, RootStrategy::direct).count);
  }
}

TEST(LinearSystem, Examples) {
  const std::vector<Int> a1{0, 1}, d1{2, 2};
  EXPECT_EQ(linear_system_root_count(a1, d1, false), 0);
  const std::vector<Int> a2{1, 3}, d2{2, 4};
  EXPECT_EQ(linear_system_root_count(a2, d2, false), 1);
  const std::vector<Int> a3{1, 2}, d3{2, 3};
  EXPECT_EQ(linear_system_root_count(a3, d3, true), 1);
  const std::vector<Int> a4{0, 2}, d4{2, 3};
  EXPECT_EQ(linear_system_root_count(a4, d4, true), 0);
  const std::vector<Int> short_a{1};
  EXPECT_THROW(linear_system_root_count(short_a, d1, false), DomainError);
}

TEST(LinearSystem, MatchesCountRoots) {
  auto check = [](const std::vector<Int>& a, const std::vector<Int>& d) {
    const auto system = PolySystem::shifts(a);
    const ModuliTuple m(d);
    for (bool units : {false, true})
      ASSERT_EQ(linear_system_root_count(a, d, units), count_roots(system, m, units).count);
  };
  for (Int a1 = -5; a1 <= 5; ++a1)
    for (Int d1 = 1; d1 <= 20; ++d1) {
      check({a1}, {d1});
      for (Int a2 = -5; a2 <= 5; ++a2)
        for (Int d2 = 1; d2 <= 20; ++d2) check({a1, a2}, {d1, d2});
    }
  std::mt19937_64 rng(31);
  for (int i = 0; i < 20000; ++i) {
    std::vector<Int> a, d;
    for (int j = 0; j < 3; ++j) {
      a.push_back(static_cast<Int>(rng() % 11) - 5);
      d.push_back(1 + static_cast<Int>(rng() % 20));
    }
    check(a, d);
  }
}
