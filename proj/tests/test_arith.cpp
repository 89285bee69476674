#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wci/arith.hpp"
#include "wci/errors.hpp"

using namespace wci;
using V = std::vector<Int>;

TEST_CASE("gcd_many and lcm_many") {
  CHECK(gcd_many(V{6}) == 6);
  CHECK(gcd_many(V{10, 15, 14, 21}) == 1);
  CHECK(gcd_many(V{6, 6, 2}) == 2);
  CHECK(lcm_many(V{4, 6, 10}) == 60);
  CHECK_THROWS_AS(gcd_many(V{}), UsageError);
  CHECK_THROWS_AS(gcd_many(V{3, 0}), UsageError);
}

TEST_CASE("factorize") {
  CHECK(factorize(1).empty());
  CHECK(factorize(12) == std::vector<PrimePower>{{2, 2}, {3, 1}});
  CHECK(factorize(231) == std::vector<PrimePower>{{3, 1}, {7, 1}, {11, 1}});
  CHECK(factorize(997) == std::vector<PrimePower>{{997, 1}});
  CHECK_THROWS_AS(factorize(0), UsageError);
  CHECK_THROWS_AS(factorize(kDefaultFactorCeiling + 1), UsageError);
  CHECK(factorize(1 << 20, 1 << 21) == std::vector<PrimePower>{{2, 20}});
}

TEST_CASE("factorize reconstructs n") {
  for (Int n = 1; n <= 2000; ++n) {
    Int product = 1;
    Int last = 0;
    for (const auto& [p, e] : factorize(n)) {
      CHECK(is_prime(p));
      CHECK(p > last);
      last = p;
      for (Int i = 0; i < e; ++i) product *= p;
    }
    CHECK(product == n);
  }
}

TEST_CASE("representable") {
  CHECK(representable(26, V{3, 7, 11}));
  CHECK_FALSE(representable(1, V{2, 3}));
  CHECK_FALSE(representable(4, V{3, 5, 7}));
  CHECK(representable(0, V{5}));
  CHECK_FALSE(representable(-1, V{1}));
}

TEST_CASE("monomial_count") {
  CHECK(monomial_count(2, V{1, 1}) == 3);
  CHECK(monomial_count(0, V{4, 9}) == 1);
  CHECK(monomial_count(6, V{2, 3}) == 2);
  CHECK(monomial_count(-3, V{1}) == 0);
  // 447 weight-one variables in degree 2: C(448, 2).
  CHECK(monomial_count(2, V(447, 1)) == 100'128);
  // C(89, 29), past 64 bits.
  CHECK(monomial_count(60, V(30, 1)).str() == "224377658168860057076688");
}

TEST_CASE("frobenius") {
  CHECK(frobenius(V{2, 3}) == 1);
  CHECK(frobenius(V{1, 7}) == -1);
  CHECK(frobenius(V{3, 5, 7}) == 4);
  CHECK(frobenius(V{6, 10, 15}) == 29);
  CHECK_THROWS_AS(frobenius(V{4, 6}), DomainError);
}

TEST_CASE("frobenius closed form for two generators") {
  for (Int a = 2; a <= 60; ++a) {
    for (Int b = a + 1; b <= 60; ++b) {
      if (std::gcd(a, b) != 1) continue;
      CHECK(frobenius(V{a, b}) == a * b - a - b);
    }
  }
}

TEST_CASE("representable against the gap table for two generators") {
  for (Int a = 2; a <= 12; ++a) {
    for (Int b = a + 1; b <= 12; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const SemigroupTable table({a, b}, a * b);
      for (Int t = 0; t <= a * b; ++t) CHECK(table.contains(t) == oracle::representable(t, {a, b}));
    }
  }
}

TEST_CASE("brauer bound") {
  CHECK(brauer_bound(V{2, 3}) == 1);
  CHECK(brauer_bound(V{10, 15, 14, 21}) == 61);
  CHECK(brauer_bound_min(V{10, 15, 14, 21}) <= 61);
  CHECK_THROWS_AS(brauer_bound(V{4, 6}), DomainError);
  CHECK_THROWS_AS(brauer_bound_min(V(9, 1)), UsageError);
}

TEST_CASE("property: semigroup table agrees with recursive brute force") {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 200; ++trial) {
    const auto size = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    const V gens = oracle::random_vec(rng, size, 1, 30);
    const SemigroupTable table(gens, 200, true);
    for (Int t = 0; t <= 200; ++t) {
      const bool member = oracle::representable(t, gens);
      REQUIRE(table.contains(t) == member);
      REQUIRE((table.count(t) >= 1) == member);
    }
  }
}

TEST_CASE("property: counts agree with top-down counting") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto size = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    const V weights = oracle::random_vec(rng, size, 1, 9);
    oracle::MonomialCounter counter(weights);
    for (Int t = 0; t <= 60; ++t) REQUIRE(monomial_count(t, weights) == counter.count(t));
  }
}

TEST_CASE("property: beyond the Frobenius number everything is representable") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto size = std::uniform_int_distribution<std::size_t>(2, 4)(rng);
    const V gens = oracle::random_vec(rng, size, 2, 25);
    if (gcd_many(gens) != 1) continue;
    const Int g = frobenius(gens);
    REQUIRE(g == oracle::frobenius(gens));
    const SemigroupTable table(gens, g + 60);
    if (g >= 0) CHECK_FALSE(table.contains(g));
    for (Int t = g + 1; t <= g + 60; ++t) REQUIRE(table.contains(t));
    REQUIRE(brauer_bound(gens) >= g);
    REQUIRE(brauer_bound_min(gens) >= g);
  }
}

TEST_CASE("semigroup table errors") {
  const SemigroupTable table({3, 5}, 10);
  CHECK_FALSE(table.contains(-2));
  CHECK_THROWS_AS(table.contains(11), UsageError);
  CHECK_THROWS_AS(table.count(1), UsageError);
  CHECK_THROWS_AS(SemigroupTable({3}, -1), UsageError);
}
