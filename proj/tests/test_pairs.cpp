#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wci/arith.hpp"
#include "wci/errors.hpp"
#include "wci/pair.hpp"

using namespace wci;
using V = std::vector<Int>;

namespace {

Pair random_pair(std::mt19937_64& rng, std::size_t max_codim, std::size_t max_vars, Int max_weight, Int max_degree) {
  const auto c = std::uniform_int_distribution<std::size_t>(0, max_codim)(rng);
  const auto n1 = std::uniform_int_distribution<std::size_t>(0, max_vars)(rng);
  return Pair::make(oracle::random_vec(rng, c, 1, max_degree), oracle::random_vec(rng, n1, 1, max_weight));
}

// Regular pairs are rare among random ones; build degrees from products of weights.
Pair random_regularish_pair(std::mt19937_64& rng) {
  const auto n1 = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
  V weights = oracle::random_vec(rng, n1, 1, 12);
  V degrees;
  const auto c = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
  std::uniform_int_distribution<std::size_t> pick(0, weights.size() - 1);
  std::uniform_int_distribution<Int> mult(1, 4);
  for (std::size_t j = 0; j < c; ++j) degrees.push_back(weights[pick(rng)] * weights[pick(rng)] * mult(rng));
  return Pair::make(degrees, weights);
}

std::vector<Int> primes_up_to(Int n) {
  std::vector<Int> out;
  for (Int p = 2; p <= n; ++p) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

bool oracle_regular(const Pair& pair, Int h) { return oracle::is_h_regular(pair.degrees, pair.weights, h); }

}  // namespace

TEST_CASE("make sorts descending and rejects non-positive entries") {
  const Pair p = Pair::make({3, 6}, {2, 3, 1});
  CHECK(p.degrees == V{6, 3});
  CHECK(p.weights == V{3, 2, 1});
  CHECK_THROWS_AS(Pair::make({0}, {1}), UsageError);
  CHECK_THROWS_AS(Pair::make({2}, {-1}), UsageError);
}

TEST_CASE("delta") {
  CHECK(delta(Pair::make({6, 6}, {1, 1, 2, 2, 3, 3})) == 0);
  CHECK(delta(Pair::make({}, {})) == 0);
  V weights{3, 3, 7, 7, 11, 11};
  weights.insert(weights.end(), 447, 1);
  CHECK(delta(Pair::make({231, 231, 26}, weights)) == -1);
}

TEST_CASE("is_h_regular examples") {
  CHECK(is_regular(Pair::make({6, 6}, {2, 2, 3, 3})).regular);
  CHECK_FALSE(is_regular(Pair::make({35}, {5, 7, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3})).regular);
  CHECK(is_h_regular(Pair::make({35}, {5, 7, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3}), 6).regular);
  const auto verdict = is_regular(Pair::make({4}, {2, 6}));
  CHECK_FALSE(verdict.regular);
  REQUIRE(verdict.witness.has_value());
  CHECK(verdict.witness->values() == V{6, 2});
  CHECK(is_regular(Pair::make({}, {})).regular);
  CHECK(is_regular(Pair::make({}, {1, 1})).regular);
  CHECK_FALSE(is_regular(Pair::make({}, {2})).regular);
}

TEST_CASE("is_h_regular handles long runs of ones") {
  V weights{3, 3, 7, 7, 11, 11};
  weights.insert(weights.end(), 447, 1);
  CHECK(is_regular(Pair::make({231, 231, 26}, weights)).regular);
  CHECK_FALSE(is_regular(Pair::make({231, 26}, weights)).regular);
}

TEST_CASE("cancel") {
  CHECK(cancel(Pair::make({6, 3}, {3, 2})) == Pair::make({6}, {2}));
  CHECK(cancel(Pair::make({5, 5}, {5, 5})) == Pair::make({}, {}));
  CHECK(cancel(Pair::make({6}, {2, 3})) == Pair::make({6}, {2, 3}));
  CHECK(cancel(Pair::make({5, 5, 5}, {5, 1})) == Pair::make({5, 5}, {1}));
}

TEST_CASE("strip_units") {
  const auto a = strip_units(Pair::make({6, 6}, {1, 1, 2, 2, 3, 3}));
  CHECK(a.stripped == Pair::make({6, 6}, {2, 2, 3, 3}));
  CHECK(a.removed == 2);
  const auto b = strip_units(Pair::make({6}, {2, 3}));
  CHECK(b.stripped == Pair::make({6}, {2, 3}));
  CHECK(b.removed == 0);
  const auto c = strip_units(Pair::make({}, {1, 1}));
  CHECK(c.stripped == Pair::make({}, {}));
  CHECK(c.removed == 2);
}

TEST_CASE("split_prime examples") {
  const auto s2 = split_prime(Pair::make({6}, {2, 3}), 2);
  CHECK(s2.top == Pair::make({3}, {3, 1}));
  CHECK(s2.at_prime == Pair::make({6}, {2}));
  CHECK(s2.prime == 2);

  const auto s3 = split_prime(Pair::make({6, 6}, {2, 2, 3, 3}), 3);
  CHECK(s3.top == Pair::make({2, 2}, {2, 2, 1, 1}));
  CHECK(s3.at_prime == Pair::make({6, 6}, {3, 3}));

  const auto s5 = split_prime(Pair::make({35, 30, 42}, {10, 15, 14, 21}), 5);
  CHECK(s5.top == Pair::make({7, 6, 42}, {2, 3, 14, 21}));
  CHECK(s5.at_prime == Pair::make({35, 30}, {10, 15}));

  CHECK_THROWS_AS(split_prime(Pair::make({6}, {2, 3}), 4), UsageError);
  CHECK_THROWS_AS(split_prime(Pair::make({6}, {2, 3}), 1), UsageError);
}

TEST_CASE("divide_all") {
  CHECK(divide_all(Pair::make({6, 6}, {3, 3}), 3) == Pair::make({2, 2}, {1, 1}));
  CHECK_THROWS_AS(divide_all(Pair::make({6}, {2, 3}), 2), UsageError);
}

TEST_CASE("property: split multisets reconstitute the pair and the delta identity holds") {
  std::mt19937_64 rng(101);
  const auto primes = primes_up_to(13);
  for (int trial = 0; trial < 2000; ++trial) {
    const Pair pair = random_pair(rng, 5, 8, 30, 90);
    for (Int q : primes) {
      const auto split = split_prime(pair, q);
      REQUIRE(delta_identity_holds(pair, split));
      REQUIRE(q * delta(pair) == q * delta(split.top) + (q - 1) * delta(split.at_prime));
      REQUIRE(split.top.codim() == pair.codim());
      REQUIRE(split.top.vars() == pair.vars());
      // Top entries that are multiples of q came from entries divisible by q^2 or more.
      for (Int d : split.at_prime.degrees) REQUIRE(d % q == 0);
      for (Int a : split.at_prime.weights) REQUIRE(a % q == 0);
      V rebuilt;
      for (Int d : pair.degrees) rebuilt.push_back(d % q == 0 ? d / q : d);
      REQUIRE(Pair::make(rebuilt, {}).degrees == split.top.degrees);
    }
  }
}

TEST_CASE("property: is_h_regular agrees with the all-subsets oracle") {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 3000; ++trial) {
    const Pair pair = trial % 2 == 0 ? random_pair(rng, 5, 10, 12, 60) : random_regularish_pair(rng);
    const Int h = std::uniform_int_distribution<Int>(1, 12)(rng);
    const auto verdict = is_h_regular(pair, h);
    REQUIRE(verdict.regular == oracle_regular(pair, h));
    if (!verdict.regular) {
      REQUIRE(verdict.witness.has_value());
      const Int g = gcd_many(verdict.witness->values());
      REQUIRE(g > 1);
      REQUIRE(h % g != 0);
      REQUIRE(oracle::divisible_count(pair.degrees, g) < verdict.witness->count());
    }
  }
}

TEST_CASE("property: regularity constraints are equivalent to is_h_regular") {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 1500; ++trial) {
    const Pair pair = trial % 2 == 0 ? random_pair(rng, 5, 8, 12, 60) : random_regularish_pair(rng);
    if (pair.weights.empty()) continue;
    const Int h = std::uniform_int_distribution<Int>(1, 6)(rng);
    const RegularityConstraints constraints(WeightClasses::from_weights(pair.weights), h);
    REQUIRE(constraints.satisfied_by(pair.degrees) == is_h_regular(pair, h).regular);
    if (is_h_regular(pair, h).regular) {
      const Int max_degree = pair.degrees.empty() ? 1 : pair.degrees.front();
      REQUIRE(constraints.satisfiable(static_cast<Int>(pair.codim()), max_degree));
    }
  }
}

TEST_CASE("property: splitting preserves h-regularity for primes not dividing h") {
  std::mt19937_64 rng(404);
  const auto primes = primes_up_to(11);
  int exercised = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    const Pair pair = random_regularish_pair(rng);
    const Int h = std::uniform_int_distribution<Int>(1, 6)(rng);
    if (!is_h_regular(pair, h).regular) continue;
    for (Int q : primes) {
      if (h % q == 0) continue;
      const auto split = split_prime(pair, q);
      REQUIRE(is_h_regular(split.top, h).regular);
      REQUIRE(is_h_regular(split.at_prime, h).regular);
      REQUIRE(is_h_regular(divide_all(split.at_prime, q), h).regular);
      ++exercised;
    }
  }
  CHECK(exercised > 500);
}

TEST_CASE("property: splitting at a prime dividing h lowers the level") {
  std::mt19937_64 rng(505);
  int exercised = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    const Pair pair = random_regularish_pair(rng);
    const Int h = std::uniform_int_distribution<Int>(2, 12)(rng);
    if (!is_h_regular(pair, h).regular) continue;
    for (const auto& [q, e] : factorize(h)) {
      const auto split = split_prime(pair, q);
      REQUIRE(is_h_regular(split.top, h / q).regular);
      REQUIRE(is_h_regular(split.at_prime, h).regular);
      REQUIRE(is_h_regular(divide_all(split.at_prime, q), h / q).regular);
      ++exercised;
    }
  }
  CHECK(exercised > 500);
}

TEST_CASE("property: cancel preserves h-regularity and is idempotent") {
  std::mt19937_64 rng(606);
  int exercised = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    Pair pair = random_regularish_pair(rng);
    // Plant a few doubles so cancellation has work to do.
    if (!pair.weights.empty() && trial % 2 == 0) {
      V degrees = pair.degrees;
      degrees.push_back(pair.weights.front());
      pair = Pair::make(degrees, pair.weights);
    }
    const Pair once = cancel(pair);
    REQUIRE(cancel(once) == once);
    for (Int d : once.degrees) {
      for (Int a : once.weights) REQUIRE(d != a);
    }
    REQUIRE(delta(once) == delta(pair));
    const Int h = std::uniform_int_distribution<Int>(1, 6)(rng);
    if (is_h_regular(pair, h).regular) {
      REQUIRE(is_h_regular(once, h).regular);
      ++exercised;
    }
  }
  CHECK(exercised > 300);
}

TEST_CASE("property: strip_units is idempotent") {
  std::mt19937_64 rng(707);
  for (int trial = 0; trial < 1000; ++trial) {
    const Pair pair = random_pair(rng, 4, 8, 3, 20);
    const auto once = strip_units(pair);
    const auto twice = strip_units(once.stripped);
    REQUIRE(twice.stripped == once.stripped);
    REQUIRE(twice.removed == 0);
    REQUIRE(once.removed == std::count(pair.weights.begin(), pair.weights.end(), 1));
  }
}
