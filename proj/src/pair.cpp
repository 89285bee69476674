#include "wci/pair.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "wci/errors.hpp"

namespace wci {

namespace {

void sort_desc(std::vector<Int>& v) { std::sort(v.begin(), v.end(), std::greater<>()); }

}  // namespace

Pair Pair::make(std::vector<Int> degrees, std::vector<Int> weights) {
  for (Int d : degrees) {
    if (d < 1) throw UsageError("pair degrees must be positive");
  }
  for (Int a : weights) {
    if (a < 1) throw UsageError("pair weights must be positive");
  }
  sort_desc(degrees);
  sort_desc(weights);
  return Pair{std::move(degrees), std::move(weights)};
}

Int delta(const Pair& pair) {
  return std::accumulate(pair.degrees.begin(), pair.degrees.end(), Int{0}) -
         std::accumulate(pair.weights.begin(), pair.weights.end(), Int{0});
}

RegularityVerdict is_h_regular(const Pair& pair, Int h) {
  if (h < 1) throw UsageError("is_h_regular: h must be positive");
  RegularityVerdict verdict;
  if (pair.weights.empty()) return verdict;

  // Value 1 never yields a_I > 1.
  const auto all = WeightClasses::from_weights(pair.weights);
  std::vector<WeightClass> classes;
  for (const auto& c : all.classes()) {
    if (c.value > 1) classes.push_back(c);
  }
  if (classes.size() > 24) throw UsageError("is_h_regular: too many distinct weights");

  const std::size_t m = classes.size();
  std::vector<Int> gcd(std::size_t{1} << m, 0);
  std::vector<Int> size(std::size_t{1} << m, 0);
  std::optional<std::vector<Int>> best;  // ascending values of the smallest failing subset

  for (std::size_t mask = 1; mask < gcd.size(); ++mask) {
    const auto low = static_cast<std::size_t>(__builtin_ctzll(mask));
    const std::size_t rest = mask & (mask - 1);
    gcd[mask] = std::gcd(gcd[rest], classes[low].value);
    size[mask] = size[rest] + classes[low].multiplicity;

    const Int g = gcd[mask];
    if (g == 1 || h % g == 0) continue;
    const auto divisible = std::count_if(pair.degrees.begin(), pair.degrees.end(), [g](Int d) { return d % g == 0; });
    if (divisible >= size[mask]) continue;

    std::vector<Int> values;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (std::size_t{1} << i)) values.push_back(classes[i].value);
    }
    std::sort(values.begin(), values.end());
    if (!best || values < *best) best = std::move(values);
  }

  if (best) {
    verdict.regular = false;
    std::vector<WeightClass> witness;
    for (Int v : *best) {
      auto it = std::find_if(classes.begin(), classes.end(), [v](const WeightClass& c) { return c.value == v; });
      witness.push_back(*it);
    }
    verdict.witness = WeightClasses(std::move(witness));
  }
  return verdict;
}

RegularityVerdict is_regular(const Pair& pair) { return is_h_regular(pair, 1); }

RegularityConstraints::RegularityConstraints(const WeightClasses& weights, Int h) {
  if (h < 1) throw UsageError("RegularityConstraints: h must be positive");
  std::vector<WeightClass> classes;
  for (const auto& c : weights.classes()) {
    if (c.value > 1) classes.push_back(c);
  }
  if (classes.size() > 24) throw UsageError("RegularityConstraints: too many distinct weights");

  std::map<Int, Int> required;
  std::vector<Int> gcd(std::size_t{1} << classes.size(), 0);
  std::vector<Int> size(gcd.size(), 0);
  for (std::size_t mask = 1; mask < gcd.size(); ++mask) {
    const auto low = static_cast<std::size_t>(__builtin_ctzll(mask));
    const std::size_t rest = mask & (mask - 1);
    gcd[mask] = std::gcd(gcd[rest], classes[low].value);
    size[mask] = size[rest] + classes[low].multiplicity;
    if (gcd[mask] == 1 || h % gcd[mask] == 0) continue;
    Int& r = required[gcd[mask]];
    r = std::max(r, size[mask]);
  }
  for (const auto& [g, r] : required) {
    const bool dominated = std::any_of(required.begin(), required.end(), [&](const auto& other) {
      return other.first != g && other.first % g == 0 && other.second >= r;
    });
    if (!dominated) constraints_.push_back({g, r});
  }
  std::sort(constraints_.begin(), constraints_.end(),
            [](const auto& x, const auto& y) { return x.required != y.required ? x.required > y.required : x.divisor < y.divisor; });
}

bool RegularityConstraints::satisfied_by(std::span<const Int> degrees) const {
  for (const auto& c : constraints_) {
    Int count = 0;
    for (Int d : degrees) count += (d % c.divisor == 0);
    if (count < c.required) return false;
  }
  return true;
}

bool RegularityConstraints::satisfiable(Int max_codim, Int max_degree) const {
  return std::all_of(constraints_.begin(), constraints_.end(),
                     [&](const auto& c) { return c.required <= max_codim && c.divisor <= max_degree; });
}

Pair cancel(const Pair& pair) {
  std::map<Int, Int> degree_count;
  std::map<Int, Int> weight_count;
  for (Int d : pair.degrees) ++degree_count[d];
  for (Int a : pair.weights) ++weight_count[a];
  for (auto& [value, count] : degree_count) {
    auto it = weight_count.find(value);
    if (it == weight_count.end()) continue;
    const Int matched = std::min(count, it->second);
    count -= matched;
    it->second -= matched;
  }
  std::vector<Int> degrees;
  std::vector<Int> weights;
  for (const auto& [value, count] : degree_count) degrees.insert(degrees.end(), static_cast<std::size_t>(count), value);
  for (const auto& [value, count] : weight_count) weights.insert(weights.end(), static_cast<std::size_t>(count), value);
  return Pair::make(std::move(degrees), std::move(weights));
}

StrippedPair strip_units(const Pair& pair) {
  std::vector<Int> weights;
  Int removed = 0;
  for (Int a : pair.weights) {
    if (a == 1) {
      ++removed;
    } else {
      weights.push_back(a);
    }
  }
  return {Pair::make(pair.degrees, std::move(weights)), removed};
}

PairSplit split_prime(const Pair& pair, Int q) {
  if (!is_prime(q)) throw UsageError("split_prime: " + std::to_string(q) + " is not prime");
  std::vector<Int> top_d, top_a, at_d, at_a;
  for (Int d : pair.degrees) {
    if (d % q == 0) {
      top_d.push_back(d / q);
      at_d.push_back(d);
    } else {
      top_d.push_back(d);
    }
  }
  for (Int a : pair.weights) {
    if (a % q == 0) {
      top_a.push_back(a / q);
      at_a.push_back(a);
    } else {
      top_a.push_back(a);
    }
  }
  return {Pair::make(std::move(top_d), std::move(top_a)), Pair::make(std::move(at_d), std::move(at_a)), q};
}

Pair divide_all(const Pair& pair, Int q) {
  if (q < 1) throw UsageError("divide_all: divisor must be positive");
  Pair out = pair;
  for (Int& d : out.degrees) {
    if (d % q != 0) throw UsageError("divide_all: degree not divisible");
    d /= q;
  }
  for (Int& a : out.weights) {
    if (a % q != 0) throw UsageError("divide_all: weight not divisible");
    a /= q;
  }
  return out;
}

bool delta_identity_holds(const Pair& original, const PairSplit& split) {
  const Int q = split.prime;
  return q * delta(original) == q * delta(split.top) + (q - 1) * delta(split.at_prime);
}

}  // namespace wci
