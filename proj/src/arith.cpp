#include "wci/arith.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "wci/errors.hpp"

namespace wci {

namespace {

void require_positive(std::span<const Int> values, const char* what) {
  if (values.empty()) throw UsageError(std::string(what) + ": empty list");
  for (Int v : values) {
    if (v < 1) throw UsageError(std::string(what) + ": entries must be positive");
  }
}

std::vector<Int> distinct_sorted(std::span<const Int> values) {
  std::vector<Int> out(values.begin(), values.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Int gcd_many(std::span<const Int> values) {
  require_positive(values, "gcd_many");
  Int g = 0;
  for (Int v : values) {
    g = std::gcd(g, v);
    if (g == 1) break;
  }
  return g;
}

Int lcm_many(std::span<const Int> values) {
  require_positive(values, "lcm_many");
  Int l = 1;
  for (Int v : values) l = std::lcm(l, v);
  return l;
}

bool is_prime(Int n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (Int p = 3; p * p <= n; p += 2) {
    if (n % p == 0) return false;
  }
  return true;
}

std::vector<PrimePower> factorize(Int n, Int ceiling) {
  if (n < 1) throw UsageError("factorize: argument must be positive");
  if (n > ceiling) {
    throw UsageError("factorize: " + std::to_string(n) + " exceeds the ceiling " +
                     std::to_string(ceiling));
  }
  std::vector<PrimePower> out;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    Int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

SemigroupTable::SemigroupTable(std::vector<Int> generators, Int bound, bool with_counts)
    : generators_(std::move(generators)), bound_(bound) {
  require_positive(generators_, "SemigroupTable");
  if (bound_ < 0) throw UsageError("SemigroupTable: negative bound");
  const auto size = static_cast<std::size_t>(bound_) + 1;

  membership_.assign(size, 0);
  membership_[0] = 1;
  for (Int g : distinct_sorted(generators_)) {
    for (Int t = g; t <= bound_; ++t) {
      if (membership_[t - g]) membership_[t] = 1;
    }
  }

  if (with_counts) {
    std::vector<BigInt> counts(size);
    counts[0] = 1;
    // One pass per variable: multiply by 1/(1 - x^g).
    for (Int g : generators_) {
      for (Int t = g; t <= bound_; ++t) counts[t] += counts[t - g];
    }
    counts_ = std::move(counts);
  }
}

bool SemigroupTable::contains(Int t) const {
  if (t < 0) return false;
  if (t > bound_) throw UsageError("SemigroupTable: query beyond table bound");
  return membership_[static_cast<std::size_t>(t)] != 0;
}

const BigInt& SemigroupTable::count(Int t) const {
  if (!counts_) throw UsageError("SemigroupTable: built without counts");
  if (t < 0 || t > bound_) throw UsageError("SemigroupTable: query outside table");
  return (*counts_)[static_cast<std::size_t>(t)];
}

bool representable(Int target, std::span<const Int> generators) {
  require_positive(generators, "representable");
  if (target < 0) return false;
  if (target == 0) return true;
  return SemigroupTable({generators.begin(), generators.end()}, target).contains(target);
}

BigInt monomial_count(Int target, std::span<const Int> weights) {
  require_positive(weights, "monomial_count");
  if (target < 0) return 0;
  return SemigroupTable({weights.begin(), weights.end()}, target, true).count(target);
}

Int frobenius(std::span<const Int> generators) {
  require_positive(generators, "frobenius");
  if (gcd_many(generators) != 1) throw DomainError("Frobenius number undefined: gcd > 1");
  const std::vector<Int> gens = distinct_sorted(generators);
  const Int smallest = gens.front();
  if (smallest == 1) return -1;

  // Once `smallest` consecutive integers are representable, every larger
  // integer is too, so the table grows until such a run appears.
  std::vector<char> member{1};
  Int run = 1;
  Int last_gap = -1;
  for (Int t = 1; run < smallest; ++t) {
    char m = 0;
    for (Int g : gens) {
      if (g > t) break;
      if (member[static_cast<std::size_t>(t - g)]) {
        m = 1;
        break;
      }
    }
    member.push_back(m);
    if (m) {
      ++run;
    } else {
      run = 0;
      last_gap = t;
    }
  }
  return last_gap;
}

Int brauer_bound(std::span<const Int> generators) {
  require_positive(generators, "brauer_bound");
  if (gcd_many(generators) != 1) throw DomainError("Brauer bound undefined: gcd > 1");
  Int g_prev = generators[0];
  Int total = -generators[0];
  for (std::size_t j = 1; j < generators.size(); ++j) {
    const Int g = std::gcd(g_prev, generators[j]);
    total += generators[j] * (g_prev / g) - generators[j];
    g_prev = g;
  }
  return total;
}

Int brauer_bound_min(std::span<const Int> generators) {
  require_positive(generators, "brauer_bound_min");
  if (generators.size() > 8) throw UsageError("brauer_bound_min: more than 8 generators");
  std::vector<Int> order(generators.begin(), generators.end());
  std::sort(order.begin(), order.end());
  Int best = brauer_bound(order);
  while (std::next_permutation(order.begin(), order.end())) {
    best = std::min(best, brauer_bound(order));
  }
  return best;
}

}  // namespace wci
