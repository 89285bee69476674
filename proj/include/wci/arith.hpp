#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wci {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;

/// Default ceiling for trial-division factorization.
inline constexpr Int kDefaultFactorCeiling = 1'000'000;

struct PrimePower {
  Int prime;
  Int exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

Int gcd_many(std::span<const Int> values);
Int lcm_many(std::span<const Int> values);

std::vector<PrimePower> factorize(Int n, Int ceiling = kDefaultFactorCeiling);
bool is_prime(Int n);

/// Membership (and optionally representation counts) of the numerical
/// semigroup generated by `generators`, tabulated over 0..bound.
///
/// membership is filled by the recurrence m[t] = OR_{g <= t} m[t - g].
/// counts[t] is the coefficient of x^t in prod_i 1/(1 - x^{g_i}); repeated
/// generators count as distinct variables.
class SemigroupTable {
 public:
  SemigroupTable(std::vector<Int> generators, Int bound, bool with_counts = false);

  const std::vector<Int>& generators() const { return generators_; }
  Int bound() const { return bound_; }
  bool contains(Int t) const;
  bool has_counts() const { return counts_.has_value(); }
  const BigInt& count(Int t) const;

 private:
  std::vector<Int> generators_;
  Int bound_;
  std::vector<char> membership_;
  std::optional<std::vector<BigInt>> counts_;
};

bool representable(Int target, std::span<const Int> generators);

/// Number of monomials of weighted degree `target`, one variable per entry of
/// `weights`. Negative targets have no monomials.
BigInt monomial_count(Int target, std::span<const Int> weights);

/// Largest integer that is not a nonnegative combination of the generators;
/// -1 when every nonnegative integer is representable.
Int frobenius(std::span<const Int> generators);

/// Brauer's upper bound for the Frobenius number, for the given ordering.
Int brauer_bound(std::span<const Int> generators);

/// Minimum of brauer_bound over all orderings (at most 8 generators).
Int brauer_bound_min(std::span<const Int> generators);

}  // namespace wci
