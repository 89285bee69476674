#pragma once

#include <optional>
#include <span>
#include <vector>

#include "wci/arith.hpp"
#include "wci/weight_classes.hpp"

namespace wci {

/// A multidegree/weight pair (d; a). Both lists are kept sorted descending;
/// either may be empty.
struct Pair {
  std::vector<Int> degrees;
  std::vector<Int> weights;

  static Pair make(std::vector<Int> degrees, std::vector<Int> weights);

  std::size_t codim() const { return degrees.size(); }
  std::size_t vars() const { return weights.size(); }

  friend bool operator==(const Pair&, const Pair&) = default;
};

/// Sum of degrees minus sum of weights.
Int delta(const Pair& pair);

struct RegularityVerdict {
  bool regular = true;
  /// Lexicographically smallest failing value subset (ascending values),
  /// with the full multiplicity of each value.
  std::optional<WeightClasses> witness;

  explicit operator bool() const { return regular; }
};

/// For every subset I of weights with gcd a_I > 1: a_I | h, or at least |I|
/// degrees are divisible by a_I. Only subsets of distinct values are visited,
/// each with every coordinate of those values (the hardest instance).
RegularityVerdict is_h_regular(const Pair& pair, Int h);
RegularityVerdict is_regular(const Pair& pair);

struct DivisibilityConstraint {
  Int divisor;
  Int required;
};

/// The conditions of is_h_regular for fixed weights, reduced to one
/// requirement per gcd with dominated ones dropped (g | g' and r <= r').
/// A degree list passes iff, for each entry, at least `required` degrees are
/// divisible by `divisor`.
class RegularityConstraints {
 public:
  RegularityConstraints(const WeightClasses& weights, Int h);

  const std::vector<DivisibilityConstraint>& constraints() const { return constraints_; }
  bool satisfied_by(std::span<const Int> degrees) const;
  /// Necessary condition for some degree list within the bounds to pass.
  bool satisfiable(Int max_codim, Int max_degree) const;

 private:
  std::vector<DivisibilityConstraint> constraints_;
};

/// Removes a maximal matching of equal degree/weight values.
Pair cancel(const Pair& pair);

struct StrippedPair {
  Pair stripped;
  Int removed;
};
StrippedPair strip_units(const Pair& pair);

/// top = (d^q; a^q): q-divisible entries divided by q, others kept.
/// at_prime = (d(q); a(q)): only the q-divisible entries, undivided.
struct PairSplit {
  Pair top;
  Pair at_prime;
  Int prime;
};
PairSplit split_prime(const Pair& pair, Int q);

/// Every entry divided by q; all entries must be divisible.
Pair divide_all(const Pair& pair, Int q);

/// q * delta(original) == q * delta(top) + (q - 1) * delta(at_prime).
bool delta_identity_holds(const Pair& original, const PairSplit& split);

}  // namespace wci
