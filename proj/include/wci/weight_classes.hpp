#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wci/arith.hpp"

namespace wci {

/// Bit i selects class i of a WeightClasses value.
using ValueMask = std::uint32_t;

inline constexpr std::size_t kMaxWeightClasses = 16;

struct WeightClass {
  Int value;
  Int multiplicity;
  friend bool operator==(const WeightClass&, const WeightClass&) = default;
};

/// Run-length form of a weight vector: distinct values, descending, each with
/// its multiplicity.
class WeightClasses {
 public:
  WeightClasses() = default;
  explicit WeightClasses(std::vector<WeightClass> classes);
  static WeightClasses from_weights(std::span<const Int> weights);

  const std::vector<WeightClass>& classes() const { return classes_; }
  std::size_t size() const { return classes_.size(); }
  bool empty() const { return classes_.empty(); }
  const WeightClass& operator[](std::size_t i) const { return classes_[i]; }

  /// n + 1, the number of coordinates.
  Int count() const;
  Int sum() const;
  /// Expanded weight list, descending.
  std::vector<Int> expand() const;
  std::vector<Int> values() const;

  ValueMask full_mask() const;
  WeightClasses select(ValueMask mask) const;
  /// Mask of the classes whose values appear in `values`; unknown values throw.
  ValueMask mask_of(std::span<const Int> values) const;
  Int multiplicity_of(Int value) const;

  friend bool operator==(const WeightClasses&, const WeightClasses&) = default;

 private:
  std::vector<WeightClass> classes_;
};

}  // namespace wci
