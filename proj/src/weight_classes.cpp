#include "wci/weight_classes.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "wci/errors.hpp"

namespace wci {

WeightClasses::WeightClasses(std::vector<WeightClass> classes) {
  std::map<Int, Int, std::greater<>> merged;
  for (const auto& c : classes) {
    if (c.value < 1) throw UsageError("weight values must be positive");
    if (c.multiplicity < 1) throw UsageError("weight multiplicities must be positive");
    merged[c.value] += c.multiplicity;
  }
  for (const auto& [value, mult] : merged) classes_.push_back({value, mult});
}

WeightClasses WeightClasses::from_weights(std::span<const Int> weights) {
  std::vector<WeightClass> classes;
  classes.reserve(weights.size());
  for (Int w : weights) classes.push_back({w, 1});
  return WeightClasses(std::move(classes));
}

Int WeightClasses::count() const {
  Int n = 0;
  for (const auto& c : classes_) n += c.multiplicity;
  return n;
}

Int WeightClasses::sum() const {
  Int s = 0;
  for (const auto& c : classes_) s += c.value * c.multiplicity;
  return s;
}

std::vector<Int> WeightClasses::expand() const {
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(count()));
  for (const auto& c : classes_) out.insert(out.end(), static_cast<std::size_t>(c.multiplicity), c.value);
  return out;
}

std::vector<Int> WeightClasses::values() const {
  std::vector<Int> out;
  for (const auto& c : classes_) out.push_back(c.value);
  return out;
}

ValueMask WeightClasses::full_mask() const {
  return classes_.size() >= 32 ? ~ValueMask{0} : (ValueMask{1} << classes_.size()) - 1;
}

WeightClasses WeightClasses::select(ValueMask mask) const {
  WeightClasses out;
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (mask & (ValueMask{1} << i)) out.classes_.push_back(classes_[i]);
  }
  return out;
}

ValueMask WeightClasses::mask_of(std::span<const Int> values) const {
  ValueMask mask = 0;
  for (Int v : values) {
    auto it = std::find_if(classes_.begin(), classes_.end(), [v](const WeightClass& c) { return c.value == v; });
    if (it == classes_.end()) throw UsageError("value " + std::to_string(v) + " is not a weight");
    mask |= ValueMask{1} << (it - classes_.begin());
  }
  return mask;
}

Int WeightClasses::multiplicity_of(Int value) const {
  for (const auto& c : classes_) {
    if (c.value == value) return c.multiplicity;
  }
  return 0;
}

}  // namespace wci
