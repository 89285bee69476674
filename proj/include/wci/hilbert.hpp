#pragma once

#include <vector>

#include "wci/arith.hpp"
#include "wci/family.hpp"

namespace wci {

/// Coefficients of prod_j (1 - t^{d_j}) / prod_i (1 - t^{a_i}), computed densely
/// and extended on demand by doubling. Not safe for concurrent extension.
class PoincareSeries {
 public:
  PoincareSeries(std::vector<Int> numerator_degrees, std::vector<Int> denominator_weights);
  explicit PoincareSeries(const WciFamily& family);

  const BigInt& coefficient(Int k);
  std::vector<BigInt> coefficients(Int k);
  /// Largest degree tabulated so far.
  Int computed() const { return static_cast<Int>(coefficients_.size()) - 1; }

 private:
  void extend(Int k);

  std::vector<Int> numerator_;
  std::vector<Int> denominator_;
  std::vector<BigInt> coefficients_;
};

/// `formal` is set when the family is not a well-formed quasi-smooth non-cone,
/// where the coefficient need not equal the section dimension.
struct SectionCount {
  BigInt value;
  bool formal = false;
};

struct HilbertCoefficients {
  std::vector<BigInt> values;
  bool formal = false;
};

/// Whether section counts of the family are honest dimensions.
bool sections_are_exact(const WciFamily& family);

SectionCount h0(const WciFamily& family, Int k);
/// Skips the exactness check; the caller vouches for the family.
BigInt h0_unchecked(const WciFamily& family, Int k);
bool nonvanishing(const WciFamily& family, Int k);
HilbertCoefficients hilbert_coefficients(const WciFamily& family, Int k);

}  // namespace wci
