#include "wci/hilbert.hpp"

#include <algorithm>

#include "wci/errors.hpp"

namespace wci {

PoincareSeries::PoincareSeries(std::vector<Int> numerator_degrees, std::vector<Int> denominator_weights)
    : numerator_(std::move(numerator_degrees)), denominator_(std::move(denominator_weights)) {
  for (Int d : numerator_) {
    if (d < 1) throw UsageError("series degrees must be positive");
  }
  for (Int a : denominator_) {
    if (a < 1) throw UsageError("series weights must be positive");
  }
  extend(16);
}

PoincareSeries::PoincareSeries(const WciFamily& family)
    : PoincareSeries(family.degrees(), family.weights().expand()) {}

void PoincareSeries::extend(Int k) {
  const auto size = static_cast<std::size_t>(k) + 1;
  std::vector<BigInt> series(size);
  series[0] = 1;
  // Multiply by (1 - t^d), walking downwards so each pass reads old values.
  for (Int d : numerator_) {
    for (Int t = k; t >= d; --t) series[t] -= series[t - d];
  }
  for (Int a : denominator_) {
    for (Int t = a; t <= k; ++t) series[t] += series[t - a];
  }
  coefficients_ = std::move(series);
}

const BigInt& PoincareSeries::coefficient(Int k) {
  if (k < 0) throw UsageError("series degree must be nonnegative");
  if (k > computed()) extend(std::max(k, 2 * computed()));
  return coefficients_[static_cast<std::size_t>(k)];
}

std::vector<BigInt> PoincareSeries::coefficients(Int k) {
  coefficient(k);
  return {coefficients_.begin(), coefficients_.begin() + k + 1};
}

namespace {

BigInt coefficient_at(const WciFamily& family, Int k) {
  if (k < 0) throw UsageError("h0: degree must be nonnegative");
  // A single pass at exactly k avoids the doubling slack of PoincareSeries.
  std::vector<BigInt> series(static_cast<std::size_t>(k) + 1);
  series[0] = 1;
  for (Int d : family.degrees()) {
    for (Int t = k; t >= d; --t) series[t] -= series[t - d];
  }
  for (const auto& cls : family.weights().classes()) {
    for (Int copy = 0; copy < cls.multiplicity; ++copy) {
      for (Int t = cls.value; t <= k; ++t) series[t] += series[t - cls.value];
    }
  }
  return series.back();
}

}  // namespace

bool sections_are_exact(const WciFamily& family) {
  if (family.weights().count() < 2 || family.dimension() < 0) return false;
  if (is_linear_cone(family) || !space_well_formed(family.weights())) return false;
  const StratumTable table(family.weights(), family.max_degree());
  return wci_well_formed(family, table) && quasi_smooth(family, table).verdict;
}

SectionCount h0(const WciFamily& family, Int k) {
  if (k < 0) throw UsageError("h0: degree must be nonnegative");
  return {coefficient_at(family, k), !sections_are_exact(family)};
}

BigInt h0_unchecked(const WciFamily& family, Int k) { return coefficient_at(family, k); }

bool nonvanishing(const WciFamily& family, Int k) {
  if (k < 1) throw UsageError("nonvanishing: degree must be positive");
  return h0(family, k).value >= 1;
}

HilbertCoefficients hilbert_coefficients(const WciFamily& family, Int k) {
  if (k < 0) throw UsageError("hilbert: degree must be nonnegative");
  PoincareSeries series(family);
  return {series.coefficients(k), !sections_are_exact(family)};
}

}  // namespace wci
