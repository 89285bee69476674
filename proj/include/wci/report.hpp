#pragma once

#include <string>

#include <json.hpp>

#include "wci/family.hpp"
#include "wci/hilbert.hpp"
#include "wci/verify.hpp"

namespace wci {

// Big integers become JSON integers when they fit in 64 bits and decimal
// strings otherwise. Fields whose preconditions fail are null.

nlohmann::json big_to_json(const BigInt& value);

nlohmann::json stratum_to_json(const WciFamily& family, const StratumVerdict& stratum);
nlohmann::json analysis_to_json(const WciFamily& family, const FamilyAnalysis& analysis);
nlohmann::json pair_report_to_json(const Pair& pair, Int h, std::optional<Int> prime);
nlohmann::json base_locus_to_json(const WciFamily& family, Int ell, const std::vector<BaseLocusComponent>& components);
nlohmann::json hilbert_to_json(const WciFamily& family, const HilbertCoefficients& coefficients);
nlohmann::json bounds_to_json(const SearchBounds& bounds);
nlohmann::json verify_to_json(const VerifyReport& report, bool include_timing = true);
nlohmann::json enumerate_to_json(const SearchBounds& bounds, EnumerationKind kind,
                                 const std::vector<EnumeratedInstance>& instances);

/// One row per counterexample and equality witness.
std::string verify_to_csv(const VerifyReport& report);
std::string enumerate_to_csv(const std::vector<EnumeratedInstance>& instances);
std::string hilbert_to_csv(const HilbertCoefficients& coefficients);

}  // namespace wci
