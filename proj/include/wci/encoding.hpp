#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wci/family.hpp"
#include "wci/pair.hpp"

namespace wci {

// Text grammar shared by the CLI and reports:
//   list   := "" | entry ("," entry)*
//   entry  := value | value "^" count | value "^(" count ")"
//   pair   := list "/" list
//   family := list " / " list
// Whitespace is insignificant when parsing. Encoders print degrees descending
// and in full, and weights ascending with repeated values folded into "v^m".

/// Parses a comma-separated list with run-length shorthand, expanded.
std::vector<Int> parse_list(std::string_view text);

std::string encode_list_descending(const std::vector<Int>& values);
std::string encode_weights(const WeightClasses& weights);

std::string encode_pair(const Pair& pair);
Pair parse_pair(std::string_view text);

std::string encode_family(const WciFamily& family);
WciFamily parse_family(std::string_view text);

}  // namespace wci
