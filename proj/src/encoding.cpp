#include "wci/encoding.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "wci/errors.hpp"

namespace wci {

namespace {

// Guards against inputs like "1^999999999" exhausting memory.
constexpr Int kMaxEntries = 1'000'000;

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  }
  return out;
}

Int parse_number(std::string_view token, std::string_view context) {
  Int value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last) {
    throw UsageError("cannot parse '" + std::string(token) + "' in '" + std::string(context) + "'");
  }
  if (value < 1) throw UsageError("entries must be positive in '" + std::string(context) + "'");
  return value;
}

std::string run_length(const std::vector<WeightClass>& runs) {
  std::string out;
  for (const auto& run : runs) {
    if (!out.empty()) out += ',';
    out += std::to_string(run.value);
    if (run.multiplicity > 1) out += '^' + std::to_string(run.multiplicity);
  }
  return out;
}

std::pair<std::string, std::string> split_sides(std::string_view text) {
  const std::string compact = strip_spaces(text);
  const auto slash = compact.find('/');
  if (slash == std::string::npos || compact.find('/', slash + 1) != std::string::npos) {
    throw UsageError("expected exactly one '/' in '" + std::string(text) + "'");
  }
  return {compact.substr(0, slash), compact.substr(slash + 1)};
}

}  // namespace

std::vector<Int> parse_list(std::string_view text) {
  const std::string compact = strip_spaces(text);
  std::vector<Int> out;
  if (compact.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = compact.find(',', start);
    const std::string_view entry =
        std::string_view(compact).substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const auto caret = entry.find('^');
    Int value = 0;
    Int count = 1;
    if (caret == std::string_view::npos) {
      value = parse_number(entry, text);
    } else {
      value = parse_number(entry.substr(0, caret), text);
      std::string_view exponent = entry.substr(caret + 1);
      if (exponent.size() >= 2 && exponent.front() == '(' && exponent.back() == ')') {
        exponent = exponent.substr(1, exponent.size() - 2);
      }
      count = parse_number(exponent, text);
    }
    if (count > kMaxEntries - static_cast<Int>(out.size())) throw UsageError("too many entries in '" + std::string(text) + "'");
    out.insert(out.end(), static_cast<std::size_t>(count), value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string encode_list_descending(const std::vector<Int>& values) {
  std::vector<Int> sorted = values;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  std::string out;
  for (Int v : sorted) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

std::string encode_weights(const WeightClasses& weights) {
  std::vector<WeightClass> ascending(weights.classes().rbegin(), weights.classes().rend());
  return run_length(ascending);
}

std::string encode_pair(const Pair& pair) {
  return encode_list_descending(pair.degrees) + "/" + encode_weights(WeightClasses::from_weights(pair.weights));
}

Pair parse_pair(std::string_view text) {
  auto [degrees, weights] = split_sides(text);
  return Pair::make(parse_list(degrees), parse_list(weights));
}

std::string encode_family(const WciFamily& family) {
  return encode_list_descending(family.degrees()) + " / " + encode_weights(family.weights());
}

WciFamily parse_family(std::string_view text) {
  auto [degrees, weights] = split_sides(text);
  const auto parsed = parse_list(weights);
  if (parsed.empty()) throw UsageError("a family needs at least one weight");
  return WciFamily::make(parse_list(degrees), parsed);
}

}  // namespace wci
