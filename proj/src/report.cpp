#include "wci/report.hpp"

#include <limits>
#include <sstream>

#include "wci/encoding.hpp"

namespace wci {

using nlohmann::json;

namespace {

json optional_bool(const std::optional<bool>& value) { return value ? json(*value) : json(nullptr); }

json degree_list(const WciFamily& family, const std::vector<std::size_t>& indices) {
  json out = json::array();
  for (std::size_t j : indices) out.push_back(family.degrees()[j]);
  return out;
}

json measures_to_json(const std::vector<Measure>& values) {
  json out = json::object();
  for (const auto& m : values) out[m.name] = big_to_json(m.value);
  return out;
}

json finding_to_json(const Finding& finding) {
  return {{"instance", finding.instance}, {"check", finding.check}, {"values", measures_to_json(finding.values)}};
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string measures_to_text(const std::vector<Measure>& values) {
  std::string out;
  for (const auto& m : values) {
    if (!out.empty()) out += ' ';
    out += m.name + "=" + m.value.str();
  }
  return out;
}

}  // namespace

json big_to_json(const BigInt& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max()) {
    return json(static_cast<std::int64_t>(value));
  }
  return json(value.str());
}

json stratum_to_json(const WciFamily& family, const StratumVerdict& stratum) {
  json out = {{"values", encode_weights(stratum.values)}, {"k", stratum.k}, {"outcome", to_string(stratum.outcome)}};
  switch (stratum.outcome) {
    case StratumOutcome::Q1:
      out["degrees"] = degree_list(family, stratum.q1_degrees);
      break;
    case StratumOutcome::Q2: {
      out["l"] = stratum.l;
      out["pure_degrees"] = degree_list(family, stratum.pure_degrees);
      json selections = json::array();
      for (const auto& s : stratum.selections) {
        std::vector<Int> chosen;
        for (const auto& c : s.chosen) chosen.insert(chosen.end(), static_cast<std::size_t>(c.multiplicity), c.value);
        selections.push_back({{"degree", s.degree}, {"chosen", encode_weights(WeightClasses::from_weights(chosen))}});
      }
      out["selections"] = std::move(selections);
      break;
    }
    case StratumOutcome::Fail:
      out["representable_degrees"] = stratum.representable_degrees;
      out["required"] = stratum.rho;
      break;
  }
  return out;
}

json analysis_to_json(const WciFamily& family, const FamilyAnalysis& analysis) {
  json out;
  out["family"] = encode_family(family);
  out["dimension"] = family.dimension();
  out["well_formed"] = analysis.well_formed;
  out["linear_cone"] = analysis.linear_cone;
  out["quasi_smooth"] = optional_bool(analysis.quasi_smooth);
  out["smooth"] = optional_bool(analysis.smooth);
  out["delta"] = analysis.delta;
  out["type"] = analysis.classification ? json(to_string(analysis.classification->type)) : json(nullptr);
  out["fano_index"] = analysis.classification && analysis.classification->fano_index
                          ? json(*analysis.classification->fano_index)
                          : json(nullptr);
  out["fundamental_index"] = analysis.fundamental_index ? json(*analysis.fundamental_index) : json(nullptr);
  json strata = json::array();
  if (analysis.qs_report) {
    for (const auto& s : analysis.qs_report->strata) strata.push_back(stratum_to_json(family, s));
  }
  out["strata"] = std::move(strata);
  json contributors = json::array();
  if (analysis.index_report) {
    for (const auto& c : analysis.index_report->contributors) {
      contributors.push_back({{"values", encode_weights(c.values)},
                              {"gcd", c.gcd},
                              {"meets", c.meets},
                              {"condition_i_holds", c.condition_i_holds}});
    }
  }
  out["index_contributors"] = std::move(contributors);
  out["note"] = analysis.note.empty() ? json(nullptr) : json(analysis.note);
  return out;
}

json pair_report_to_json(const Pair& pair, Int h, std::optional<Int> prime) {
  const auto verdict = is_h_regular(pair, h);
  const auto stripped = strip_units(pair);
  json out = {{"pair", encode_pair(pair)},
              {"delta", delta(pair)},
              {"h", h},
              {"regular", verdict.regular},
              {"witness", verdict.witness ? json(encode_weights(*verdict.witness)) : json(nullptr)},
              {"cancelled", encode_pair(cancel(pair))},
              {"stripped", encode_pair(stripped.stripped)},
              {"units", stripped.removed}};
  if (prime) {
    const auto split = split_prime(pair, *prime);
    out["split"] = {{"prime", *prime},
                    {"top", encode_pair(split.top)},
                    {"at_prime", encode_pair(split.at_prime)},
                    {"delta_identity", delta_identity_holds(pair, split)}};
  } else {
    out["split"] = nullptr;
  }
  return out;
}

json base_locus_to_json(const WciFamily& family, Int ell, const std::vector<BaseLocusComponent>& components) {
  json list = json::array();
  for (const auto& c : components) {
    list.push_back({{"values", encode_weights(c.values)}, {"induced", c.induced ? json(encode_family(*c.induced)) : json(nullptr)}});
  }
  return {{"family", encode_family(family)}, {"degree", ell}, {"empty", components.empty()}, {"components", list}};
}

json hilbert_to_json(const WciFamily& family, const HilbertCoefficients& coefficients) {
  json values = json::array();
  for (const auto& c : coefficients.values) values.push_back(big_to_json(c));
  return {{"family", encode_family(family)}, {"formal", coefficients.formal}, {"coefficients", values}};
}

json bounds_to_json(const SearchBounds& b) {
  json filters = json::array();
  const std::pair<const char*, bool> flags[] = {{"fano", b.filters.fano},
                                                {"calabi_yau", b.filters.calabi_yau},
                                                {"smooth", b.filters.smooth},
                                                {"quasi_smooth", b.filters.quasi_smooth},
                                                {"well_formed", b.filters.well_formed},
                                                {"exclude_cones", b.filters.exclude_cones},
                                                {"gcd_one", b.filters.gcd_one}};
  for (const auto& [name, on] : flags) {
    if (on) filters.push_back(name);
  }
  return {{"min_codim", b.min_codim}, {"max_codim", b.max_codim}, {"min_vars", b.min_vars},
          {"max_vars", b.max_vars},   {"max_weight", b.max_weight}, {"max_degree", b.max_degree},
          {"filters", filters}};
}

json verify_to_json(const VerifyReport& report, bool include_timing) {
  json counterexamples = json::array();
  for (const auto& f : report.counterexamples) counterexamples.push_back(finding_to_json(f));
  json witnesses = json::array();
  for (const auto& f : report.equality_witnesses) witnesses.push_back(finding_to_json(f));
  json stats = json::object();
  for (const auto& [key, value] : report.statistics) stats[key] = value;
  json out = {{"claim", report.claim},
              {"bounds", bounds_to_json(report.bounds)},
              {"prime", report.prime ? json(*report.prime) : json(nullptr)},
              {"checked", report.instances_checked},
              {"counterexamples", counterexamples},
              {"equality_witnesses", witnesses},
              {"statistics", stats}};
  if (include_timing) out["elapsed_ms"] = static_cast<std::int64_t>(report.elapsed_ms);
  return out;
}

json enumerate_to_json(const SearchBounds& bounds, EnumerationKind kind, const std::vector<EnumeratedInstance>& instances) {
  json list = json::array();
  for (const auto& inst : instances) {
    json predicates = json::object();
    for (const auto& [name, value] : inst.predicates) predicates[name] = optional_bool(value);
    json entry = {{"instance", inst.encoding}, {"delta", inst.delta}, {"predicates", predicates}};
    if (kind == EnumerationKind::Families) {
      entry["type"] = inst.type ? json(*inst.type) : json(nullptr);
      entry["fundamental_index"] = inst.fundamental_index ? json(*inst.fundamental_index) : json(nullptr);
    }
    list.push_back(std::move(entry));
  }
  return {{"kind", kind == EnumerationKind::Pairs ? "pairs" : "families"},
          {"bounds", bounds_to_json(bounds)},
          {"count", instances.size()},
          {"instances", list}};
}

std::string verify_to_csv(const VerifyReport& report) {
  std::ostringstream out;
  out << "kind,check,instance,values\n";
  for (const auto& f : report.counterexamples) {
    out << "counterexample," << f.check << ',' << csv_field(f.instance) << ',' << csv_field(measures_to_text(f.values)) << '\n';
  }
  for (const auto& f : report.equality_witnesses) {
    out << "equality," << f.check << ',' << csv_field(f.instance) << ',' << csv_field(measures_to_text(f.values)) << '\n';
  }
  return out.str();
}

std::string enumerate_to_csv(const std::vector<EnumeratedInstance>& instances) {
  std::ostringstream out;
  if (instances.empty()) return "instance,delta\n";
  out << "instance,delta";
  for (const auto& [name, value] : instances.front().predicates) out << ',' << name;
  out << '\n';
  for (const auto& inst : instances) {
    out << csv_field(inst.encoding) << ',' << inst.delta;
    for (const auto& [name, value] : inst.predicates) out << ',' << (value ? (*value ? "true" : "false") : "");
    out << '\n';
  }
  return out.str();
}

std::string hilbert_to_csv(const HilbertCoefficients& coefficients) {
  std::ostringstream out;
  out << "k,h0\n";
  for (std::size_t k = 0; k < coefficients.values.size(); ++k) out << k << ',' << coefficients.values[k].str() << '\n';
  return out.str();
}

}  // namespace wci
