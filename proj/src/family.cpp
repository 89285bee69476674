#include "wci/family.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "wci/errors.hpp"
#include "wci/selection.hpp"

namespace wci {

namespace {

constexpr ValueMask bit(std::size_t i) { return ValueMask{1} << i; }

void require_geometric(const WciFamily& family) {
  if (family.dimension() < 0) {
    throw DomainError("codimension " + std::to_string(family.codim()) + " exceeds n = " + std::to_string(family.n()));
  }
}

void require_table(const WciFamily& family, const StratumTable& table) {
  if (!(table.weights() == family.weights())) throw UsageError("stratum table built for different weights");
  if (table.bound() < family.max_degree()) throw UsageError("stratum table bound below the largest degree");
}

Int count_divisible(const std::vector<Int>& degrees, Int g) {
  return static_cast<Int>(std::count_if(degrees.begin(), degrees.end(), [g](Int d) { return d % g == 0; }));
}

std::vector<std::size_t> pure_degrees(const WciFamily& family, const StratumTable& table, ValueMask mask) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < family.codim(); ++j) {
    if (table.representable(mask, family.degrees()[j])) out.push_back(j);
  }
  return out;
}

// Distinct (by degree values) l-element sub-multisets of `pool`.
void choose_distinct(const std::vector<std::size_t>& pool, const std::vector<Int>& degrees, std::size_t l,
                     std::vector<std::vector<std::size_t>>& out) {
  std::set<std::vector<Int>> seen;
  std::vector<std::size_t> current;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (current.size() == l) {
      std::vector<Int> key;
      for (std::size_t j : current) key.push_back(degrees[j]);
      if (seen.insert(key).second) out.push_back(current);
      return;
    }
    for (std::size_t p = start; p < pool.size(); ++p) {
      current.push_back(pool[p]);
      self(self, p + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
}

void check_index_preconditions(const WciFamily& family, const StratumTable& table) {
  require_geometric(family);
  if (is_linear_cone(family)) throw DomainError("family is a linear cone");
  if (!space_well_formed(family.weights())) throw DomainError("ambient space is not well-formed");
  if (!wci_well_formed(family, table)) throw DomainError("family is not well-formed");
  if (!quasi_smooth(family, table).verdict) throw DomainError("family is not quasi-smooth");
}

}  // namespace

WciFamily::WciFamily(WeightClasses weights, std::vector<Int> degrees)
    : weights_(std::move(weights)), degrees_(std::move(degrees)) {
  if (weights_.empty()) throw UsageError("a family needs at least one weight");
  if (weights_.size() > kMaxWeightClasses) throw UsageError("too many distinct weights");
  for (Int d : degrees_) {
    if (d < 1) throw UsageError("degrees must be positive");
  }
  std::sort(degrees_.begin(), degrees_.end(), std::greater<>());
}

WciFamily WciFamily::make(std::vector<Int> degrees, std::span<const Int> weights) {
  return WciFamily(WeightClasses::from_weights(weights), std::move(degrees));
}

Pair WciFamily::pair() const { return Pair::make(degrees_, weights_.expand()); }

StratumTable::StratumTable(WeightClasses weights, Int bound) : weights_(std::move(weights)), bound_(bound) {
  if (weights_.size() > kMaxWeightClasses) throw UsageError("too many distinct weights");
  if (bound_ < 0) throw UsageError("stratum table bound must be nonnegative");
  const std::size_t masks = std::size_t{1} << weights_.size();
  const auto width = static_cast<std::size_t>(bound_) + 1;
  gcd_.assign(masks, 0);
  size_.assign(masks, 0);
  saturated_.resize(masks);
  saturated_[0].assign(width, 0);
  saturated_[0][0] = 1;

  for (std::size_t mask = 1; mask < masks; ++mask) {
    const auto low = static_cast<std::size_t>(__builtin_ctzll(mask));
    const std::size_t rest = mask & (mask - 1);
    const WeightClass& cls = weights_[low];
    gcd_[mask] = std::gcd(gcd_[rest], cls.value);
    size_[mask] = size_[rest] + cls.multiplicity;

    // Saturated at 2, two copies of a variable decide the same answer as any
    // larger number of copies.
    auto table = saturated_[rest];
    const Int copies = std::min<Int>(cls.multiplicity, 2);
    for (Int copy = 0; copy < copies; ++copy) {
      for (Int t = cls.value; t <= bound_; ++t) {
        table[t] = static_cast<std::uint8_t>(std::min(2, table[t] + table[t - cls.value]));
      }
    }
    saturated_[mask] = std::move(table);
  }
}

int StratumTable::monomials(ValueMask mask, Int t) const {
  if (t < 0) return 0;
  if (t > bound_) throw UsageError("degree beyond stratum table bound");
  return saturated_[mask][static_cast<std::size_t>(t)];
}

std::string to_string(StratumOutcome outcome) {
  switch (outcome) {
    case StratumOutcome::Q1: return "Q1";
    case StratumOutcome::Q2: return "Q2";
    case StratumOutcome::Fail: return "FAIL";
  }
  return "?";
}

std::string to_string(FamilyType type) {
  switch (type) {
    case FamilyType::Fano: return "fano";
    case FamilyType::CalabiYau: return "calabi_yau";
    case FamilyType::GeneralType: return "general";
  }
  return "?";
}

bool space_well_formed(const WeightClasses& weights) {
  if (weights.count() < 2) throw UsageError("well-formedness needs at least two weights");
  for (std::size_t i = 0; i < weights.size(); ++i) {
    Int g = 0;
    for (std::size_t j = 0; j < weights.size(); ++j) {
      if (j != i || weights[j].multiplicity > 1) g = std::gcd(g, weights[j].value);
    }
    if (g != 1) return false;
  }
  return true;
}

bool is_linear_cone(const WciFamily& family) {
  return std::any_of(family.degrees().begin(), family.degrees().end(),
                     [&](Int d) { return family.weights().multiplicity_of(d) > 0; });
}

StratumVerdict evaluate_stratum(const WciFamily& family, const StratumTable& table, ValueMask mask) {
  const WeightClasses& weights = family.weights();
  const auto& degrees = family.degrees();
  const Int c = static_cast<Int>(family.codim());

  StratumVerdict verdict;
  verdict.values = weights.select(mask);
  verdict.k = table.size(mask);
  verdict.rho = std::min(c, verdict.k);

  const std::vector<std::size_t> pure = pure_degrees(family, table, mask);
  verdict.representable_degrees = static_cast<Int>(pure.size());
  if (verdict.representable_degrees >= verdict.rho) {
    verdict.outcome = StratumOutcome::Q1;
    verdict.q1_degrees.assign(pure.begin(), pure.begin() + verdict.rho);
    return verdict;
  }

  std::vector<std::size_t> outside;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!(mask & bit(i))) outside.push_back(i);
  }

  const Int max_l = std::min<Int>(verdict.representable_degrees, verdict.rho - 1);
  for (Int l = 0; l <= max_l; ++l) {
    std::vector<std::vector<std::size_t>> choices;
    choose_distinct(pure, degrees, static_cast<std::size_t>(l), choices);
    for (const auto& chosen : choices) {
      std::vector<std::size_t> remaining;
      for (std::size_t j = 0; j < degrees.size(); ++j) {
        if (std::find(chosen.begin(), chosen.end(), j) == chosen.end()) remaining.push_back(j);
      }

      SelectionProblem problem;
      problem.degrees = remaining.size();
      problem.size = verdict.k - l;
      for (std::size_t i : outside) {
        std::uint32_t available = 0;
        for (std::size_t t = 0; t < remaining.size(); ++t) {
          const Int rest = degrees[remaining[t]] - weights[i].value;
          if (table.representable(mask, rest)) available |= 1u << t;
        }
        problem.classes.push_back({weights[i].value, weights[i].multiplicity, available});
      }

      auto selection = find_selection(problem);
      if (!selection) continue;

      verdict.outcome = StratumOutcome::Q2;
      verdict.l = l;
      verdict.pure_degrees = chosen;
      for (std::size_t t = 0; t < remaining.size(); ++t) {
        DegreeSelection ds{degrees[remaining[t]], {}};
        for (std::size_t o = 0; o < outside.size(); ++o) {
          if ((*selection)[t][o] > 0) ds.chosen.push_back({weights[outside[o]].value, (*selection)[t][o]});
        }
        verdict.selections.push_back(std::move(ds));
      }
      return verdict;
    }
  }
  verdict.outcome = StratumOutcome::Fail;
  return verdict;
}

QsReport quasi_smooth(const WciFamily& family, const StratumTable& table) {
  if (is_linear_cone(family)) throw DomainError("quasi-smoothness criterion needs a family that is not a linear cone");
  require_geometric(family);
  require_table(family, table);
  QsReport report;
  if (family.codim() == 0) return report;
  for (ValueMask mask = 1; mask < table.mask_count(); ++mask) {
    report.strata.push_back(evaluate_stratum(family, table, mask));
    if (report.strata.back().outcome == StratumOutcome::Fail) report.verdict = false;
  }
  return report;
}

QsReport quasi_smooth(const WciFamily& family) {
  return quasi_smooth(family, StratumTable(family.weights(), family.max_degree()));
}

bool wci_well_formed(const WciFamily& family, const StratumTable& table) {
  if (!space_well_formed(family.weights())) throw DomainError("ambient space is not well-formed");
  require_geometric(family);
  require_table(family, table);
  const Int dim = family.dimension();
  for (ValueMask mask = 1; mask < table.mask_count(); ++mask) {
    if (table.gcd(mask) == 1) continue;
    const auto pure = pure_degrees(family, table, mask);
    const Int generic_dim = table.size(mask) - 1 - static_cast<Int>(pure.size());
    if (generic_dim < 0) continue;
    const bool single_monomial = std::any_of(pure.begin(), pure.end(), [&](std::size_t j) {
      return !table.has_two_monomials(mask, family.degrees()[j]);
    });
    if (single_monomial) continue;
    if (dim - generic_dim < 2) return false;
  }
  return true;
}

bool wci_well_formed(const WciFamily& family) {
  return wci_well_formed(family, StratumTable(family.weights(), family.max_degree()));
}

bool stratum_meets(const WciFamily& family, const StratumTable& table, ValueMask mask) {
  require_table(family, table);
  if (mask == 0 || mask >= table.mask_count()) throw UsageError("stratum needs a nonempty set of weight values");
  const auto pure = pure_degrees(family, table, mask);
  if (table.size(mask) - 1 - static_cast<Int>(pure.size()) < 0) return false;
  return std::all_of(pure.begin(), pure.end(),
                     [&](std::size_t j) { return table.has_two_monomials(mask, family.degrees()[j]); });
}

bool stratum_meets(const WciFamily& family, std::span<const Int> values) {
  if (values.empty()) throw UsageError("stratum needs a nonempty set of weight values");
  const ValueMask mask = family.weights().mask_of(values);
  return stratum_meets(family, StratumTable(family.weights(), family.max_degree()), mask);
}

IndexReport fundamental_index(const WciFamily& family, const StratumTable& table, Preconditions preconditions) {
  if (preconditions == Preconditions::Check) {
    check_index_preconditions(family, table);
  } else {
    require_table(family, table);
  }
  IndexReport report;
  for (ValueMask mask = 1; mask < table.mask_count(); ++mask) {
    const Int g = table.gcd(mask);
    if (g == 1) continue;
    const bool condition_i = count_divisible(family.degrees(), g) >= table.size(mask);
    const bool meets = stratum_meets(family, table, mask);
    report.contributors.push_back({family.weights().select(mask), g, meets, condition_i});
    if (meets && !condition_i) report.index = std::lcm(report.index, g);
  }
  return report;
}

IndexReport fundamental_index(const WciFamily& family) {
  return fundamental_index(family, StratumTable(family.weights(), family.max_degree()));
}

Int canonical_degree(const WciFamily& family) { return delta(family.pair()); }

Classification classify(const WciFamily& family) {
  check_index_preconditions(family, StratumTable(family.weights(), family.max_degree()));
  const Int d = canonical_degree(family);
  if (d < 0) return {FamilyType::Fano, d, -d};
  if (d == 0) return {FamilyType::CalabiYau, d, std::nullopt};
  return {FamilyType::GeneralType, d, std::nullopt};
}

bool is_smooth(const WciFamily& family, const StratumTable& table, Preconditions preconditions) {
  if (preconditions == Preconditions::Check) {
    check_index_preconditions(family, table);
  } else {
    require_table(family, table);
  }
  for (ValueMask mask = 1; mask < table.mask_count(); ++mask) {
    if (table.gcd(mask) > 1 && stratum_meets(family, table, mask)) return false;
  }
  return true;
}

bool is_smooth(const WciFamily& family) {
  return is_smooth(family, StratumTable(family.weights(), family.max_degree()));
}

std::vector<BaseLocusComponent> base_locus(const WciFamily& family, Int ell) {
  if (ell <= 0) throw UsageError("base_locus: degree must be positive");
  require_geometric(family);
  const StratumTable table(family.weights(), std::max(ell, family.max_degree()));
  const std::size_t classes = family.weights().size();

  std::vector<BaseLocusComponent> out;
  for (ValueMask mask = 1; mask < table.mask_count(); ++mask) {
    if (table.representable(mask, ell)) continue;
    bool maximal = true;
    for (std::size_t i = 0; i < classes && maximal; ++i) {
      if (!(mask & bit(i)) && !table.representable(mask | bit(i), ell)) maximal = false;
    }
    if (!maximal) continue;

    // The closed stratum is the union of the open strata of its value subsets.
    bool nonempty = false;
    for (ValueMask sub = mask; sub != 0 && !nonempty; sub = (sub - 1) & mask) {
      nonempty = stratum_meets(family, table, sub);
    }
    BaseLocusComponent component{family.weights().select(mask), std::nullopt};
    if (nonempty) {
      std::vector<Int> induced;
      for (Int d : family.degrees()) {
        if (table.representable(mask, d)) induced.push_back(d);
      }
      component.induced = WciFamily(family.weights().select(mask), std::move(induced));
      out.push_back(std::move(component));
    }
  }
  return out;
}

WciFamily augment(const WciFamily& family, Int ell) {
  if (ell <= 0) throw UsageError("augment: degree must be positive");
  auto degrees = family.degrees();
  degrees.push_back(ell);
  return WciFamily(family.weights(), std::move(degrees));
}

FamilyAnalysis analyze(const WciFamily& family) {
  FamilyAnalysis out;
  out.linear_cone = is_linear_cone(family);
  out.delta = canonical_degree(family);
  if (family.weights().count() < 2) {
    out.note = "ambient space has a single coordinate";
    return out;
  }
  if (family.dimension() < 0) {
    out.note = "codimension exceeds n";
    return out;
  }
  const StratumTable table(family.weights(), family.max_degree());
  if (!out.linear_cone) {
    out.qs_report = quasi_smooth(family, table);
    out.quasi_smooth = out.qs_report->verdict;
  }
  out.well_formed = space_well_formed(family.weights()) && wci_well_formed(family, table);
  if (out.linear_cone) {
    out.note = "linear cone";
  } else if (!out.well_formed) {
    out.note = "not well-formed";
  } else if (!*out.quasi_smooth) {
    out.note = "not quasi-smooth";
  } else {
    out.smooth = is_smooth(family, table, Preconditions::Assume);
    out.index_report = fundamental_index(family, table, Preconditions::Assume);
    out.fundamental_index = out.index_report->index;
    const Int d = out.delta;
    out.classification = d < 0   ? Classification{FamilyType::Fano, d, -d}
                         : d == 0 ? Classification{FamilyType::CalabiYau, d, std::nullopt}
                                  : Classification{FamilyType::GeneralType, d, std::nullopt};
  }
  return out;
}

}  // namespace wci
