#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wci/arith.hpp"
#include "wci/pair.hpp"
#include "wci/weight_classes.hpp"

namespace wci {

/// A weighted projective space together with a multidegree: the family of
/// general complete intersections X_{d_1..d_c} in P(a_0..a_n). Degrees are
/// kept descending; an empty degree list is the ambient space itself.
class WciFamily {
 public:
  WciFamily(WeightClasses weights, std::vector<Int> degrees);
  static WciFamily make(std::vector<Int> degrees, std::span<const Int> weights);

  const WeightClasses& weights() const { return weights_; }
  const std::vector<Int>& degrees() const { return degrees_; }
  std::size_t codim() const { return degrees_.size(); }
  Int n() const { return weights_.count() - 1; }
  Int dimension() const { return n() - static_cast<Int>(codim()); }
  Int max_degree() const { return degrees_.empty() ? 0 : degrees_.front(); }
  Pair pair() const;

  friend bool operator==(const WciFamily&, const WciFamily&) = default;

 private:
  WeightClasses weights_;
  std::vector<Int> degrees_;
};

/// Per value subset of one weight vector: gcd, number of coordinates, and the
/// number of monomials of each degree 0..bound in those coordinates, saturated
/// at 2 (0: none, 1: exactly one, 2: at least two).
///
/// Depends only on the weights, so one table serves every family over them.
class StratumTable {
 public:
  StratumTable(WeightClasses weights, Int bound);

  const WeightClasses& weights() const { return weights_; }
  Int bound() const { return bound_; }
  std::size_t mask_count() const { return gcd_.size(); }

  Int gcd(ValueMask mask) const { return gcd_[mask]; }
  Int size(ValueMask mask) const { return size_[mask]; }
  bool representable(ValueMask mask, Int t) const { return monomials(mask, t) > 0; }
  bool has_two_monomials(ValueMask mask, Int t) const { return monomials(mask, t) > 1; }

 private:
  int monomials(ValueMask mask, Int t) const;

  WeightClasses weights_;
  Int bound_;
  std::vector<Int> gcd_;
  std::vector<Int> size_;
  std::vector<std::vector<std::uint8_t>> saturated_;
};

enum class StratumOutcome { Q1, Q2, Fail };

std::string to_string(StratumOutcome outcome);

struct DegreeSelection {
  Int degree;
  /// Coordinates chosen per outside class (value, count).
  std::vector<WeightClass> chosen;
};

struct StratumVerdict {
  WeightClasses values;  // the value subset, every coordinate of each value
  Int k = 0;
  StratumOutcome outcome = StratumOutcome::Fail;
  // Q1: degrees (indices) with a pure monomial.
  std::vector<std::size_t> q1_degrees;
  // Q2: the l pure degrees and a selection for each remaining degree.
  Int l = 0;
  std::vector<std::size_t> pure_degrees;
  std::vector<DegreeSelection> selections;
  // Fail: pure-monomial degrees found against the required rho.
  Int representable_degrees = 0;
  Int rho = 0;
};

struct QsReport {
  bool verdict = true;
  std::vector<StratumVerdict> strata;
};

struct IndexContributor {
  WeightClasses values;
  Int gcd;
  bool meets;
  bool condition_i_holds;
};

struct IndexReport {
  Int index = 1;
  std::vector<IndexContributor> contributors;
};

enum class FamilyType { Fano, CalabiYau, GeneralType };

std::string to_string(FamilyType type);

struct Classification {
  FamilyType type;
  Int delta;
  /// I(X) = -delta for Fano families.
  std::optional<Int> fano_index;
};

struct BaseLocusComponent {
  WeightClasses values;
  /// The family induced on the stratum; nullopt when it misses the general member.
  std::optional<WciFamily> induced;
};

// Every operation below evaluates criteria once per subset of distinct weight
// values, using all coordinates of those values. The required counts grow with
// the number of coordinates while monomial availability never shrinks, so the
// maximal coordinate set is the binding case.

bool space_well_formed(const WeightClasses& weights);
bool is_linear_cone(const WciFamily& family);

QsReport quasi_smooth(const WciFamily& family);
QsReport quasi_smooth(const WciFamily& family, const StratumTable& table);
StratumVerdict evaluate_stratum(const WciFamily& family, const StratumTable& table, ValueMask mask);

bool wci_well_formed(const WciFamily& family);
bool wci_well_formed(const WciFamily& family, const StratumTable& table);

/// Whether a general member meets the open stratum of the given values.
bool stratum_meets(const WciFamily& family, std::span<const Int> values);
bool stratum_meets(const WciFamily& family, const StratumTable& table, ValueMask mask);

/// Assume skips the well-formed / quasi-smooth / non-cone checks for callers
/// that have already established them.
enum class Preconditions { Check, Assume };

IndexReport fundamental_index(const WciFamily& family);
IndexReport fundamental_index(const WciFamily& family, const StratumTable& table,
                              Preconditions preconditions = Preconditions::Check);

Int canonical_degree(const WciFamily& family);
Classification classify(const WciFamily& family);

bool is_smooth(const WciFamily& family);
bool is_smooth(const WciFamily& family, const StratumTable& table, Preconditions preconditions = Preconditions::Check);

/// Components of the base locus of |O_X(ell)| on the general member, one per
/// maximal value subset carrying no monomial of degree ell.
std::vector<BaseLocusComponent> base_locus(const WciFamily& family, Int ell);

WciFamily augment(const WciFamily& family, Int ell);

/// Everything `check` reports; fields whose preconditions fail stay empty.
struct FamilyAnalysis {
  bool well_formed = false;
  bool linear_cone = false;
  Int delta = 0;
  std::optional<bool> quasi_smooth;
  std::optional<bool> smooth;
  std::optional<Classification> classification;
  std::optional<Int> fundamental_index;
  std::optional<QsReport> qs_report;
  std::optional<IndexReport> index_report;
  /// Why geometric fields are missing, if they are.
  std::string note;
};

FamilyAnalysis analyze(const WciFamily& family);

}  // namespace wci
