#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wci/arith.hpp"
#include "wci/errors.hpp"

namespace wci {

/// Predicates an enumeration may be restricted to. `fano` and `calabi_yau`
/// combine as a union over the sign of delta.
struct Filters {
  bool fano = false;
  bool calabi_yau = false;
  bool smooth = false;
  bool quasi_smooth = false;
  bool well_formed = false;
  bool exclude_cones = false;
  bool gcd_one = false;

  friend bool operator==(const Filters&, const Filters&) = default;
};

/// Ranges for the codimension c, the number of weights n + 1, and the entry
/// sizes. Tuples are nonincreasing, so each multiset is visited once.
struct SearchBounds {
  Int min_codim = 0;
  Int max_codim = 0;
  Int min_vars = 1;
  Int max_vars = 0;
  Int max_weight = 0;
  Int max_degree = 0;
  Filters filters;

  friend bool operator==(const SearchBounds&, const SearchBounds&) = default;
};

void validate(const SearchBounds& bounds);

inline constexpr Int kDefaultInstanceCeiling = 100'000'000;

/// WCI_INSTANCE_CEILING if set to a positive integer, else the default.
Int instance_ceiling();

class CeilingExceeded : public UsageError {
 public:
  CeilingExceeded(BigInt estimate, Int ceiling);
  const BigInt& estimate() const { return estimate_; }

 private:
  BigInt estimate_;
};

struct RunOptions {
  /// 0 picks the available hardware parallelism.
  unsigned workers = 0;
  std::optional<Int> ceiling;
};

struct Measure {
  std::string name;
  BigInt value;
};

struct Finding {
  std::string instance;
  /// Which part of the claim the finding concerns, e.g. "i" or "b".
  std::string check;
  std::vector<Measure> values;
};

struct VerifyReport {
  std::string claim;
  SearchBounds bounds;
  std::optional<Int> prime;
  Int instances_checked = 0;
  std::vector<Finding> counterexamples;
  std::vector<Finding> equality_witnesses;
  std::vector<std::pair<std::string, Int>> statistics;
  double elapsed_ms = 0;
};

enum class Claim { ConjectureRegular, PropRegular, LemmaQdiv, Nonvanishing, Hypersurface };

std::string to_string(Claim claim);
Claim parse_claim(const std::string& name);
SearchBounds default_bounds(Claim claim);
inline constexpr Int kDefaultQdivPrime = 2;

// Instances are visited by n + 1, then weight tuple, then c, then degree tuple,
// each ascending; tuples compare lexicographically in nonincreasing form.
// Reports do not depend on the worker count.

/// Regular pairs, a_i > 1, d_j != a_i, c <= n, gcd(a) = 1: delta >= G(a).
VerifyReport verify_conjecture_regular(const SearchBounds& bounds, const RunOptions& options = {});
/// Regular pairs, a_i > 1, d_j != a_i: (i) delta >= c; (ii) with gcd(a) = 1,
/// delta = c only for (6^s, 1^(c-s); 2^s, 3^s).
VerifyReport verify_prop_regular(const SearchBounds& bounds, const RunOptions& options = {});
/// Regular pairs, d_j != a_i, every entry divisible by q: delta >= c q, and
/// equality forces c = n + 1.
VerifyReport verify_lemma_qdiv(const SearchBounds& bounds, Int q, const RunOptions& options = {});
/// Well-formed quasi-smooth non-cone families with c >= 1 and delta <= 0:
/// (a) h0(h) >= 1 at the fundamental index; for smooth ones (b) c1 >= c with
/// equality only for X_{6^c} in P(1^c, 2^c, 3^c), (c) c1 > -delta.
VerifyReport verify_nonvanishing(const SearchBounds& bounds, const RunOptions& options = {});
/// Hypersurfaces: (a) the lcm inequality on weight tuples; (b) h0(h') >= 1 for
/// Cartier h' in (max(delta, 0), max(delta, 0) + max_degree]; (c) when K_X is
/// Cartier, no base locus in degree delta + m h for n <= m <= n + 2.
VerifyReport verify_hypersurface(const SearchBounds& bounds, const RunOptions& options = {});

VerifyReport run_claim(Claim claim, const SearchBounds& bounds, std::optional<Int> prime, const RunOptions& options = {});

enum class EnumerationKind { Pairs, Families };

struct EnumeratedInstance {
  std::string encoding;
  Int delta = 0;
  /// Predicate name and value; nullopt where the predicate is undefined.
  std::vector<std::pair<std::string, std::optional<bool>>> predicates;
  std::optional<std::string> type;
  std::optional<Int> fundamental_index;
};

/// Closed-form number of (weight tuple, degree tuple) candidates before filters.
BigInt candidate_count(const SearchBounds& bounds, EnumerationKind kind);

std::vector<EnumeratedInstance> enumerate(const SearchBounds& bounds, EnumerationKind kind, const RunOptions& options = {});

}  // namespace wci
