#include "wci/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include "wci/encoding.hpp"
#include "wci/family.hpp"
#include "wci/hilbert.hpp"
#include "wci/pair.hpp"

namespace wci {

namespace {

using Tuple = std::vector<Int>;

std::vector<Int> value_domain(Int lo, Int hi, Int step) {
  std::vector<Int> out;
  for (Int v = ((lo + step - 1) / step) * step; v <= hi; v += step) out.push_back(v);
  return out;
}

// Nonincreasing tuples of `length` entries from an ascending domain whose first
// entry is domain[first], in lexicographic order.
template <class Fn>
void for_each_tuple(const std::vector<Int>& domain, std::size_t length, std::size_t first, Fn&& fn) {
  Tuple tuple(length);
  if (length == 0) {
    fn(tuple);
    return;
  }
  tuple[0] = domain[first];
  auto fill = [&](auto&& self, std::size_t pos, std::size_t limit) -> void {
    if (pos == length) {
      fn(tuple);
      return;
    }
    for (std::size_t i = 0; i <= limit; ++i) {
      tuple[pos] = domain[i];
      self(self, pos + 1, i);
    }
  };
  fill(fill, 1, first);
}

template <class Fn>
void for_each_tuple(const std::vector<Int>& domain, std::size_t length, Fn&& fn) {
  if (length == 0) {
    for_each_tuple(domain, 0, 0, fn);
    return;
  }
  for (std::size_t first = 0; first < domain.size(); ++first) for_each_tuple(domain, length, first, fn);
}

BigInt binomial(Int n, Int k) {
  if (k < 0 || k > n) return 0;
  BigInt out = 1;
  for (Int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

BigInt tuple_count(Int values, Int length) {
  if (length == 0) return 1;
  return binomial(values + length - 1, length);
}

struct Task {
  std::size_t length;
  std::size_t first;
};

std::vector<Task> make_tasks(std::size_t domain_size, Int min_len, Int max_len) {
  std::vector<Task> tasks;
  for (Int len = std::max<Int>(min_len, 1); len <= max_len; ++len) {
    for (std::size_t first = 0; first < domain_size; ++first) tasks.push_back({static_cast<std::size_t>(len), first});
  }
  return tasks;
}

struct Partial {
  Int checked = 0;
  std::vector<Finding> counterexamples;
  std::vector<Finding> witnesses;
  std::map<std::string, Int> stats;
};

unsigned resolve_workers(unsigned requested, std::size_t tasks) {
  unsigned n = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(tasks, 1)));
}

// Runs fn(i) for every task on a pool of workers; results stay in task order.
template <class Result, class Fn>
std::vector<Result> run_partitioned(std::size_t tasks, unsigned workers, Fn fn) {
  std::vector<Result> out(tasks);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < tasks; i = next++) {
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const unsigned n = resolve_workers(workers, tasks);
  if (n <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(work);
  }
  if (error) std::rethrow_exception(error);
  return out;
}

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

VerifyReport assemble(std::string claim, const SearchBounds& bounds, std::vector<Partial> parts, const Stopwatch& clock) {
  VerifyReport report;
  report.claim = std::move(claim);
  report.bounds = bounds;
  std::map<std::string, Int> stats;
  for (auto& part : parts) {
    report.instances_checked += part.checked;
    std::move(part.counterexamples.begin(), part.counterexamples.end(), std::back_inserter(report.counterexamples));
    std::move(part.witnesses.begin(), part.witnesses.end(), std::back_inserter(report.equality_witnesses));
    for (const auto& [key, value] : part.stats) stats[key] += value;
  }
  report.statistics.assign(stats.begin(), stats.end());
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

Int sum_of(const Tuple& t) { return std::accumulate(t.begin(), t.end(), Int{0}); }

Int gcd_of(const Tuple& t) {
  Int g = 0;
  for (Int v : t) g = std::gcd(g, v);
  return g;
}

Int lcm_of(const Tuple& t) {
  Int l = 1;
  for (Int v : t) l = std::lcm(l, v);
  return l;
}

std::vector<char> membership(const Tuple& values, Int bound) {
  std::vector<char> out(static_cast<std::size_t>(bound) + 1, 0);
  for (Int v : values) {
    if (v <= bound) out[static_cast<std::size_t>(v)] = 1;
  }
  return out;
}

bool any_member(const Tuple& values, const std::vector<char>& set) {
  return std::any_of(values.begin(), values.end(),
                     [&](Int v) { return v < static_cast<Int>(set.size()) && set[static_cast<std::size_t>(v)]; });
}

std::string pair_text(const Tuple& degrees, const Tuple& weights) { return encode_pair(Pair::make(degrees, weights)); }

// Weight tuples by length with the codimension range each admits.
struct Domain {
  std::vector<Int> weights;
  std::vector<Int> degrees;
  Int min_len;
  Int max_len;
  // Codimension range for n + 1 = len.
  std::function<std::pair<Int, Int>(Int)> codims;
};

// Refuses runs whose candidate count, after the weight-level prefilter,
// exceeds the ceiling.
template <class Prefilter>
void enforce_ceiling(const Domain& domain, Prefilter prefilter, Int ceiling) {
  const auto degree_count = [&](Int len) {
    const auto [lo, hi] = domain.codims(len);
    BigInt total = 0;
    for (Int c = lo; c <= hi; ++c) total += tuple_count(static_cast<Int>(domain.degrees.size()), c);
    return total;
  };
  BigInt raw = 0;
  BigInt weight_tuples = 0;
  for (Int len = std::max<Int>(domain.min_len, 1); len <= domain.max_len; ++len) {
    const BigInt w = tuple_count(static_cast<Int>(domain.weights.size()), len);
    weight_tuples += w;
    raw += w * degree_count(len);
  }
  if (raw <= ceiling) return;
  if (weight_tuples > ceiling) throw CeilingExceeded(raw, ceiling);
  BigInt estimate = 0;
  for (Int len = std::max<Int>(domain.min_len, 1); len <= domain.max_len; ++len) {
    const BigInt per_tuple = degree_count(len);
    for_each_tuple(domain.weights, static_cast<std::size_t>(len), [&](const Tuple& a) {
      if (prefilter(a)) estimate += per_tuple;
    });
  }
  if (estimate > ceiling) throw CeilingExceeded(estimate, ceiling);
}

Int ceiling_of(const RunOptions& options) { return options.ceiling ? *options.ceiling : instance_ceiling(); }

bool regular_prefilter(const Tuple& a, const SearchBounds& bounds) {
  return RegularityConstraints(WeightClasses::from_weights(a), 1).satisfiable(bounds.max_codim, bounds.max_degree);
}

bool equality_form(const Tuple& d, const Tuple& a) {
  const auto s = std::count(d.begin(), d.end(), 6);
  const auto ones = std::count(d.begin(), d.end(), 1);
  if (s + ones != static_cast<long>(d.size())) return false;
  if (static_cast<long>(a.size()) != 2 * s) return false;
  return std::count(a.begin(), a.end(), 2) == s && std::count(a.begin(), a.end(), 3) == s;
}

}  // namespace

CeilingExceeded::CeilingExceeded(BigInt estimate, Int ceiling)
    : UsageError("search space of about " + estimate.str() + " instances exceeds the ceiling " + std::to_string(ceiling) +
                 " (set WCI_INSTANCE_CEILING to raise it)"),
      estimate_(std::move(estimate)) {}

Int instance_ceiling() {
  if (const char* env = std::getenv("WCI_INSTANCE_CEILING")) {
    try {
      std::size_t used = 0;
      const long long value = std::stoll(env, &used);
      if (used == std::string(env).size() && value > 0) return value;
    } catch (const std::exception&) {
    }
    throw UsageError("WCI_INSTANCE_CEILING must be a positive integer");
  }
  return kDefaultInstanceCeiling;
}

void validate(const SearchBounds& bounds) {
  if (bounds.min_codim < 0 || bounds.max_codim < 0 || bounds.min_vars < 0 || bounds.max_vars < 0 ||
      bounds.max_weight < 0 || bounds.max_degree < 0) {
    throw UsageError("search bounds must be nonnegative");
  }
}

std::string to_string(Claim claim) {
  switch (claim) {
    case Claim::ConjectureRegular: return "conjecture-regular";
    case Claim::PropRegular: return "prop-regular";
    case Claim::LemmaQdiv: return "lemma-qdiv";
    case Claim::Nonvanishing: return "nonvanishing";
    case Claim::Hypersurface: return "hypersurface";
  }
  return "?";
}

Claim parse_claim(const std::string& name) {
  for (Claim c : {Claim::ConjectureRegular, Claim::PropRegular, Claim::LemmaQdiv, Claim::Nonvanishing,
                  Claim::Hypersurface}) {
    if (to_string(c) == name) return c;
  }
  throw UsageError("unknown claim '" + name + "'");
}

SearchBounds default_bounds(Claim claim) {
  SearchBounds b;
  b.min_codim = 1;
  switch (claim) {
    case Claim::ConjectureRegular:
      b.max_codim = 2, b.max_vars = 5, b.max_weight = 10, b.max_degree = 40;
      break;
    case Claim::PropRegular:
      b.max_codim = 3, b.max_vars = 6, b.max_weight = 12, b.max_degree = 40;
      break;
    case Claim::LemmaQdiv:
      b.max_codim = 3, b.max_vars = 4, b.max_weight = 16, b.max_degree = 32;
      break;
    case Claim::Nonvanishing:
      b.max_codim = 2, b.max_vars = 6, b.max_weight = 8, b.max_degree = 24;
      break;
    case Claim::Hypersurface:
      b.max_codim = 1, b.max_vars = 5, b.max_weight = 10, b.max_degree = 60;
      break;
  }
  return b;
}

VerifyReport verify_prop_regular(const SearchBounds& bounds, const RunOptions& options) {
  validate(bounds);
  const Stopwatch clock;
  const Domain domain{value_domain(2, bounds.max_weight, 1), value_domain(1, bounds.max_degree, 1), bounds.min_vars,
                      bounds.max_vars, [&](Int) { return std::pair{bounds.min_codim, bounds.max_codim}; }};
  const auto prefilter = [&](const Tuple& a) { return regular_prefilter(a, bounds); };
  enforce_ceiling(domain, prefilter, ceiling_of(options));

  const auto tasks = make_tasks(domain.weights.size(), domain.min_len, domain.max_len);
  auto parts = run_partitioned<Partial>(tasks.size(), options.workers, [&](std::size_t i) {
    Partial part;
    for_each_tuple(domain.weights, tasks[i].length, tasks[i].first, [&](const Tuple& a) {
      if (!prefilter(a)) return;
      const RegularityConstraints constraints(WeightClasses::from_weights(a), 1);
      const auto is_weight = membership(a, bounds.max_degree);
      const Int sum_a = sum_of(a);
      const bool coprime = gcd_of(a) == 1;
      for (Int c = bounds.min_codim; c <= bounds.max_codim; ++c) {
        for_each_tuple(domain.degrees, static_cast<std::size_t>(c), [&](const Tuple& d) {
          if (any_member(d, is_weight) || !constraints.satisfied_by(d)) return;
          ++part.checked;
          const Int delta = sum_of(d) - sum_a;
          if (delta < c) part.counterexamples.push_back({pair_text(d, a), "i", {{"delta", delta}, {"c", c}}});
          if (delta != c) return;
          if (!coprime) {
            ++part.stats["equalities_gcd_above_one"];
            return;
          }
          const Int s = std::count(d.begin(), d.end(), 6);
          Finding f{pair_text(d, a), "ii", {{"delta", delta}, {"c", c}, {"s", s}}};
          if (equality_form(d, a)) {
            part.witnesses.push_back(std::move(f));
          } else {
            part.counterexamples.push_back(std::move(f));
          }
        });
      }
    });
    return part;
  });
  return assemble(to_string(Claim::PropRegular), bounds, std::move(parts), clock);
}

VerifyReport verify_conjecture_regular(const SearchBounds& bounds, const RunOptions& options) {
  validate(bounds);
  const Stopwatch clock;
  const Domain domain{value_domain(2, bounds.max_weight, 1), value_domain(1, bounds.max_degree, 1),
                      std::max<Int>(bounds.min_vars, 2), bounds.max_vars,
                      [&](Int len) { return std::pair{bounds.min_codim, std::min(bounds.max_codim, len - 1)}; }};
  const auto prefilter = [&](const Tuple& a) { return gcd_of(a) == 1 && regular_prefilter(a, bounds); };
  enforce_ceiling(domain, prefilter, ceiling_of(options));

  const auto tasks = make_tasks(domain.weights.size(), domain.min_len, domain.max_len);
  auto parts = run_partitioned<Partial>(tasks.size(), options.workers, [&](std::size_t i) {
    Partial part;
    for_each_tuple(domain.weights, tasks[i].length, tasks[i].first, [&](const Tuple& a) {
      if (!prefilter(a)) return;
      const RegularityConstraints constraints(WeightClasses::from_weights(a), 1);
      const auto is_weight = membership(a, bounds.max_degree);
      const Int sum_a = sum_of(a);
      const Int g = frobenius(a);
      const auto [lo, hi] = domain.codims(static_cast<Int>(a.size()));
      for (Int c = lo; c <= hi; ++c) {
        for_each_tuple(domain.degrees, static_cast<std::size_t>(c), [&](const Tuple& d) {
          if (any_member(d, is_weight) || !constraints.satisfied_by(d)) return;
          ++part.checked;
          const Int delta = sum_of(d) - sum_a;
          if (delta < g) part.counterexamples.push_back({pair_text(d, a), "bound", {{"delta", delta}, {"frobenius", g}}});
          if (delta == g) ++part.stats["equalities"];
        });
      }
    });
    return part;
  });
  return assemble(to_string(Claim::ConjectureRegular), bounds, std::move(parts), clock);
}

VerifyReport verify_lemma_qdiv(const SearchBounds& bounds, Int q, const RunOptions& options) {
  validate(bounds);
  if (!is_prime(q)) throw UsageError("lemma-qdiv needs a prime, got " + std::to_string(q));
  const Stopwatch clock;
  const Domain domain{value_domain(q, bounds.max_weight, q), value_domain(q, bounds.max_degree, q), bounds.min_vars,
                      bounds.max_vars, [&](Int) { return std::pair{bounds.min_codim, bounds.max_codim}; }};
  const auto prefilter = [&](const Tuple& a) { return regular_prefilter(a, bounds); };
  enforce_ceiling(domain, prefilter, ceiling_of(options));

  const auto tasks = make_tasks(domain.weights.size(), domain.min_len, domain.max_len);
  auto parts = run_partitioned<Partial>(tasks.size(), options.workers, [&](std::size_t i) {
    Partial part;
    for_each_tuple(domain.weights, tasks[i].length, tasks[i].first, [&](const Tuple& a) {
      if (!prefilter(a)) return;
      const RegularityConstraints constraints(WeightClasses::from_weights(a), 1);
      const auto is_weight = membership(a, bounds.max_degree);
      const Int sum_a = sum_of(a);
      const Int vars = static_cast<Int>(a.size());
      for (Int c = bounds.min_codim; c <= bounds.max_codim; ++c) {
        for_each_tuple(domain.degrees, static_cast<std::size_t>(c), [&](const Tuple& d) {
          if (any_member(d, is_weight) || !constraints.satisfied_by(d)) return;
          ++part.checked;
          const Int delta = sum_of(d) - sum_a;
          if (delta < c * q) {
            part.counterexamples.push_back({pair_text(d, a), "bound", {{"delta", delta}, {"cq", c * q}}});
          }
          if (delta != c * q) return;
          Finding f{pair_text(d, a), "equality", {{"delta", delta}, {"c", c}, {"vars", vars}}};
          if (c == vars) {
            part.witnesses.push_back(std::move(f));
          } else {
            part.counterexamples.push_back(std::move(f));
          }
        });
      }
    });
    return part;
  });
  auto report = assemble(to_string(Claim::LemmaQdiv), bounds, std::move(parts), clock);
  report.prime = q;
  return report;
}

VerifyReport verify_nonvanishing(const SearchBounds& bounds, const RunOptions& options) {
  validate(bounds);
  const Stopwatch clock;
  const Domain domain{value_domain(1, bounds.max_weight, 1), value_domain(1, bounds.max_degree, 1),
                      std::max<Int>(bounds.min_vars, 2), bounds.max_vars, [&](Int len) {
                        return std::pair{std::max<Int>(bounds.min_codim, 1), std::min(bounds.max_codim, len - 1)};
                      }};
  const auto prefilter = [](const Tuple& a) { return space_well_formed(WeightClasses::from_weights(a)); };
  enforce_ceiling(domain, prefilter, ceiling_of(options));

  const auto tasks = make_tasks(domain.weights.size(), domain.min_len, domain.max_len);
  auto parts = run_partitioned<Partial>(tasks.size(), options.workers, [&](std::size_t i) {
    Partial part;
    for_each_tuple(domain.weights, tasks[i].length, tasks[i].first, [&](const Tuple& a) {
      if (!prefilter(a)) return;
      const WeightClasses weights = WeightClasses::from_weights(a);
      const StratumTable table(weights, bounds.max_degree);
      const auto is_weight = membership(a, bounds.max_degree);
      const Int sum_a = sum_of(a);
      const Int units = weights.multiplicity_of(1);
      const auto [lo, hi] = domain.codims(static_cast<Int>(a.size()));
      for (Int c = lo; c <= hi; ++c) {
        for_each_tuple(domain.degrees, static_cast<std::size_t>(c), [&](const Tuple& d) {
          const Int delta = sum_of(d) - sum_a;
          if (delta > 0 || any_member(d, is_weight)) return;
          const WciFamily family(weights, d);
          if (!wci_well_formed(family, table) || !quasi_smooth(family, table).verdict) return;
          ++part.checked;
          ++part.stats[delta < 0 ? "fano" : "calabi_yau"];
          const std::string text = encode_family(family);

          const Int index = fundamental_index(family, table, Preconditions::Assume).index;
          const BigInt sections = h0_unchecked(family, index);
          if (sections < 1) part.counterexamples.push_back({text, "a", {{"h", index}, {"h0", sections}}});

          if (!is_smooth(family, table, Preconditions::Assume)) return;
          ++part.stats["smooth"];
          if (units < c) part.counterexamples.push_back({text, "b", {{"c1", units}, {"c", c}}});
          if (units == c) {
            Finding f{text, "b", {{"c1", units}, {"c", c}}};
            if (delta == 0 && equality_form(d, strip_units(Pair::make(d, a)).stripped.weights)) {
              part.witnesses.push_back(std::move(f));
            } else {
              part.counterexamples.push_back(std::move(f));
            }
          }
          if (units <= -delta) part.counterexamples.push_back({text, "c", {{"c1", units}, {"fano_index", -delta}}});
        });
      }
    });
    return part;
  });
  return assemble(to_string(Claim::Nonvanishing), bounds, std::move(parts), clock);
}

VerifyReport verify_hypersurface(const SearchBounds& bounds, const RunOptions& options) {
  validate(bounds);
  const Stopwatch clock;
  const Domain domain{value_domain(1, bounds.max_weight, 1), value_domain(1, bounds.max_degree, 1),
                      std::max<Int>(bounds.min_vars, 2), bounds.max_vars, [](Int) { return std::pair{Int{1}, Int{1}}; }};
  // Part (a) runs on every weight tuple, so nothing is prefiltered.
  enforce_ceiling(domain, [](const Tuple&) { return true; }, ceiling_of(options));

  const auto tasks = make_tasks(domain.weights.size(), domain.min_len, domain.max_len);
  auto parts = run_partitioned<Partial>(tasks.size(), options.workers, [&](std::size_t i) {
    Partial part;
    for_each_tuple(domain.weights, tasks[i].length, tasks[i].first, [&](const Tuple& a) {
      const Int sum_a = sum_of(a);

      // (a) the lcm inequality.
      Int h = 1;
      for (std::size_t s = 0; s < a.size(); ++s) {
        for (std::size_t t = s + 1; t < a.size(); ++t) h = std::lcm(h, std::gcd(a[s], a[t]));
      }
      if (std::none_of(a.begin(), a.end(), [h](Int v) { return h % v == 0; })) {
        ++part.stats["lemma_weight_tuples"];
        const Int lhs = lcm_of(a) - sum_a;
        for (std::size_t s = 0; s < a.size(); ++s) {
          for (std::size_t t = s + 1; t < a.size(); ++t) {
            const Int rhs = std::lcm(a[s], a[t]) - a[s] - a[t];
            if (lhs < rhs) {
              part.counterexamples.push_back({encode_weights(WeightClasses::from_weights(a)), "a",
                                              {{"f_minus_sum", lhs}, {"a_s", a[s]}, {"a_t", a[t]}, {"bound", rhs}}});
            }
          }
        }
      }

      const WeightClasses weights = WeightClasses::from_weights(a);
      if (!space_well_formed(weights)) return;
      const StratumTable table(weights, bounds.max_degree);
      const Int n = static_cast<Int>(a.size()) - 1;
      for (Int d : domain.degrees) {
        if (weights.multiplicity_of(d) > 0) continue;
        const WciFamily family(weights, {d});
        if (!wci_well_formed(family, table) || !quasi_smooth(family, table).verdict) continue;
        ++part.checked;
        const std::string text = encode_family(family);
        const Int delta = d - sum_a;
        const Int index = fundamental_index(family, table, Preconditions::Assume).index;

        // (b) ample Cartier h' with h' - delta > 0.
        const Int low = std::max<Int>(delta, 0);
        const Int high = low + bounds.max_degree;
        PoincareSeries series(family);
        for (Int hp = (low / index + 1) * index; hp <= high; hp += index) {
          ++part.stats["cartier_degrees"];
          if (series.coefficient(hp) < 1) part.counterexamples.push_back({text, "b", {{"h", hp}, {"h0", series.coefficient(hp)}}});
        }

        // (c) K_X Cartier: K_X + mH globally generated for m >= n.
        if (delta % index != 0) continue;
        ++part.stats["gorenstein"];
        for (Int m = n; m <= n + 2; ++m) {
          const Int ell = delta + m * index;
          if (ell == 0) continue;
          if (ell < 0 || !base_locus(family, ell).empty()) {
            part.counterexamples.push_back({text, "c", {{"m", m}, {"degree", ell}}});
          }
        }
      }
    });
    return part;
  });
  return assemble(to_string(Claim::Hypersurface), bounds, std::move(parts), clock);
}

VerifyReport run_claim(Claim claim, const SearchBounds& bounds, std::optional<Int> prime, const RunOptions& options) {
  if (prime && claim != Claim::LemmaQdiv) throw UsageError("--prime applies to lemma-qdiv only");
  switch (claim) {
    case Claim::ConjectureRegular: return verify_conjecture_regular(bounds, options);
    case Claim::PropRegular: return verify_prop_regular(bounds, options);
    case Claim::LemmaQdiv: return verify_lemma_qdiv(bounds, prime.value_or(kDefaultQdivPrime), options);
    case Claim::Nonvanishing: return verify_nonvanishing(bounds, options);
    case Claim::Hypersurface: return verify_hypersurface(bounds, options);
  }
  throw UsageError("unknown claim");
}

BigInt candidate_count(const SearchBounds& bounds, EnumerationKind kind) {
  validate(bounds);
  BigInt total = 0;
  for (Int len = std::max<Int>(bounds.min_vars, 1); len <= bounds.max_vars; ++len) {
    const Int hi = kind == EnumerationKind::Families ? std::min(bounds.max_codim, len - 1) : bounds.max_codim;
    BigInt degrees = 0;
    for (Int c = bounds.min_codim; c <= hi; ++c) degrees += tuple_count(bounds.max_degree, c);
    total += tuple_count(bounds.max_weight, len) * degrees;
  }
  return total;
}

std::vector<EnumeratedInstance> enumerate(const SearchBounds& bounds, EnumerationKind kind, const RunOptions& options) {
  validate(bounds);
  const Filters& f = bounds.filters;
  if (kind == EnumerationKind::Pairs && (f.smooth || f.quasi_smooth || f.well_formed)) {
    throw UsageError("smooth, quasi-smooth and well-formed filters apply to families only");
  }
  const Int ceiling = ceiling_of(options);
  const BigInt count = candidate_count(bounds, kind);
  if (count > ceiling) throw CeilingExceeded(count, ceiling);

  const auto weight_domain = value_domain(1, bounds.max_weight, 1);
  const auto degree_domain = value_domain(1, bounds.max_degree, 1);
  const auto tasks = make_tasks(weight_domain.size(), bounds.min_vars, bounds.max_vars);
  const bool type_filter = f.fano || f.calabi_yau;

  auto parts = run_partitioned<std::vector<EnumeratedInstance>>(tasks.size(), options.workers, [&](std::size_t i) {
    std::vector<EnumeratedInstance> out;
    for_each_tuple(weight_domain, tasks[i].length, tasks[i].first, [&](const Tuple& a) {
      const bool coprime = gcd_of(a) == 1;
      if (f.gcd_one && !coprime) return;
      const auto is_weight = membership(a, bounds.max_degree);
      const Int hi = kind == EnumerationKind::Families ? std::min(bounds.max_codim, static_cast<Int>(a.size()) - 1)
                                                      : bounds.max_codim;
      for (Int c = bounds.min_codim; c <= hi; ++c) {
        for_each_tuple(degree_domain, static_cast<std::size_t>(c), [&](const Tuple& d) {
          const bool cone = any_member(d, is_weight);
          if (f.exclude_cones && cone) return;
          const Int delta = sum_of(d) - sum_of(a);
          if (type_filter && !((f.fano && delta < 0) || (f.calabi_yau && delta == 0))) return;

          EnumeratedInstance inst;
          inst.delta = delta;
          if (kind == EnumerationKind::Pairs) {
            const Pair pair = Pair::make(d, a);
            inst.encoding = encode_pair(pair);
            inst.predicates = {{"regular", is_regular(pair).regular}, {"gcd_one", coprime}, {"cone", cone}};
          } else {
            const WciFamily family(WeightClasses::from_weights(a), d);
            const FamilyAnalysis analysis = analyze(family);
            if (f.well_formed && !analysis.well_formed) return;
            if (f.quasi_smooth && analysis.quasi_smooth != true) return;
            if (f.smooth && analysis.smooth != true) return;
            inst.encoding = encode_family(family);
            inst.predicates = {{"linear_cone", cone},
                               {"well_formed", analysis.well_formed},
                               {"quasi_smooth", analysis.quasi_smooth},
                               {"smooth", analysis.smooth},
                               {"gcd_one", coprime}};
            if (analysis.classification) inst.type = to_string(analysis.classification->type);
            inst.fundamental_index = analysis.fundamental_index;
          }
          out.push_back(std::move(inst));
        });
      }
    });
    return out;
  });

  std::vector<EnumeratedInstance> merged;
  for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(merged));
  return merged;
}

}  // namespace wci
