#include "wci/selection.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "wci/errors.hpp"

namespace wci {

namespace {

struct Group {
  std::uint32_t cls;
  std::uint32_t pattern;
  Int count;
  auto operator<=>(const Group&) const = default;
};

using State = std::vector<Group>;

class Search {
 public:
  explicit Search(const SelectionProblem& problem)
      : problem_(problem), dead_(problem.degrees), chosen_(problem.degrees) {}

  std::optional<SelectionCounts> run() {
    State start;
    for (std::uint32_t i = 0; i < problem_.classes.size(); ++i) {
      if (problem_.classes[i].multiplicity > 0) start.push_back({i, 0, problem_.classes[i].multiplicity});
    }
    if (!descend(0, start)) return std::nullopt;
    return chosen_;
  }

 private:
  bool descend(std::size_t j, const State& state) {
    if (j == problem_.degrees) return true;
    if (dead_[j].contains(state)) return false;

    std::vector<std::size_t> usable;
    for (std::size_t g = 0; g < state.size(); ++g) {
      if (problem_.classes[state[g].cls].available & (1u << j)) usable.push_back(g);
    }
    // Fresh coordinates first: they enlarge every union.
    std::stable_sort(usable.begin(), usable.end(),
                     [&](std::size_t a, std::size_t b) { return std::popcount(state[a].pattern) < std::popcount(state[b].pattern); });

    std::vector<Int> take(state.size(), 0);
    if (distribute(j, state, usable, 0, problem_.size, take)) return true;
    dead_[j].insert(state);
    return false;
  }

  bool distribute(std::size_t j, const State& state, const std::vector<std::size_t>& usable, std::size_t pos, Int left,
                  std::vector<Int>& take) {
    if (left == 0) return try_step(j, state, take);
    if (pos == usable.size()) return false;
    Int capacity = 0;
    for (std::size_t p = pos; p < usable.size(); ++p) capacity += state[usable[p]].count;
    if (capacity < left) return false;

    const std::size_t g = usable[pos];
    for (Int x = std::min(left, state[g].count); x >= 0; --x) {
      take[g] = x;
      if (distribute(j, state, usable, pos + 1, left - x, take)) return true;
    }
    take[g] = 0;
    return false;
  }

  bool try_step(std::size_t j, const State& state, const std::vector<Int>& take) {
    State next;
    std::vector<Int> per_class(problem_.classes.size(), 0);
    for (std::size_t g = 0; g < state.size(); ++g) {
      const Group& group = state[g];
      if (take[g] > 0) {
        next.push_back({group.cls, group.pattern | (1u << j), take[g]});
        per_class[group.cls] += take[g];
      }
      if (group.count - take[g] > 0) next.push_back({group.cls, group.pattern, group.count - take[g]});
    }
    std::sort(next.begin(), next.end());

    // Unions for J containing j are final once degree j is placed.
    const std::uint32_t bit = 1u << j;
    for (std::uint32_t rest = 0; rest < bit; ++rest) {
      const std::uint32_t subset = rest | bit;
      Int covered = 0;
      for (const Group& group : next) {
        if (group.pattern & subset) covered += group.count;
      }
      if (covered < problem_.size + std::popcount(subset) - 1) return false;
    }

    chosen_[j] = per_class;
    return descend(j + 1, next);
  }

  const SelectionProblem& problem_;
  std::vector<std::set<State>> dead_;
  SelectionCounts chosen_;
};

void validate(const SelectionProblem& problem) {
  if (problem.degrees > 31) throw UsageError("selection: too many degrees");
  if (problem.size < 1) throw UsageError("selection: size must be positive");
}

}  // namespace

bool passes_union_prefilter(const SelectionProblem& problem) {
  validate(problem);
  const std::uint32_t subsets = 1u << problem.degrees;
  for (std::uint32_t subset = 1; subset < subsets; ++subset) {
    Int covered = 0;
    for (const auto& c : problem.classes) {
      if (c.available & subset) covered += c.multiplicity;
    }
    if (covered < problem.size + std::popcount(subset) - 1) return false;
  }
  return true;
}

std::optional<SelectionCounts> find_selection(const SelectionProblem& problem) {
  validate(problem);
  if (problem.degrees == 0) return SelectionCounts{};
  if (!passes_union_prefilter(problem)) return std::nullopt;
  return Search(problem).run();
}

}  // namespace wci
