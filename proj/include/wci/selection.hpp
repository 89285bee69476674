#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wci/arith.hpp"

namespace wci {

/// A weight class lying outside the stratum. Bit j of `available` is set when
/// the j-th remaining degree has a monomial x_e * x_I^M with x_e in this class.
struct OutsideClass {
  Int value;
  Int multiplicity;
  std::uint32_t available;
};

/// Choose, for each of `degrees` degrees, `size` distinct outside coordinates
/// from its availability set so that every nonempty set J of degrees covers
/// at least size + |J| - 1 coordinates in total.
struct SelectionProblem {
  std::size_t degrees = 0;
  Int size = 0;
  std::vector<OutsideClass> classes;
};

/// [degree][class] -> number of coordinates of that class chosen for the degree.
using SelectionCounts = std::vector<std::vector<Int>>;

/// The union bound evaluated on whole availability sets. Necessary for a
/// selection to exist, and sufficient when there is a single degree.
bool passes_union_prefilter(const SelectionProblem& problem);

/// Exact search. Coordinates of one class are interchangeable, so the state is
/// the number of coordinates per (class, set of degrees already using them).
std::optional<SelectionCounts> find_selection(const SelectionProblem& problem);

}  // namespace wci
