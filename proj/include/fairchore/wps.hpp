#pragma once

#include <utility>
#include <vector>

#include "fairchore/rational.hpp"

namespace fairchore {

/// Trace of one weighted-picking-sequence run. In round r (0-based) the chore
/// with the r-th largest cost goes to the picker minimizing count/weight, ties
/// to the smallest position.
struct PickEvent {
    int round;
    int picker;  // position within the group
    int chore;
};

struct PickState {
    std::vector<int> counts;
    std::vector<PickEvent> sequence;
};

struct WpsResult {
    std::vector<std::vector<int>> bundles;  // parallel to the weights argument
    PickState picks;
};

/// Allocates `chore_costs` among pickers with the given positive weights.
/// Chores are processed in non-increasing cost order, equal costs in ascending
/// chore id. Group members share one disutility function, so the caller may
/// pass either disutilities or payments as costs.
WpsResult wps(const std::vector<Rational>& weights,
              const std::vector<std::pair<int, Rational>>& chore_costs);

/// Allocates identical unit-payment chores by parking them all on the first
/// agent and transferring one at a time to the weighted least earner among the
/// rest (ties to the smallest position) until no agent envies up to one chore.
/// Produces the same bundle sizes as wps on unit costs.
std::vector<std::vector<int>> allocate_identical_by_transfers(const std::vector<Rational>& weights,
                                                              const std::vector<int>& chores);

struct WpsComparePair {
    WpsResult with_chore;     // wps over the full chore list
    WpsResult without_chore;  // wps with `removed_chore` deleted
};

/// Runs wps twice, with and without one chore, for monotonicity checks.
WpsComparePair wps_remove_compare(const std::vector<Rational>& weights,
                                  const std::vector<std::pair<int, Rational>>& chore_costs,
                                  int removed_chore);

}  // namespace fairchore
