#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "fairchore/instance.hpp"

namespace fairchore::oracle {

/// Work limits for the exhaustive checks. Defaults keep desk-scale runs in the
/// seconds range; callers may widen them.
struct Budget {
    unsigned long long enumeration_limit = 10'000'000ULL;  // max n^m
    long long lp_cell_limit = 400;                         // max n*m for the LP
};

struct DominationQuery {
    Instance instance;
    Allocation candidate;  // must be a complete partition
};

/// n^m as an exact big integer.
BigInt allocation_count(const Instance& instance);

/// Visits every complete integral allocation exactly once, in lexicographic
/// order of the chore->agent assignment vector. The visitor may return false
/// to stop early. Throws BudgetExceededError if n^m exceeds the budget.
void enumerate_allocations(const Instance& instance,
                           const std::function<bool(const Allocation&)>& visit,
                           const Budget& budget = {});

/// Searches for an allocation y with d_i(y_i) <= d_i(x_i) for every agent and
/// strictly less for someone. Returns the lexicographically first witness, or
/// nullopt when the candidate is Pareto-optimal among integral allocations.
std::optional<Allocation> is_integrally_dominated(const DominationQuery& query,
                                                  const Budget& budget = {});

/// Decides, by exact-rational linear programming, whether some fractional
/// allocation dominates the candidate. False certifies fractional Pareto
/// optimality.
bool is_fractionally_dominated(const DominationQuery& query, const Budget& budget = {});

/// All allocations that are weighted-EF1 and not integrally dominated; with
/// `also_fractional` set, additionally not fractionally dominated.
std::vector<Allocation> exhaustive_wef1_po_set(const Instance& instance,
                                               const Budget& budget = {},
                                               bool also_fractional = false);

}  // namespace fairchore::oracle
