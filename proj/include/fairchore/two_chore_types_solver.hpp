#pragma once

#include <functional>
#include <vector>

#include "fairchore/state.hpp"
#include "fairchore/verify.hpp"

namespace fairchore {

enum class PhaseResult {
    Success,  // allocation became weighted-payment-EF1
    AFail,    // a least earner sits left of the pivot but the pivot has no A-chore
    BFail,    // a least earner sits right of the pivot but the pivot has no B-chore
};

/// Outcome of one pivot phase. `pivot` is a 0-based position in the sorted
/// agent order; `allocation` is the state at exit, indexed by original agent
/// ids.
struct PhaseOutcome {
    int pivot = -1;
    PhaseResult result = PhaseResult::Success;
    Allocation allocation;
    int transfers = 0;
};

struct TwoChoreTypesOptions {
    // Called on every intermediate state of every phase (initial state and
    // after each transfer). `pivot_agent` is the original agent id.
    std::function<void(int pivot_agent, const Allocation&, const PaymentVector&)> observer;
};

struct TwoChoreTypesResult {
    CompetitiveState state;
    int successful_pivot = -1;          // position in `agent_order`
    std::vector<PhaseOutcome> phases;   // in pivot order, ending with the success
    std::vector<int> agent_order;       // original ids sorted by d_iA/d_iB
    std::vector<int> a_chores;          // class of chore 0 (empty iff m = 0)
    std::vector<int> b_chores;          // the other class, possibly empty
};

/// Computes a weighted-EF1, fractionally-Pareto-optimal allocation for an
/// instance whose chores come in at most two types. One-type (or zero-chore)
/// instances run through the same phase loop with the B side empty.
TwoChoreTypesResult solve_two_chore_types(const Instance& instance,
                                          const TwoChoreTypesOptions& options = {});

/// Runs a single phase: park every chore on the pivot, price chores at the
/// pivot's disutilities, then hand chores to side-matching least earners until
/// the state is weighted-payment-EF1 or the pivot runs out of the needed type.
PhaseOutcome run_phase(const Instance& instance, const std::vector<int>& agent_order,
                       const std::vector<int>& a_chores, const std::vector<int>& b_chores,
                       int pivot, const TwoChoreTypesOptions& options = {});

/// Agents sorted by non-decreasing d_iA/d_iB, ties stable by original id.
/// With no B-chores the original order is kept.
std::vector<int> two_type_agent_order(const Instance& instance, const std::vector<int>& a_chores,
                                      const std::vector<int>& b_chores);

}  // namespace fairchore
