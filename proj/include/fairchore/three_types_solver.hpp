#pragma once

#include <array>
#include <functional>
#include <vector>

#include "fairchore/state.hpp"
#include "fairchore/verify.hpp"

namespace fairchore {

/// Working state of the three-agent-types solver. Agents are grouped by type
/// into at most three slots (missing types leave a slot empty, holding no
/// agents and never any chores). Slot 0 is the type of agent 0 and starts with
/// every chore.
///
/// Invariants kept after every step:
///  - group_chores partition the chores;
///  - each slot's bundles equal the picking-sequence split of its chores under
///    current payments;
///  - the full state is MPB-consistent;
///  - payments of slot s chores equal that type's disutility times
///    group_payscale[s]; slot 0's scale stays 1.
struct GroupState {
    std::array<std::vector<int>, 3> group_agents;
    std::array<std::vector<int>, 3> group_chores;
    std::array<Rational, 3> group_payscale;
    Allocation allocation;
    PaymentVector payments;
};

/// Roles recomputed from scratch before each step; ties in the underlying
/// argmax/argmin go to the smallest agent id.
struct Roles {
    int big_earner = -1;   // agent id
    int least_earner = -1; // agent id
    int beta = -1;         // slot of the weighted big earner
    int lambda = -1;       // slot of the weighted least earner
    int mu = -1;           // the remaining slot
};

enum class StepKind {
    TransferBetaToLambda,
    TransferMuToLambda,
    TransferBetaToMu,
    DropMuLambda,  // scale payments of the mu and lambda slots by gamma
    DropLambda,    // scale payments of the lambda slot by gamma
};

struct StepEvent {
    StepKind kind;
    int chore = -1;       // moved chore for transfer events
    Rational gamma;       // strictly below 1 for drop events
    int beta = -1, lambda = -1, mu = -1;
};

struct ThreeTypesOptions {
    // Iteration safety cap; negative means the default 64*m^3 + 64*m + 64.
    // Exceeding it raises InternalError: termination is guaranteed, so a cap
    // hit means a bug.
    long long step_cap = -1;
    bool record_snapshots = false;
    // Called after each executed step with the post-step state.
    std::function<void(const GroupState&, const StepEvent&)> observer;
};

struct ThreeTypesResult {
    CompetitiveState state;
    std::vector<StepEvent> trace;
    // When recorded: snapshots[0] is the initial state, snapshots[k] the state
    // right after trace[k-1].
    std::vector<GroupState> snapshots;
};

/// Computes a weighted-EF1, fractionally-Pareto-optimal allocation for an
/// instance with at most three agent types.
ThreeTypesResult solve_three_agent_types(const Instance& instance,
                                         const ThreeTypesOptions& options = {});

/// Initial state: every chore priced at slot 0's disutility and allocated to
/// slot 0 by picking sequence. Rejects instances with more than three agent
/// types or with any zero disutility.
GroupState initial_group_state(const Instance& instance);

Roles compute_roles(const Instance& instance, const GroupState& state,
                    const CompetitiveState& cs);

/// Executes exactly one transfer or payment-drop step. Precondition: the state
/// is not weighted-payment-EF1.
StepEvent step(const Instance& instance, GroupState& state, const Roles& roles);

/// Gate for moving chore j from the middle-earner slot to the least-earner
/// slot: after losing j, every middle-group member must still out-earn the
/// current weighted least earner.
bool mu_to_lambda_guard(const Instance& instance, const GroupState& state, const Roles& roles,
                        int chore);

CompetitiveState group_state_to_competitive(const Instance& instance, const GroupState& state);

}  // namespace fairchore
