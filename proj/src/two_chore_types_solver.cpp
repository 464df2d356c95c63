#include "fairchore/two_chore_types_solver.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "fairchore/errors.hpp"

namespace fairchore {

namespace {

PaymentVector phase_payments(const Instance& instance, int pivot_agent, int chore_count,
                             const std::vector<int>& a_chores, const std::vector<int>& b_chores) {
    PaymentVector payments(chore_count);
    for (int j : a_chores) payments[j] = instance.disutility(pivot_agent, j);
    for (int j : b_chores) payments[j] = instance.disutility(pivot_agent, j);
    return payments;
}

// Lowest-id chore of the given class held by the pivot, if any.
std::optional<int> held_chore_of_class(const std::vector<int>& bundle,
                                       const std::vector<int>& chore_class) {
    for (int chore : bundle)  // bundle kept sorted ascending
        if (std::binary_search(chore_class.begin(), chore_class.end(), chore)) return chore;
    return std::nullopt;
}

}  // namespace

std::vector<int> two_type_agent_order(const Instance& instance, const std::vector<int>& a_chores,
                                      const std::vector<int>& b_chores) {
    std::vector<int> order(instance.agent_count());
    std::iota(order.begin(), order.end(), 0);
    if (a_chores.empty() || b_chores.empty()) return order;
    const int a_rep = a_chores.front();
    const int b_rep = b_chores.front();
    std::stable_sort(order.begin(), order.end(), [&](int lhs, int rhs) {
        // d_lA/d_lB < d_rA/d_rB, cross-multiplied (disutilities are positive).
        return instance.disutility(lhs, a_rep) * instance.disutility(rhs, b_rep) <
               instance.disutility(rhs, a_rep) * instance.disutility(lhs, b_rep);
    });
    return order;
}

PhaseOutcome run_phase(const Instance& instance, const std::vector<int>& agent_order,
                       const std::vector<int>& a_chores, const std::vector<int>& b_chores,
                       int pivot, const TwoChoreTypesOptions& options) {
    const int n = instance.agent_count();
    const int m = instance.chore_count();
    const int pivot_agent = agent_order[pivot];

    PhaseOutcome outcome;
    outcome.pivot = pivot;
    outcome.allocation.bundles.resize(n);
    auto& bundles = outcome.allocation.bundles;
    bundles[pivot_agent].resize(m);
    std::iota(bundles[pivot_agent].begin(), bundles[pivot_agent].end(), 0);

    const PaymentVector payments = phase_payments(instance, pivot_agent, m, a_chores, b_chores);

    std::vector<int> position(n);  // original id -> sorted position
    for (int k = 0; k < n; ++k) position[agent_order[k]] = k;

    while (true) {
        CompetitiveState cs = make_competitive_state(instance, outcome.allocation, payments);
        if (!cs.mpb_consistent) throw InternalError("phase state left the MPB frontier");
        if (options.observer) options.observer(pivot_agent, outcome.allocation, payments);

        if (check_wpef1(cs, instance.weights).verdict) {
            outcome.result = PhaseResult::Success;
            return outcome;
        }
        // While envy persists the pivot must be the unique weighted big earner.
        {
            const Rational pivot_value =
                earning_minus_one(cs, pivot_agent) / instance.weights[pivot_agent];
            for (int i = 0; i < n; ++i) {
                if (i == pivot_agent) continue;
                if (earning_minus_one(cs, i) / instance.weights[i] >= pivot_value)
                    throw InternalError("pivot is not the unique weighted big earner");
            }
        }

        // All weighted least earners, as sorted positions.
        std::vector<int> least_positions;
        {
            Rational best;
            for (int i = 0; i < n; ++i) {
                Rational value = cs.earnings[i] / instance.weights[i];
                if (least_positions.empty() || value < best) {
                    best = value;
                    least_positions.clear();
                }
                if (value == best) least_positions.push_back(position[i]);
            }
            std::sort(least_positions.begin(), least_positions.end());
        }

        std::optional<int> left;   // largest least-earner position below the pivot
        std::optional<int> right;  // smallest least-earner position above the pivot
        for (int pos : least_positions) {
            if (pos < pivot) left = pos;
            if (pos > pivot && !right) right = pos;
        }

        std::optional<int> moved;
        int receiver_pos = -1;
        if (left && (moved = held_chore_of_class(bundles[pivot_agent], a_chores))) {
            receiver_pos = *left;
        } else if (right && (moved = held_chore_of_class(bundles[pivot_agent], b_chores))) {
            receiver_pos = *right;
        } else {
            if (left && !right) {
                outcome.result = PhaseResult::AFail;
            } else if (right && !left) {
                outcome.result = PhaseResult::BFail;
            } else {
                // Least earners on both sides with an undepleted pivot bundle
                // would always admit a transfer.
                throw InternalError("phase failure with least earners on both sides");
            }
            return outcome;
        }

        auto& pivot_bundle = bundles[pivot_agent];
        pivot_bundle.erase(std::find(pivot_bundle.begin(), pivot_bundle.end(), *moved));
        auto& target = bundles[agent_order[receiver_pos]];
        target.insert(std::upper_bound(target.begin(), target.end(), *moved), *moved);
        if (++outcome.transfers > m) throw InternalError("phase exceeded m transfers");
    }
}

TwoChoreTypesResult solve_two_chore_types(const Instance& instance,
                                          const TwoChoreTypesOptions& options) {
    if (instance.has_zero_disutility())
        throw ValidationError("solver requires strictly positive disutilities");
    auto [agent_types, chore_types] = classify(instance);
    if (chore_types.type_count() > 2)
        throw UnsupportedInstanceError("instance has more than two chore types");

    TwoChoreTypesResult result;
    if (chore_types.type_count() >= 1) result.a_chores = chore_types.classes[0];
    if (chore_types.type_count() == 2) result.b_chores = chore_types.classes[1];
    result.agent_order = two_type_agent_order(instance, result.a_chores, result.b_chores);

    for (int pivot = 0; pivot < instance.agent_count(); ++pivot) {
        PhaseOutcome outcome = run_phase(instance, result.agent_order, result.a_chores,
                                         result.b_chores, pivot, options);
        result.phases.push_back(outcome);
        if (outcome.result == PhaseResult::Success) {
            result.successful_pivot = pivot;
            const int pivot_agent = result.agent_order[pivot];
            result.state = make_competitive_state(
                instance, outcome.allocation,
                phase_payments(instance, pivot_agent, instance.chore_count(), result.a_chores,
                               result.b_chores));
            if (!check_mpb_certificate(result.state))
                throw InternalError("final state is not a competitive equilibrium");
            if (!check_wef1(instance, result.state.allocation).verdict)
                throw InternalError("final allocation is not weighted-EF1");
            return result;
        }
        if (pivot == 0 && outcome.result == PhaseResult::AFail)
            throw InternalError("first pivot cannot fail on the A side");
        if (pivot == instance.agent_count() - 1 && outcome.result == PhaseResult::BFail)
            throw InternalError("last pivot cannot fail on the B side");
    }
    throw InternalError("every pivot phase failed; existence guarantee violated");
}

}  // namespace fairchore
