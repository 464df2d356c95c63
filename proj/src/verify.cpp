#include "fairchore/verify.hpp"

#include <algorithm>

#include "fairchore/errors.hpp"

namespace fairchore {

FairnessReport check_wef1(const Instance& instance, const Allocation& allocation) {
    const int n = instance.agent_count();
    if (allocation.agent_count() != n) throw ValidationError("allocation/instance agent mismatch");
    if (!allocation.is_complete_partition(instance.chore_count()))
        throw ValidationError("allocation is not a complete partition of the chores");

    FairnessReport report{FairnessCriterion::Wef1, true, {}};
    for (int i = 0; i < n; ++i) {
        const auto& bundle = allocation.bundles[i];
        if (bundle.empty()) continue;
        Rational total = 0;
        Rational worst = instance.disutility(i, bundle.front());
        for (int chore : bundle) {
            total += instance.disutility(i, chore);
            worst = std::max(worst, instance.disutility(i, chore));
        }
        // Best single removal: dropping the highest-disutility own chore.
        Rational lhs = (total - worst) / instance.weights[i];
        for (int h = 0; h < n; ++h) {
            if (h == i) continue;
            Rational rhs =
                instance.bundle_disutility(i, allocation.bundles[h]) / instance.weights[h];
            if (lhs > rhs) report.witnesses.push_back({i, h, lhs, rhs});
        }
    }
    report.verdict = report.witnesses.empty();
    return report;
}

FairnessReport check_wpef1(const CompetitiveState& state, const std::vector<Rational>& weights) {
    const int n = state.allocation.agent_count();
    FairnessReport report{FairnessCriterion::WpEf1, true, {}};
    for (int i = 0; i < n; ++i) {
        Rational lhs = earning_minus_one(state, i) / weights[i];
        for (int h = 0; h < n; ++h) {
            if (h == i) continue;
            Rational rhs = state.earnings[h] / weights[h];
            if (lhs > rhs) report.witnesses.push_back({i, h, lhs, rhs});
        }
    }
    report.verdict = report.witnesses.empty();
    return report;
}

bool check_mpb_certificate(const CompetitiveState& state) {
    return state.mpb_consistent &&
           state.allocation.is_complete_partition(static_cast<int>(state.payments.size()));
}

bool check_wef1_implication(const Instance& instance, const CompetitiveState& state) {
    if (!check_mpb_certificate(state))
        throw ValidationError("state is not MPB-certified");
    if (!check_wpef1(state, instance.weights).verdict) return true;
    return check_wef1(instance, state.allocation).verdict;
}

}  // namespace fairchore
