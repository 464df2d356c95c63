#include "fairchore/state.hpp"

#include <algorithm>
#include <numeric>

#include "fairchore/errors.hpp"

namespace fairchore {

CompetitiveState make_competitive_state(const Instance& instance, Allocation allocation,
                                        PaymentVector payments) {
    const int n = instance.agent_count();
    const int m = instance.chore_count();
    if (allocation.agent_count() != n) throw ValidationError("allocation/instance agent mismatch");
    if (static_cast<int>(payments.size()) != m)
        throw ValidationError("payment vector length must equal chore count");
    for (const auto& p : payments)
        if (p < 0) throw ValidationError("payments must be nonnegative");

    CompetitiveState state;
    state.allocation = std::move(allocation);
    state.payments = std::move(payments);
    state.mpb_ratios.resize(n);
    state.mpb_sets.resize(n);
    state.earnings.assign(n, Rational(0));

    for (int i = 0; i < n; ++i) {
        std::optional<Rational> best;
        for (int j = 0; j < m; ++j) {
            if (state.payments[j] == 0) continue;
            Rational ratio = instance.disutility(i, j) / state.payments[j];
            if (!best || ratio < *best) best = ratio;
        }
        state.mpb_ratios[i] = best;
        for (int j = 0; j < m; ++j) {
            if (state.payments[j] == 0) {
                // Free chores join every MPB set; positive-disutility unpaid
                // chores are MPB only when no finite ratio exists.
                if (instance.disutility(i, j) == 0 || !best) state.mpb_sets[i].push_back(j);
            } else if (best && instance.disutility(i, j) / state.payments[j] == *best) {
                state.mpb_sets[i].push_back(j);
            }
        }
    }

    state.mpb_consistent = true;
    for (int i = 0; i < n; ++i) {
        for (int chore : state.allocation.bundles[i]) {
            state.earnings[i] += state.payments[chore];
            if (!std::binary_search(state.mpb_sets[i].begin(), state.mpb_sets[i].end(), chore))
                state.mpb_consistent = false;
        }
    }
    return state;
}

Rational earning(const CompetitiveState& state, int agent) { return state.earnings[agent]; }

Rational earning_minus_one(const CompetitiveState& state, int agent) {
    const auto& bundle = state.allocation.bundles[agent];
    if (bundle.empty()) return Rational(0);
    Rational top = state.payments[bundle.front()];
    for (int chore : bundle) top = std::max(top, state.payments[chore]);
    return state.earnings[agent] - top;
}

namespace {

template <typename Value>
int select_agent(const std::vector<int>& within, bool want_max, Value&& value) {
    if (within.empty()) throw ValidationError("agent selection over an empty set");
    int best = -1;
    Rational best_value;
    for (int agent : within) {
        Rational v = value(agent);
        bool better = best < 0 || (want_max ? v > best_value : v < best_value) ||
                      (v == best_value && agent < best);
        if (better) {
            best = agent;
            best_value = v;
        }
    }
    return best;
}

}  // namespace

int weighted_big_earner(const CompetitiveState& state, const std::vector<Rational>& weights,
                        const std::vector<int>& within) {
    return select_agent(within, true,
                        [&](int i) { return earning_minus_one(state, i) / weights[i]; });
}

int weighted_least_earner(const CompetitiveState& state, const std::vector<Rational>& weights,
                          const std::vector<int>& within) {
    return select_agent(within, false, [&](int i) { return state.earnings[i] / weights[i]; });
}

std::vector<int> all_agents(const Instance& instance) {
    std::vector<int> agents(instance.agent_count());
    std::iota(agents.begin(), agents.end(), 0);
    return agents;
}

}  // namespace fairchore
