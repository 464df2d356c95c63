#include "fairchore/three_types_solver.hpp"

#include <algorithm>

#include "fairchore/errors.hpp"
#include "fairchore/wps.hpp"

namespace fairchore {

namespace {

int slot_of_agent(const GroupState& state, int agent) {
    for (int s = 0; s < 3; ++s)
        for (int member : state.group_agents[s])
            if (member == agent) return s;
    throw InternalError("agent missing from every group slot");
}

// Re-derives a slot's bundles as the picking-sequence split of its chores
// under current payments. Within a slot payments are proportional to the
// type's disutilities, so sorting by payment matches sorting by disutility.
void rebuild_slot_allocation(const Instance& instance, GroupState& state, int slot) {
    const auto& agents = state.group_agents[slot];
    if (agents.empty()) {
        if (!state.group_chores[slot].empty())
            throw InternalError("chores assigned to an empty group slot");
        return;
    }
    std::vector<Rational> group_weights;
    group_weights.reserve(agents.size());
    for (int agent : agents) group_weights.push_back(instance.weights[agent]);
    std::vector<std::pair<int, Rational>> costs;
    costs.reserve(state.group_chores[slot].size());
    for (int chore : state.group_chores[slot]) costs.emplace_back(chore, state.payments[chore]);
    WpsResult split = wps(group_weights, costs);
    for (std::size_t k = 0; k < agents.size(); ++k)
        state.allocation.bundles[agents[k]] = std::move(split.bundles[k]);
}

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

void move_chore(GroupState& state, int chore, int from_slot, int to_slot) {
    auto& from = state.group_chores[from_slot];
    auto it = std::find(from.begin(), from.end(), chore);
    if (it == from.end()) throw InternalError("transfer source does not hold the chore");
    from.erase(it);
    auto& to = state.group_chores[to_slot];
    to.insert(std::upper_bound(to.begin(), to.end(), chore), chore);
}

const std::vector<int>& slot_mpb(const CompetitiveState& cs, const GroupState& state, int slot) {
    return cs.mpb_sets[state.group_agents[slot].front()];
}

Rational slot_mpb_ratio(const CompetitiveState& cs, const GroupState& state, int slot) {
    const auto& ratio = cs.mpb_ratios[state.group_agents[slot].front()];
    if (!ratio) throw InternalError("group has no finite pain-per-buck ratio");
    return *ratio;
}

const Rational& slot_disutility(const Instance& instance, const GroupState& state, int slot,
                                int chore) {
    return instance.disutility(state.group_agents[slot].front(), chore);
}

}  // namespace

CompetitiveState group_state_to_competitive(const Instance& instance, const GroupState& state) {
    return make_competitive_state(instance, state.allocation, state.payments);
}

GroupState initial_group_state(const Instance& instance) {
    if (instance.has_zero_disutility())
        throw ValidationError("solver requires strictly positive disutilities");
    auto [agent_types, chore_types] = classify(instance);
    if (agent_types.type_count() > 3)
        throw UnsupportedInstanceError("instance has more than three agent types");

    GroupState state;
    for (int s = 0; s < agent_types.type_count(); ++s)
        state.group_agents[s] = agent_types.groups[s];
    state.group_payscale = {Rational(1), Rational(1), Rational(1)};
    state.allocation.bundles.resize(instance.agent_count());

    const int m = instance.chore_count();
    state.group_chores[0].resize(m);
    for (int j = 0; j < m; ++j) state.group_chores[0][j] = j;
    state.payments.resize(m);
    const int anchor = state.group_agents[0].front();
    for (int j = 0; j < m; ++j) state.payments[j] = instance.disutility(anchor, j);

    for (int s = 0; s < 3; ++s) rebuild_slot_allocation(instance, state, s);
    return state;
}

Roles compute_roles(const Instance& instance, const GroupState& state,
                    const CompetitiveState& cs) {
    Roles roles;
    const auto agents = all_agents(instance);
    roles.big_earner = weighted_big_earner(cs, instance.weights, agents);
    roles.least_earner = weighted_least_earner(cs, instance.weights, agents);
    roles.beta = slot_of_agent(state, roles.big_earner);
    roles.lambda = slot_of_agent(state, roles.least_earner);
    if (roles.beta == roles.lambda)
        throw InternalError("big and least earner share a group in a non-wpEF1 state");
    roles.mu = 3 - roles.beta - roles.lambda;
    return roles;
}

bool mu_to_lambda_guard(const Instance& instance, const GroupState& state, const Roles& roles,
                        int chore) {
    const auto& mu_agents = state.group_agents[roles.mu];
    std::vector<Rational> weights;
    weights.reserve(mu_agents.size());
    for (int agent : mu_agents) weights.push_back(instance.weights[agent]);
    std::vector<std::pair<int, Rational>> costs;
    for (int c : state.group_chores[roles.mu])
        if (c != chore) costs.emplace_back(c, state.payments[c]);
    WpsResult reduced = wps(weights, costs);

    Rational least;
    bool first = true;
    for (std::size_t k = 0; k < mu_agents.size(); ++k) {
        Rational total = 0;
        for (int c : reduced.bundles[k]) total += state.payments[c];
        Rational value = total / weights[k];
        if (first || value < least) least = value;
        first = false;
    }

    Rational lhs_least_earner = 0;
    for (int c : state.allocation.bundles[roles.least_earner])
        lhs_least_earner += state.payments[c];
    lhs_least_earner /= instance.weights[roles.least_earner];
    return least > lhs_least_earner;
}

StepEvent step(const Instance& instance, GroupState& state, const Roles& roles) {
    CompetitiveState cs = group_state_to_competitive(instance, state);
    if (!cs.mpb_consistent) throw InternalError("state lost MPB consistency");

    StepEvent event;
    event.beta = roles.beta;
    event.lambda = roles.lambda;
    event.mu = roles.mu;

    const auto& m_beta = state.group_chores[roles.beta];
    const auto& m_mu = state.group_chores[roles.mu];
    const auto& mpb_lambda = slot_mpb(cs, state, roles.lambda);

    // Direct transfer from the big-earner slot to the least-earner slot.
    auto beta_to_lambda = intersect_sorted(m_beta, mpb_lambda);
    if (!beta_to_lambda.empty()) {
        event.kind = StepKind::TransferBetaToLambda;
        event.chore = beta_to_lambda.front();
        move_chore(state, event.chore, roles.beta, roles.lambda);
        rebuild_slot_allocation(instance, state, roles.beta);
        rebuild_slot_allocation(instance, state, roles.lambda);
        return event;
    }

    auto mu_to_lambda = intersect_sorted(m_mu, mpb_lambda);
    if (!mu_to_lambda.empty()) {
        // A middle-to-least transfer is allowed only if it leaves every middle
        // agent earning strictly more than today's least earner.
        for (int candidate : mu_to_lambda) {
            if (mu_to_lambda_guard(instance, state, roles, candidate)) {
                event.kind = StepKind::TransferMuToLambda;
                event.chore = candidate;
                move_chore(state, event.chore, roles.mu, roles.lambda);
                rebuild_slot_allocation(instance, state, roles.mu);
                rebuild_slot_allocation(instance, state, roles.lambda);
                return event;
            }
        }
        const auto& mpb_mu = slot_mpb(cs, state, roles.mu);
        auto beta_to_mu = intersect_sorted(m_beta, mpb_mu);
        if (!beta_to_mu.empty()) {
            event.kind = StepKind::TransferBetaToMu;
            event.chore = beta_to_mu.front();
            move_chore(state, event.chore, roles.beta, roles.mu);
            rebuild_slot_allocation(instance, state, roles.beta);
            rebuild_slot_allocation(instance, state, roles.mu);
            return event;
        }

        // No chore can leave the big-earner slot: scale down payments in the
        // middle and least slots until one of beta's chores becomes MPB there.
        if (roles.beta != 0)
            throw InternalError("payment drop while slot 0 is not the big-earner group");
        if (m_beta.empty()) throw InternalError("payment drop with no big-earner chores");
        event.kind = StepKind::DropMuLambda;
        Rational gamma;
        bool first = true;
        for (int side : {roles.lambda, roles.mu}) {
            const Rational alpha = slot_mpb_ratio(cs, state, side);
            for (int j : m_beta) {
                Rational candidate =
                    alpha * state.payments[j] / slot_disutility(instance, state, side, j);
                if (candidate >= 1)
                    throw InternalError("drop candidate not strictly below 1");
                if (first || candidate > gamma) gamma = candidate;
                first = false;
            }
        }
        event.gamma = gamma;
        for (int side : {roles.lambda, roles.mu}) {
            for (int j : state.group_chores[side]) state.payments[j] *= gamma;
            state.group_payscale[side] *= gamma;
        }
        // Uniform scaling keeps each slot's picking order, so bundles stand.
        CompetitiveState after = group_state_to_competitive(instance, state);
        if (intersect_sorted(m_beta, slot_mpb(after, state, roles.lambda)).empty() &&
            intersect_sorted(m_beta, slot_mpb(after, state, roles.mu)).empty())
            throw InternalError("payment drop failed to open a transfer");
        return event;
    }

    // Neither the big-earner nor the middle slot holds an MPB chore of the
    // least-earner group: scale down the least slot's payments.
    if (roles.beta != 0)
        throw InternalError("payment drop while slot 0 is not the big-earner group");
    if (m_beta.empty() && m_mu.empty())
        throw InternalError("payment drop with empty source sets");
    event.kind = StepKind::DropLambda;
    const Rational alpha = slot_mpb_ratio(cs, state, roles.lambda);
    Rational gamma;
    bool first = true;
    for (const auto* source : {&m_beta, &m_mu}) {
        for (int j : *source) {
            Rational candidate =
                alpha * state.payments[j] / slot_disutility(instance, state, roles.lambda, j);
            if (candidate >= 1) throw InternalError("drop candidate not strictly below 1");
            if (first || candidate > gamma) gamma = candidate;
            first = false;
        }
    }
    event.gamma = gamma;
    for (int j : state.group_chores[roles.lambda]) state.payments[j] *= gamma;
    state.group_payscale[roles.lambda] *= gamma;
    CompetitiveState after = group_state_to_competitive(instance, state);
    auto sources = m_beta;
    sources.insert(sources.end(), m_mu.begin(), m_mu.end());
    std::sort(sources.begin(), sources.end());
    if (intersect_sorted(sources, slot_mpb(after, state, roles.lambda)).empty())
        throw InternalError("payment drop failed to open a transfer");
    return event;
}

ThreeTypesResult solve_three_agent_types(const Instance& instance,
                                         const ThreeTypesOptions& options) {
    GroupState state = initial_group_state(instance);
    const long long m = instance.chore_count();
    const long long cap =
        options.step_cap >= 0 ? options.step_cap : 64 * m * m * m + 64 * m + 64;

    ThreeTypesResult result;
    if (options.record_snapshots) result.snapshots.push_back(state);

    for (long long iteration = 0;; ++iteration) {
        CompetitiveState cs = group_state_to_competitive(instance, state);
        if (!cs.mpb_consistent) throw InternalError("state lost MPB consistency");

        if (check_wpef1(cs, instance.weights).verdict) {
            result.state = std::move(cs);
            break;
        }
        Roles roles = compute_roles(instance, state, cs);
        // Once slot 0 stops being the big-earner group the allocation can be
        // weighted-EF1 without being payment-EF1; test for that exit directly.
        if (roles.beta != 0 && check_wef1(instance, state.allocation).verdict) {
            result.state = std::move(cs);
            break;
        }
        if (iteration >= cap)
            throw InternalError("step cap exceeded; termination guarantee violated");

        StepEvent event = step(instance, state, roles);
        result.trace.push_back(event);
        if (options.record_snapshots) result.snapshots.push_back(state);
        if (options.observer) options.observer(state, event);
    }

    if (!check_mpb_certificate(result.state))
        throw InternalError("final state is not a competitive equilibrium");
    if (!check_wef1(instance, result.state.allocation).verdict)
        throw InternalError("final allocation is not weighted-EF1");
    return result;
}

}  // namespace fairchore
