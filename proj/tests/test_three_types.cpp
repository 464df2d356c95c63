#include <doctest.h>

#include <array>
#include <random>

#include "fairchore/errors.hpp"
#include "fairchore/generator.hpp"
#include "fairchore/oracle.hpp"
#include "fairchore/three_types_solver.hpp"
#include "fairchore/verify.hpp"
#include "fairchore/wps.hpp"
#include "support.hpp"

using namespace fairchore;
using fairchore::testing::copies_counterexample;
using fairchore::testing::make_instance;

namespace {

GenSpec spec_for(std::uint64_t mix, int max_types) {
    std::mt19937_64 rng(mix * 7919 + 13);
    GenSpec spec;
    spec.agents = 1 + static_cast<int>(rng() % 6);
    spec.chores = 1 + static_cast<int>(rng() % 8);
    spec.agent_types = 1 + static_cast<int>(rng() % std::min(max_types, spec.agents));
    spec.chore_types = 1 + static_cast<int>(rng() % spec.chores);
    return spec;
}

// Folds the trace over the initial state and re-derives the final allocation;
// a faithful trace reproduces the solver's result exactly.
void check_trace_replays(const Instance& instance, const ThreeTypesResult& result) {
    GroupState state = initial_group_state(instance);
    std::array<std::vector<int>, 3> chores = state.group_chores;
    PaymentVector payments = state.payments;

    auto move_between = [&](int chore, int from, int to) {
        auto& source = chores[from];
        source.erase(std::find(source.begin(), source.end(), chore));
        auto& sink = chores[to];
        sink.insert(std::upper_bound(sink.begin(), sink.end(), chore), chore);
    };
    for (const auto& event : result.trace) {
        switch (event.kind) {
            case StepKind::TransferBetaToLambda:
                move_between(event.chore, event.beta, event.lambda);
                break;
            case StepKind::TransferMuToLambda:
                move_between(event.chore, event.mu, event.lambda);
                break;
            case StepKind::TransferBetaToMu:
                move_between(event.chore, event.beta, event.mu);
                break;
            case StepKind::DropMuLambda:
                for (int slot : {event.mu, event.lambda})
                    for (int chore : chores[slot]) payments[chore] *= event.gamma;
                break;
            case StepKind::DropLambda:
                for (int chore : chores[event.lambda]) payments[chore] *= event.gamma;
                break;
        }
    }
    CHECK(payments == result.state.payments);

    Allocation rebuilt;
    rebuilt.bundles.resize(instance.agent_count());
    for (int slot = 0; slot < 3; ++slot) {
        const auto& members = state.group_agents[slot];
        if (members.empty()) {
            CHECK(chores[slot].empty());
            continue;
        }
        std::vector<Rational> weights;
        for (int agent : members) weights.push_back(instance.weights[agent]);
        std::vector<std::pair<int, Rational>> costs;
        for (int chore : chores[slot]) costs.emplace_back(chore, payments[chore]);
        auto split = wps(weights, costs);
        for (std::size_t k = 0; k < members.size(); ++k)
            rebuilt.bundles[members[k]] = split.bundles[k];
    }
    CHECK(rebuilt == result.state.allocation);
}

}  // namespace

TEST_CASE("input guards") {
    CHECK_THROWS_AS(solve_three_agent_types(make_instance(
                        {1, 1, 1, 1}, {{1, 2}, {2, 1}, {3, 1}, {1, 3}})),
                    UnsupportedInstanceError);
    CHECK_THROWS_AS(solve_three_agent_types(make_instance({1}, {{0, 1}})), ValidationError);
}

TEST_CASE("single agent type reduces to one picking sequence") {
    const Instance inst = make_instance({1, 2, 2}, {{7, 4, 4, 2}, {7, 4, 4, 2}, {7, 4, 4, 2}});
    auto result = solve_three_agent_types(inst);
    CHECK(result.trace.empty());

    std::vector<std::pair<int, Rational>> costs;
    for (int j = 0; j < inst.chore_count(); ++j)
        costs.emplace_back(j, inst.disutility(0, j));
    auto split = wps(inst.weights, costs);
    CHECK(result.state.allocation.bundles == split.bundles);
    CHECK(check_wef1(inst, result.state.allocation).verdict);
}

TEST_CASE("copies counterexample solves to a fair competitive allocation") {
    const Instance inst = copies_counterexample();
    auto result = solve_three_agent_types(inst);
    CHECK(check_mpb_certificate(result.state));
    CHECK(check_wef1(inst, result.state.allocation).verdict);

    // The first step must hand the least earner one of the big earner's
    // MPB chores.
    REQUIRE_FALSE(result.trace.empty());
    CHECK(result.trace.front().kind == StepKind::TransferBetaToLambda);

    // Cross-check against the exhaustive ground truth (2^3 allocations).
    const auto good = oracle::exhaustive_wef1_po_set(inst);
    CHECK(std::find(good.begin(), good.end(), result.state.allocation) != good.end());
}

TEST_CASE("random three-type instance stays fair and undominated") {
    GenSpec spec;
    spec.agents = 5;
    spec.chores = 7;
    spec.agent_types = 3;
    spec.chore_types = 4;
    const Instance inst = random_instance(20240802, spec);
    auto result = solve_three_agent_types(inst);
    CHECK(check_wef1(inst, result.state.allocation).verdict);
    CHECK_FALSE(oracle::is_fractionally_dominated({inst, result.state.allocation}));
}

TEST_CASE("middle-to-least transfer guard") {
    const Instance inst = copies_counterexample();
    GroupState state = initial_group_state(inst);

    SUBCASE("losing the only chore cannot beat a positive least earning") {
        // Slot 1 (agent b) holds just chore 2; slot 0 holds the rest.
        state.group_chores = {{std::vector<int>{0, 1}, std::vector<int>{2}, std::vector<int>{}}};
        state.allocation.bundles = {{0, 1}, {2}};
        Roles roles{/*big_earner=*/0, /*least_earner=*/0, /*beta=*/2, /*lambda=*/0, /*mu=*/1};
        CHECK_FALSE(mu_to_lambda_guard(inst, state, roles, 2));
    }
    SUBCASE("guard passes when the middle group keeps a cushion") {
        // Slot 1 keeps both heavy chores; dropping one still leaves 10/2 > 1.
        state.group_chores = {{std::vector<int>{0}, std::vector<int>{1, 2}, std::vector<int>{}}};
        state.allocation.bundles = {{0}, {1, 2}};
        Roles roles{/*big_earner=*/0, /*least_earner=*/0, /*beta=*/2, /*lambda=*/0, /*mu=*/1};
        CHECK(mu_to_lambda_guard(inst, state, roles, 1));
    }
}

TEST_CASE("exhausted step cap fails loudly") {
    ThreeTypesOptions options;
    options.step_cap = 0;
    CHECK_THROWS_AS(solve_three_agent_types(copies_counterexample(), options), InternalError);
}

TEST_CASE("randomized campaign: certificates, traces, and step invariants") {
    int drops_seen = 0;
    int mu_transfers_seen = 0;
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        const GenSpec spec = spec_for(seed, 3);
        const Instance inst = random_instance(seed, spec);

        // Observer re-checks MPB consistency and least-earner monotonicity
        // across transfers, independently of the solver's own asserts.
        Rational least_before;
        {
            auto initial = group_state_to_competitive(inst, initial_group_state(inst));
            const int least =
                weighted_least_earner(initial, inst.weights, all_agents(inst));
            least_before = earning(initial, least) / inst.weights[least];
        }
        ThreeTypesOptions options;
        options.record_snapshots = true;
        options.observer = [&](const GroupState& after, const StepEvent& event) {
            auto cs = group_state_to_competitive(inst, after);
            CHECK(cs.mpb_consistent);
            const int least = weighted_least_earner(cs, inst.weights, all_agents(inst));
            const Rational least_now = earning(cs, least) / inst.weights[least];
            const bool transfer = event.kind == StepKind::TransferBetaToLambda ||
                                  event.kind == StepKind::TransferMuToLambda ||
                                  event.kind == StepKind::TransferBetaToMu;
            if (transfer) {
                CHECK(least_now >= least_before);
            } else {
                CHECK(event.gamma < 1);
                CHECK(event.gamma > 0);
                ++drops_seen;
            }
            if (event.kind == StepKind::TransferMuToLambda) ++mu_transfers_seen;
            least_before = least_now;
        };

        auto result = solve_three_agent_types(inst, options);
        CHECK(check_mpb_certificate(result.state));
        CHECK(check_wef1(inst, result.state.allocation).verdict);
        CHECK(check_wef1_implication(inst, result.state));
        check_trace_replays(inst, result);

        // Once slot 0 stops being the big-earner group, at most one further
        // transfer may occur.
        int last_slot0 = -1;
        for (int k = 0; k < static_cast<int>(result.trace.size()); ++k)
            if (result.trace[k].beta == 0) last_slot0 = k;
        int transfers_after = 0;
        for (int k = last_slot0 + 1; k < static_cast<int>(result.trace.size()); ++k)
            if (result.trace[k].chore >= 0) ++transfers_after;
        CHECK(transfers_after <= 1);

        const long long m = inst.chore_count();
        CHECK(static_cast<long long>(result.trace.size()) <= 64 * m * m * m + 64 * m + 64);
    }
    // The campaign must exercise the payment-drop and middle-transfer paths;
    // if these start failing the seeds need retuning, not the solver.
    CHECK(drops_seen > 0);
    CHECK(mu_transfers_seen > 0);
}
