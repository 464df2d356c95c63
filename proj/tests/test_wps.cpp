#include <doctest.h>

#include <numeric>
#include <random>

#include "fairchore/errors.hpp"
#include "fairchore/verify.hpp"
#include "fairchore/wps.hpp"
#include "support.hpp"

using namespace fairchore;

namespace {

std::vector<Rational> to_weights(std::vector<long long> values) {
    return std::vector<Rational>(values.begin(), values.end());
}

std::vector<std::pair<int, Rational>> to_costs(std::vector<long long> values) {
    std::vector<std::pair<int, Rational>> costs;
    for (int j = 0; j < static_cast<int>(values.size()); ++j)
        costs.emplace_back(j, Rational(values[j]));
    return costs;
}

Rational bundle_payment(const std::vector<int>& bundle,
                        const std::vector<std::pair<int, Rational>>& costs) {
    Rational total = 0;
    for (int chore : bundle)
        for (const auto& [id, cost] : costs)
            if (id == chore) total += cost;
    return total;
}

Rational bundle_payment_minus_one(const std::vector<int>& bundle,
                                  const std::vector<std::pair<int, Rational>>& costs) {
    if (bundle.empty()) return Rational(0);
    Rational total = 0, top = 0;
    for (int chore : bundle)
        for (const auto& [id, cost] : costs)
            if (id == chore) {
                total += cost;
                top = std::max(top, cost);
            }
    return total - top;
}

}  // namespace

TEST_CASE("picking sequence basics") {
    SUBCASE("single picker takes everything") {
        auto result = wps(to_weights({3}), to_costs({4, 1, 9}));
        CHECK(result.bundles == std::vector<std::vector<int>>{{0, 1, 2}});
    }
    SUBCASE("weight-two agent picks the two lighter chores") {
        auto result = wps(to_weights({1, 2}), to_costs({3, 2, 1}));
        CHECK(result.bundles == std::vector<std::vector<int>>{{0}, {1, 2}});
    }
    SUBCASE("symmetric tie goes to the first picker") {
        auto result = wps(to_weights({1, 1}), to_costs({10, 10}));
        CHECK(result.bundles == std::vector<std::vector<int>>{{0}, {1}});
        REQUIRE(result.picks.sequence.size() == 2);
        CHECK(result.picks.sequence[0].picker == 0);
        CHECK(result.picks.sequence[0].chore == 0);  // equal costs in id order
        CHECK(result.picks.sequence[1].picker == 1);
    }
    SUBCASE("empty group with chores is rejected") {
        CHECK_THROWS_AS(wps({}, to_costs({1})), ValidationError);
    }
    SUBCASE("runs are deterministic") {
        const auto weights = to_weights({2, 3, 1});
        const auto costs = to_costs({5, 5, 2, 7, 2});
        auto a = wps(weights, costs);
        auto b = wps(weights, costs);
        CHECK(a.bundles == b.bundles);
        REQUIRE(a.picks.sequence.size() == b.picks.sequence.size());
        for (std::size_t k = 0; k < a.picks.sequence.size(); ++k) {
            CHECK(a.picks.sequence[k].picker == b.picks.sequence[k].picker);
            CHECK(a.picks.sequence[k].chore == b.picks.sequence[k].chore);
        }
    }
}

TEST_CASE("picking sequence output is weighted-EF1 for one-type groups") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 150; ++trial) {
        const int g = 1 + static_cast<int>(rng() % 5);
        const int m = static_cast<int>(rng() % 9);
        std::vector<long long> w(g), costs(m);
        for (auto& wi : w) wi = 1 + rng() % 5;
        for (auto& c : costs) c = 1 + rng() % 20;

        auto result = wps(to_weights(w), to_costs(costs));

        std::vector<std::vector<long long>> d(g, costs);
        const Instance inst = fairchore::testing::make_instance(
            w, m ? d : std::vector<std::vector<long long>>(g, std::vector<long long>{}));
        CHECK(check_wef1(inst, Allocation{result.bundles}).verdict);
    }
}

TEST_CASE("removing a chore only helps") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 200; ++trial) {
        const int g = 1 + static_cast<int>(rng() % 5);
        const int m = 1 + static_cast<int>(rng() % 8);
        std::vector<long long> w(g), costs(m);
        for (auto& wi : w) wi = 1 + rng() % 5;
        for (auto& c : costs) c = 1 + rng() % 20;
        const int removed = static_cast<int>(rng() % m);

        const auto weights = to_weights(w);
        const auto cost_list = to_costs(costs);
        auto pair = wps_remove_compare(weights, cost_list, removed);
        const auto& x = pair.with_chore.bundles;
        const auto& y = pair.without_chore.bundles;

        for (int i = 0; i < g; ++i) {
            CHECK(bundle_payment(y[i], cost_list) <= bundle_payment(x[i], cost_list));
            CHECK(bundle_payment_minus_one(y[i], cost_list) <=
                  bundle_payment_minus_one(x[i], cost_list));
        }
        for (int i = 0; i < g; ++i)
            for (int h = 0; h < g; ++h)
                CHECK(bundle_payment(y[i], cost_list) / weights[i] >=
                      bundle_payment_minus_one(x[h], cost_list) / weights[h]);

        // The same inequalities read as "adding a chore only hurts" when the
        // roles of the two allocations are swapped.
        for (int i = 0; i < g; ++i) {
            CHECK(bundle_payment(x[i], cost_list) >= bundle_payment(y[i], cost_list));
            CHECK(bundle_payment_minus_one(x[i], cost_list) >=
                  bundle_payment_minus_one(y[i], cost_list));
        }
        for (int i = 0; i < g; ++i)
            for (int h = 0; h < g; ++h)
                CHECK(bundle_payment_minus_one(x[h], cost_list) / weights[h] <=
                      bundle_payment(y[i], cost_list) / weights[i]);
    }
}

TEST_CASE("transfer allocator matches the picking sequence on identical chores") {
    SUBCASE("three unit chores, equal weights") {
        auto bundles = allocate_identical_by_transfers(to_weights({1, 1}), {0, 1, 2});
        CHECK(bundles[0].size() == 2);
        CHECK(bundles[1].size() == 1);
    }
    SUBCASE("no chores") {
        auto bundles = allocate_identical_by_transfers(to_weights({1, 2}), {});
        CHECK(bundles == std::vector<std::vector<int>>{{}, {}});
    }
    SUBCASE("empty group is rejected") {
        CHECK_THROWS_AS(allocate_identical_by_transfers({}, {0}), ValidationError);
    }

    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const int g = 1 + static_cast<int>(rng() % 6);
        const int m = static_cast<int>(rng() % 31);
        std::vector<long long> w(g);
        for (auto& wi : w) wi = 1 + rng() % 5;
        std::vector<int> chores(m);
        std::iota(chores.begin(), chores.end(), 0);

        auto transferred = allocate_identical_by_transfers(to_weights(w), chores);
        auto picked = wps(to_weights(w), to_costs(std::vector<long long>(m, 1)));

        std::vector<std::size_t> transfer_sizes, pick_sizes;
        for (const auto& b : transferred) transfer_sizes.push_back(b.size());
        for (const auto& b : picked.bundles) pick_sizes.push_back(b.size());
        CHECK(transfer_sizes == pick_sizes);

        // Identical chores: canonical form assigns ids in agent order.
        auto canonical = [](const std::vector<std::size_t>& sizes) {
            std::vector<std::vector<int>> bundles;
            int next = 0;
            for (auto size : sizes) {
                std::vector<int> bundle(size);
                std::iota(bundle.begin(), bundle.end(), next);
                next += static_cast<int>(size);
                bundles.push_back(std::move(bundle));
            }
            return bundles;
        };
        CHECK(canonical(transfer_sizes) == canonical(pick_sizes));
    }
}
