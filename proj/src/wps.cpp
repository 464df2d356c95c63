#include "fairchore/wps.hpp"

#include <algorithm>

#include "fairchore/errors.hpp"

namespace fairchore {

WpsResult wps(const std::vector<Rational>& weights,
              const std::vector<std::pair<int, Rational>>& chore_costs) {
    const int g = static_cast<int>(weights.size());
    if (g == 0 && !chore_costs.empty())
        throw ValidationError("cannot allocate chores to an empty group");

    auto order = chore_costs;
    std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });

    WpsResult result;
    result.bundles.resize(g);
    result.picks.counts.assign(g, 0);
    for (int round = 0; round < static_cast<int>(order.size()); ++round) {
        int picker = 0;
        for (int k = 1; k < g; ++k) {
            // s_k / w_k < s_picker / w_picker, exactly.
            if (Rational(result.picks.counts[k]) * weights[picker] <
                Rational(result.picks.counts[picker]) * weights[k])
                picker = k;
        }
        const int chore = order[round].first;
        result.bundles[picker].push_back(chore);
        result.picks.counts[picker]++;
        result.picks.sequence.push_back({round, picker, chore});
    }
    for (auto& bundle : result.bundles) std::sort(bundle.begin(), bundle.end());
    return result;
}

std::vector<std::vector<int>> allocate_identical_by_transfers(const std::vector<Rational>& weights,
                                                              const std::vector<int>& chores) {
    const int g = static_cast<int>(weights.size());
    if (g == 0) throw ValidationError("cannot allocate chores to an empty group");

    std::vector<std::vector<int>> bundles(g);
    bundles.front() = chores;
    std::sort(bundles.front().begin(), bundles.front().end());

    auto wpef1_unit = [&] {
        // Unit payments: earning = |bundle|, earning-minus-one = |bundle| - 1.
        for (int i = 0; i < g; ++i) {
            if (bundles[i].empty()) continue;
            Rational lhs = Rational(bundles[i].size() - 1) / weights[i];
            for (int h = 0; h < g; ++h) {
                if (h == i) continue;
                if (lhs > Rational(bundles[h].size()) / weights[h]) return false;
            }
        }
        return true;
    };

    while (!wpef1_unit()) {
        int target = 1;
        for (int k = 2; k < g; ++k) {
            if (Rational(bundles[k].size()) * weights[target] <
                Rational(bundles[target].size()) * weights[k])
                target = k;
        }
        bundles[target].push_back(bundles.front().front());
        bundles.front().erase(bundles.front().begin());
        std::sort(bundles[target].begin(), bundles[target].end());
    }
    return bundles;
}

WpsComparePair wps_remove_compare(const std::vector<Rational>& weights,
                                  const std::vector<std::pair<int, Rational>>& chore_costs,
                                  int removed_chore) {
    std::vector<std::pair<int, Rational>> reduced;
    reduced.reserve(chore_costs.size());
    bool found = false;
    for (const auto& entry : chore_costs) {
        if (entry.first == removed_chore && !found)
            found = true;
        else
            reduced.push_back(entry);
    }
    if (!found) throw ValidationError("removed chore not present");
    return {wps(weights, chore_costs), wps(weights, reduced)};
}

}  // namespace fairchore
