#include "fairchore/instance.hpp"

#include <algorithm>
#include <map>

#include "fairchore/errors.hpp"

namespace fairchore {

Rational Instance::bundle_disutility(int agent, const std::vector<int>& bundle) const {
    Rational total = 0;
    for (int chore : bundle) total += disutilities[agent][chore];
    return total;
}

bool Instance::has_zero_disutility() const {
    for (const auto& row : disutilities)
        for (const auto& d : row)
            if (d == 0) return true;
    return false;
}

std::string Instance::agent_name(int agent) const {
    if (!agent_labels.empty()) return agent_labels[agent];
    return "agent" + std::to_string(agent);
}

std::string Instance::chore_name(int chore) const {
    if (!chore_labels.empty()) return chore_labels[chore];
    return "chore" + std::to_string(chore);
}

Instance Instance::create(std::vector<Rational> weights,
                          std::vector<std::vector<Rational>> disutilities,
                          std::vector<std::string> agent_labels,
                          std::vector<std::string> chore_labels) {
    const auto n = weights.size();
    if (n == 0) throw ValidationError("instance needs at least one agent");
    if (disutilities.size() != n) throw ValidationError("disutility row count must equal agent count");
    const auto m = disutilities.front().size();
    for (const auto& row : disutilities)
        if (row.size() != m) throw ValidationError("disutility rows must have equal length");
    for (const auto& w : weights)
        if (w <= 0) throw ValidationError("agent weights must be positive");
    for (const auto& row : disutilities)
        for (const auto& d : row)
            if (d < 0) throw ValidationError("disutilities must be nonnegative");
    if (!agent_labels.empty() && agent_labels.size() != n)
        throw ValidationError("agent label count mismatch");
    if (!chore_labels.empty() && chore_labels.size() != m)
        throw ValidationError("chore label count mismatch");
    Instance instance;
    instance.weights = std::move(weights);
    instance.disutilities = std::move(disutilities);
    instance.agent_labels = std::move(agent_labels);
    instance.chore_labels = std::move(chore_labels);
    return instance;
}

bool Allocation::is_complete_partition(int chore_count) const {
    std::vector<int> seen(chore_count, 0);
    for (const auto& bundle : bundles)
        for (int chore : bundle) {
            if (chore < 0 || chore >= chore_count) return false;
            if (seen[chore]++) return false;
        }
    return std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
}

std::vector<int> Allocation::owners(int chore_count) const {
    std::vector<int> owner(chore_count, -1);
    for (int i = 0; i < agent_count(); ++i)
        for (int chore : bundles[i]) owner[chore] = i;
    return owner;
}

std::pair<AgentTypePartition, ChoreTypePartition> classify(const Instance& instance) {
    const int n = instance.agent_count();
    const int m = instance.chore_count();

    AgentTypePartition agents;
    {
        std::map<std::vector<Rational>, int> index;  // row -> group position
        for (int i = 0; i < n; ++i) {
            auto [it, fresh] = index.try_emplace(instance.disutilities[i],
                                                 static_cast<int>(agents.groups.size()));
            if (fresh) agents.groups.emplace_back();
            agents.groups[it->second].push_back(i);
        }
        // try_emplace in agent order already yields groups ordered by smallest
        // member id, with members ascending.
    }

    ChoreTypePartition chores;
    {
        std::map<std::vector<Rational>, int> index;
        for (int j = 0; j < m; ++j) {
            std::vector<Rational> column(n);
            for (int i = 0; i < n; ++i) column[i] = instance.disutilities[i][j];
            auto [it, fresh] = index.try_emplace(std::move(column),
                                                 static_cast<int>(chores.classes.size()));
            if (fresh) chores.classes.emplace_back();
            chores.classes[it->second].push_back(j);
        }
    }
    return {std::move(agents), std::move(chores)};
}

}  // namespace fairchore
