#pragma once

#include <string>
#include <vector>

#include "fairchore/rational.hpp"

namespace fairchore {

/// A chore-division instance: n agents with positive entitlement weights and an
/// n-by-m matrix of additive, nonnegative disutilities. Labels are cosmetic;
/// agents and chores are addressed by 0-based index everywhere.
struct Instance {
    std::vector<Rational> weights;
    std::vector<std::vector<Rational>> disutilities;
    std::vector<std::string> agent_labels;  // empty or size n
    std::vector<std::string> chore_labels;  // empty or size m

    int agent_count() const { return static_cast<int>(weights.size()); }
    int chore_count() const {
        return disutilities.empty() ? 0 : static_cast<int>(disutilities.front().size());
    }

    const Rational& disutility(int agent, int chore) const {
        return disutilities[agent][chore];
    }

    Rational bundle_disutility(int agent, const std::vector<int>& bundle) const;

    /// True if some d_i(j) = 0. Verifiers accept such instances, solvers reject
    /// them (initial payments equal disutilities, so a zero would make
    /// pain-per-buck undefined).
    bool has_zero_disutility() const;

    std::string agent_name(int agent) const;
    std::string chore_name(int chore) const;

    /// Validates n >= 1, rectangular matrix, w_i > 0, d_i(j) >= 0.
    static Instance create(std::vector<Rational> weights,
                           std::vector<std::vector<Rational>> disutilities,
                           std::vector<std::string> agent_labels = {},
                           std::vector<std::string> chore_labels = {});
};

/// Integral allocation: one bundle of chore ids per agent. Producers keep each
/// bundle sorted ascending.
struct Allocation {
    std::vector<std::vector<int>> bundles;

    int agent_count() const { return static_cast<int>(bundles.size()); }

    /// Bundles are pairwise disjoint and cover exactly {0, ..., m-1}.
    bool is_complete_partition(int chore_count) const;

    /// chore id -> holding agent (requires a complete partition).
    std::vector<int> owners(int chore_count) const;

    bool operator==(const Allocation&) const = default;
};

using PaymentVector = std::vector<Rational>;

/// Maximal groups of agents with identical disutility rows, ordered by smallest
/// member id; members ascend within a group.
struct AgentTypePartition {
    std::vector<std::vector<int>> groups;
    int type_count() const { return static_cast<int>(groups.size()); }
};

/// Maximal classes of chores with identical disutility columns, same ordering
/// conventions as AgentTypePartition.
struct ChoreTypePartition {
    std::vector<std::vector<int>> classes;
    int type_count() const { return static_cast<int>(classes.size()); }
};

std::pair<AgentTypePartition, ChoreTypePartition> classify(const Instance& instance);

}  // namespace fairchore
