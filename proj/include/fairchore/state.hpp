#pragma once

#include <optional>
#include <vector>

#include "fairchore/instance.hpp"

namespace fairchore {

/// An allocation together with chore payments and derived market data. When
/// `mpb_consistent` holds (every bundle lies inside its holder's
/// minimum-pain-per-buck set) and the allocation is complete, the pair is a
/// competitive equilibrium and certifies fractional Pareto optimality.
///
/// `mpb_ratios[i]` is min_j d_i(j)/p_j. A chore with p_j = 0 and d_i(j) > 0
/// counts as infinitely painful per buck, encoded as nullopt when no finite
/// ratio exists at all; chores with p_j = 0 and d_i(j) = 0 are free and belong
/// to every MPB set. Only externally supplied states can reach those cases —
/// the solvers keep all payments positive.
struct CompetitiveState {
    Allocation allocation;
    PaymentVector payments;
    std::vector<std::optional<Rational>> mpb_ratios;
    std::vector<std::vector<int>> mpb_sets;
    std::vector<Rational> earnings;
    bool mpb_consistent = false;
};

CompetitiveState make_competitive_state(const Instance& instance, Allocation allocation,
                                        PaymentVector payments);

/// Total payment of agent's bundle, p(x_i).
Rational earning(const CompetitiveState& state, int agent);

/// Earning excluding the single highest-paying chore, p_{-1}(x_i); 0 for an
/// empty bundle.
Rational earning_minus_one(const CompetitiveState& state, int agent);

/// argmax over `within` of p_{-1}(x_i)/w_i, ties to the smallest agent id.
int weighted_big_earner(const CompetitiveState& state, const std::vector<Rational>& weights,
                        const std::vector<int>& within);

/// argmin over `within` of p(x_i)/w_i, ties to the smallest agent id.
int weighted_least_earner(const CompetitiveState& state, const std::vector<Rational>& weights,
                          const std::vector<int>& within);

std::vector<int> all_agents(const Instance& instance);

}  // namespace fairchore
