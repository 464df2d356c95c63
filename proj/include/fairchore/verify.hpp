#pragma once

#include <vector>

#include "fairchore/state.hpp"

namespace fairchore {

enum class FairnessCriterion { Wef1, Ef1, WpEf1 };

/// One violating ordered pair: envier's removable-chore-adjusted value exceeds
/// the envied agent's value. Values are the two sides of the defining
/// inequality, already divided by the respective weights.
struct EnvyWitness {
    int envier = -1;
    int envied = -1;
    Rational lhs;
    Rational rhs;

    bool operator==(const EnvyWitness&) const = default;
};

struct FairnessReport {
    FairnessCriterion criterion = FairnessCriterion::Wef1;
    bool verdict = false;
    std::vector<EnvyWitness> witnesses;  // lexicographic by (envier, envied)
};

/// Weighted envy-freeness up to one chore on disutilities: for every pair
/// (i, h) some j in x_i has d_i(x_i \ j)/w_i <= d_i(x_h)/w_h. Empty bundles
/// pass vacuously.
FairnessReport check_wef1(const Instance& instance, const Allocation& allocation);

/// Payment-space analogue: p_{-1}(x_i)/w_i <= p(x_h)/w_h for every pair.
FairnessReport check_wpef1(const CompetitiveState& state, const std::vector<Rational>& weights);

/// True iff the allocation is complete and every bundle sits inside its
/// holder's MPB set. A true return certifies fractional Pareto optimality.
bool check_mpb_certificate(const CompetitiveState& state);

/// Test-harness cross-check: on an MPB-certified state, wpEF1 must imply wEF1.
/// Returns the implication's truth value; throws if the state is not
/// MPB-certified.
bool check_wef1_implication(const Instance& instance, const CompetitiveState& state);

}  // namespace fairchore
