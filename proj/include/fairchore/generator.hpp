#pragma once

#include <cstdint>

#include "fairchore/instance.hpp"

namespace fairchore {

/// Shape of a generated instance. Disutilities come from an agent-type by
/// chore-type template matrix sampled uniformly from [cost_lo, cost_hi],
/// resampled until its rows and columns are pairwise distinct so the requested
/// type counts are exact. Agents and chores are assigned to types round-robin;
/// weights are uniform integers from [weight_lo, weight_hi].
struct GenSpec {
    int agents = 2;
    int chores = 4;
    int agent_types = 2;
    int chore_types = 2;
    long long weight_lo = 1, weight_hi = 5;
    long long cost_lo = 1, cost_hi = 20;
};

/// Deterministic: the same seed and spec produce the same instance on every
/// platform (the generator never touches implementation-defined
/// distributions). Throws ValidationError when the spec is unsatisfiable.
Instance random_instance(std::uint64_t seed, const GenSpec& spec);

}  // namespace fairchore
