#pragma once

#include <vector>

#include "fairchore/instance.hpp"

namespace fairchore::testing {

inline Instance make_instance(std::vector<long long> weights,
                              std::vector<std::vector<long long>> disutilities) {
    std::vector<Rational> w(weights.begin(), weights.end());
    std::vector<std::vector<Rational>> d;
    for (auto& row : disutilities) d.emplace_back(row.begin(), row.end());
    return Instance::create(std::move(w), std::move(d));
}

// Two agents a, b with weights (1, 2); chore j0 is cheap for both, j1 and j2
// are identical heavy chores. Putting {j1, j2} on b is not weighted-EF1.
inline Instance copies_counterexample() {
    return make_instance({1, 2}, {{1, 10, 10}, {2, 10, 10}});
}

// Two agents with weights (1, 3) and seven chores; {j0,j1,j2} vs the rest is
// weighted-EF1 and Pareto-optimal.
inline Instance split_seven_instance() {
    return make_instance({1, 3}, {{2, 2, 2, 3, 3, 3, 3},
                                  {100, 100, 100, 99, 99, 99, 99}});
}

inline Allocation make_allocation(std::vector<std::vector<int>> bundles) {
    return Allocation{std::move(bundles)};
}

}  // namespace fairchore::testing
