#include "fairchore/generator.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "fairchore/errors.hpp"

namespace fairchore {

namespace {

// Unbiased uniform draw from [0, bound); mt19937_64 output is fully specified
// by the standard, so results are portable.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return draw % bound;
}

long long uniform_range(std::mt19937_64& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(
                    uniform_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

bool rows_and_columns_distinct(const std::vector<std::vector<long long>>& matrix) {
    std::set<std::vector<long long>> rows(matrix.begin(), matrix.end());
    if (rows.size() != matrix.size()) return false;
    if (matrix.empty()) return true;
    std::set<std::vector<long long>> columns;
    for (std::size_t c = 0; c < matrix.front().size(); ++c) {
        std::vector<long long> column;
        column.reserve(matrix.size());
        for (const auto& row : matrix) column.push_back(row[c]);
        if (!columns.insert(std::move(column)).second) return false;
    }
    return true;
}

// range_size^exponent >= needed, without overflow.
bool power_reaches(long long range_size, int exponent, long long needed) {
    BigInt v = 1;
    for (int k = 0; k < exponent; ++k) {
        v *= range_size;
        if (v >= needed) return true;
    }
    return v >= needed;
}

}  // namespace

Instance random_instance(std::uint64_t seed, const GenSpec& spec) {
    if (spec.agents < 1) throw ValidationError("need at least one agent");
    if (spec.chores < 0) throw ValidationError("negative chore count");
    if (spec.agent_types < 1 || spec.agent_types > spec.agents)
        throw ValidationError("agent type count must lie in [1, n]");
    const bool no_chores = spec.chores == 0;
    if (!no_chores && (spec.chore_types < 1 || spec.chore_types > spec.chores))
        throw ValidationError("chore type count must lie in [1, m]");
    if (no_chores && spec.chore_types != 0)
        throw ValidationError("chore type count must be 0 when there are no chores");
    if (spec.weight_lo < 1 || spec.weight_hi < spec.weight_lo)
        throw ValidationError("invalid weight range");
    if (spec.cost_lo < 1 || spec.cost_hi < spec.cost_lo)
        throw ValidationError("invalid cost range");

    const long long range_size = spec.cost_hi - spec.cost_lo + 1;
    if (!no_chores) {
        if (!power_reaches(range_size, spec.chore_types, spec.agent_types))
            throw ValidationError("cost range too small for distinct agent type rows");
        if (!power_reaches(range_size, spec.agent_types, spec.chore_types))
            throw ValidationError("cost range too small for distinct chore type columns");
    }

    std::mt19937_64 rng(seed);

    std::vector<std::vector<long long>> type_matrix(
        spec.agent_types, std::vector<long long>(spec.chore_types));
    if (!no_chores) {
        constexpr int kMaxAttempts = 1 << 20;
        int attempt = 0;
        do {
            if (++attempt > kMaxAttempts)
                throw ValidationError("could not realize requested type structure");
            for (auto& row : type_matrix)
                for (auto& cell : row) cell = uniform_range(rng, spec.cost_lo, spec.cost_hi);
        } while (!rows_and_columns_distinct(type_matrix));
    }

    std::vector<Rational> weights(spec.agents);
    for (auto& w : weights) w = uniform_range(rng, spec.weight_lo, spec.weight_hi);

    std::vector<std::vector<Rational>> disutilities(spec.agents,
                                                    std::vector<Rational>(spec.chores));
    for (int i = 0; i < spec.agents; ++i)
        for (int j = 0; j < spec.chores; ++j)
            disutilities[i][j] = type_matrix[i % spec.agent_types][j % spec.chore_types];

    return Instance::create(std::move(weights), std::move(disutilities));
}

}  // namespace fairchore
