#include "fairchore/oracle.hpp"

#include <algorithm>

#include "fairchore/errors.hpp"
#include "fairchore/exact_simplex.hpp"
#include "fairchore/verify.hpp"

namespace fairchore::oracle {

namespace {

void check_enumeration_budget(const Instance& instance, const Budget& budget) {
    const BigInt total = allocation_count(instance);
    if (total > budget.enumeration_limit)
        throw BudgetExceededError("enumeration of " + total.str() +
                                  " allocations exceeds the budget of " +
                                  std::to_string(budget.enumeration_limit));
}

Allocation allocation_from_assignment(const std::vector<int>& assignment, int n) {
    Allocation allocation;
    allocation.bundles.resize(n);
    for (int j = 0; j < static_cast<int>(assignment.size()); ++j)
        allocation.bundles[assignment[j]].push_back(j);
    return allocation;
}

void validate_query(const DominationQuery& query) {
    if (!query.candidate.is_complete_partition(query.instance.chore_count()))
        throw ValidationError("candidate allocation is not a complete partition");
}

}  // namespace

BigInt allocation_count(const Instance& instance) {
    BigInt total = 1;
    for (int j = 0; j < instance.chore_count(); ++j) total *= instance.agent_count();
    return total;
}

void enumerate_allocations(const Instance& instance,
                           const std::function<bool(const Allocation&)>& visit,
                           const Budget& budget) {
    check_enumeration_budget(instance, budget);
    const int n = instance.agent_count();
    const int m = instance.chore_count();
    std::vector<int> assignment(m, 0);
    while (true) {
        if (!visit(allocation_from_assignment(assignment, n))) return;
        int j = m - 1;
        while (j >= 0 && assignment[j] == n - 1) assignment[j--] = 0;
        if (j < 0) return;
        ++assignment[j];
    }
}

std::optional<Allocation> is_integrally_dominated(const DominationQuery& query,
                                                  const Budget& budget) {
    validate_query(query);
    check_enumeration_budget(query.instance, budget);
    const Instance& inst = query.instance;
    const int n = inst.agent_count();
    const int m = inst.chore_count();

    std::vector<Rational> target(n);
    for (int i = 0; i < n; ++i)
        target[i] = inst.bundle_disutility(i, query.candidate.bundles[i]);

    // Depth-first over chore assignments in lexicographic order, pruning any
    // prefix whose partial disutility already exceeds an agent's target. The
    // first full assignment with somebody strictly below target is therefore
    // the lexicographically smallest dominating allocation.
    std::vector<int> assignment(m, -1);
    std::vector<Rational> load(n, Rational(0));
    std::optional<Allocation> witness;

    auto descend = [&](auto&& self, int chore) -> bool {
        if (chore == m) {
            for (int i = 0; i < n; ++i)
                if (load[i] < target[i]) {
                    witness = allocation_from_assignment(assignment, n);
                    return true;
                }
            return false;
        }
        for (int i = 0; i < n; ++i) {
            load[i] += inst.disutility(i, chore);
            if (load[i] <= target[i]) {
                assignment[chore] = i;
                if (self(self, chore + 1)) return true;
            }
            load[i] -= inst.disutility(i, chore);
        }
        assignment[chore] = -1;
        return false;
    };
    descend(descend, 0);
    return witness;
}

bool is_fractionally_dominated(const DominationQuery& query, const Budget& budget) {
    validate_query(query);
    const Instance& inst = query.instance;
    const int n = inst.agent_count();
    const int m = inst.chore_count();
    if (static_cast<long long>(n) * m > budget.lp_cell_limit)
        throw BudgetExceededError("fractional domination LP with " + std::to_string(n * m) +
                                  " cells exceeds the budget of " +
                                  std::to_string(budget.lp_cell_limit));
    if (m == 0) return false;

    // Variables: y_ij (fraction of chore j to agent i), then one slack per
    // agent. Constraints: each chore fully assigned; each agent's disutility
    // plus slack equals her candidate disutility. The candidate dominates
    // itself weakly, so maximized total slack is positive exactly when a
    // strictly dominating fractional allocation exists.
    const int y_vars = n * m;
    lp::Problem problem;
    problem.objective.assign(y_vars + n, Rational(0));
    for (int i = 0; i < n; ++i) problem.objective[y_vars + i] = -1;  // maximize slack

    problem.constraints.assign(m + n, std::vector<Rational>(y_vars + n, Rational(0)));
    problem.rhs.assign(m + n, Rational(0));
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < n; ++i) problem.constraints[j][i * m + j] = 1;
        problem.rhs[j] = 1;
    }
    for (int i = 0; i < n; ++i) {
        auto& row = problem.constraints[m + i];
        for (int j = 0; j < m; ++j) row[i * m + j] = inst.disutility(i, j);
        row[y_vars + i] = 1;
        problem.rhs[m + i] = inst.bundle_disutility(i, query.candidate.bundles[i]);
    }

    // The candidate itself is a basic feasible start: its indicator variables
    // cover the chore rows and the slacks cover the agent rows.
    std::vector<int> basis;
    basis.reserve(m + n);
    const auto owner = query.candidate.owners(m);
    for (int j = 0; j < m; ++j) basis.push_back(owner[j] * m + j);
    for (int i = 0; i < n; ++i) basis.push_back(y_vars + i);

    lp::Solution solution = lp::solve_with_basis(problem, std::move(basis));
    if (solution.status != lp::Status::Optimal)
        throw InternalError("bounded domination LP did not reach an optimum");
    return solution.objective_value < 0;  // negative cost = positive total slack
}

std::vector<Allocation> exhaustive_wef1_po_set(const Instance& instance, const Budget& budget,
                                               bool also_fractional) {
    std::vector<Allocation> result;
    enumerate_allocations(
        instance,
        [&](const Allocation& allocation) {
            if (!check_wef1(instance, allocation).verdict) return true;
            DominationQuery query{instance, allocation};
            if (is_integrally_dominated(query, budget)) return true;
            if (also_fractional && is_fractionally_dominated(query, budget)) return true;
            result.push_back(allocation);
            return true;
        },
        budget);
    return result;
}

}  // namespace fairchore::oracle
