#include "fairchore/exact_simplex.hpp"

#include <algorithm>

#include "fairchore/errors.hpp"

namespace fairchore::lp {

namespace {

// Tableau with rows [A | b] kept in basis-reduced form: basis columns are unit
// vectors. Reduced costs are recomputed from the basis when needed; problems
// here are tiny, so clarity wins over incremental updates.
struct Tableau {
    int rows, cols;                          // constraint rows, structural columns
    std::vector<std::vector<Rational>> data; // rows x (cols + 1), last column is rhs
    std::vector<int> basis;                  // basis[r] = column basic in row r

    void pivot(int row, int col) {
        auto& pivot_row = data[row];
        const Rational p = pivot_row[col];
        for (auto& v : pivot_row) v /= p;
        for (int r = 0; r < rows; ++r) {
            if (r == row || data[r][col] == 0) continue;
            const Rational factor = data[r][col];
            for (int c = 0; c <= cols; ++c) data[r][c] -= factor * pivot_row[c];
        }
        basis[row] = col;
    }
};

// Reduces the tableau so each requested basis column is a unit vector with its
// pivot in the matching row; throws if the basis is singular. The basis vector
// is an agenda here: entry r names the column that must become basic in row r.
void canonicalize(Tableau& t) {
    for (int r = 0; r < t.rows; ++r) {
        const int col = t.basis[r];
        int pivot_row = -1;
        for (int rr = r; rr < t.rows && pivot_row < 0; ++rr)
            if (t.data[rr][col] != 0) pivot_row = rr;
        if (pivot_row < 0) throw InternalError("singular starting basis");
        std::swap(t.data[r], t.data[pivot_row]);
        auto& row_data = t.data[r];
        const Rational p = row_data[col];
        for (auto& v : row_data) v /= p;
        for (int rr = 0; rr < t.rows; ++rr) {
            if (rr == r || t.data[rr][col] == 0) continue;
            const Rational factor = t.data[rr][col];
            for (int c = 0; c <= t.cols; ++c) t.data[rr][c] -= factor * row_data[c];
        }
    }
}

Status optimize(Tableau& t, const std::vector<Rational>& cost) {
    while (true) {
        // Reduced cost for column c: cost[c] - sum_r cost[basis[r]] * data[r][c].
        int entering = -1;
        for (int c = 0; c < t.cols && entering < 0; ++c) {
            if (std::find(t.basis.begin(), t.basis.end(), c) != t.basis.end()) continue;
            Rational reduced = cost[c];
            for (int r = 0; r < t.rows; ++r)
                if (cost[t.basis[r]] != 0) reduced -= cost[t.basis[r]] * t.data[r][c];
            if (reduced < 0) entering = c;  // Bland: smallest index
        }
        if (entering < 0) return Status::Optimal;

        int leaving = -1;
        Rational best_ratio;
        for (int r = 0; r < t.rows; ++r) {
            if (t.data[r][entering] <= 0) continue;
            Rational ratio = t.data[r][t.cols] / t.data[r][entering];
            if (leaving < 0 || ratio < best_ratio ||
                (ratio == best_ratio && t.basis[r] < t.basis[leaving])) {
                leaving = r;
                best_ratio = ratio;
            }
        }
        if (leaving < 0) return Status::Unbounded;
        t.pivot(leaving, entering);
    }
}

Solution extract(const Tableau& t, const std::vector<Rational>& objective, int real_cols) {
    Solution solution;
    solution.status = Status::Optimal;
    solution.values.assign(real_cols, Rational(0));
    for (int r = 0; r < t.rows; ++r)
        if (t.basis[r] < real_cols) solution.values[t.basis[r]] = t.data[r][t.cols];
    solution.objective_value = 0;
    for (int c = 0; c < real_cols; ++c)
        solution.objective_value += objective[c] * solution.values[c];
    return solution;
}

}  // namespace

Solution solve_with_basis(const Problem& problem, std::vector<int> basis) {
    const int rows = static_cast<int>(problem.constraints.size());
    const int cols = static_cast<int>(problem.objective.size());
    Tableau t{rows, cols, {}, std::move(basis)};
    t.data.resize(rows);
    for (int r = 0; r < rows; ++r) {
        t.data[r] = problem.constraints[r];
        t.data[r].push_back(problem.rhs[r]);
    }
    canonicalize(t);
    for (int r = 0; r < rows; ++r)
        if (t.data[r][cols] < 0) throw ValidationError("starting basis is not feasible");

    Status status = optimize(t, problem.objective);
    if (status == Status::Unbounded) return {Status::Unbounded, Rational(0), {}};
    return extract(t, problem.objective, cols);
}

Solution solve(const Problem& problem) {
    const int rows = static_cast<int>(problem.constraints.size());
    const int cols = static_cast<int>(problem.objective.size());

    // Phase one over [A | I]: artificial columns form the starting basis.
    Problem phase1;
    phase1.constraints.resize(rows);
    phase1.rhs.resize(rows);
    for (int r = 0; r < rows; ++r) {
        phase1.constraints[r] = problem.constraints[r];
        phase1.rhs[r] = problem.rhs[r];
        if (phase1.rhs[r] < 0) {
            for (auto& v : phase1.constraints[r]) v = -v;
            phase1.rhs[r] = -phase1.rhs[r];
        }
        phase1.constraints[r].resize(cols + rows, Rational(0));
        phase1.constraints[r][cols + r] = 1;
    }
    std::vector<Rational> phase1_cost(cols + rows, Rational(0));
    for (int r = 0; r < rows; ++r) phase1_cost[cols + r] = 1;

    Tableau t{rows, cols + rows, {}, {}};
    t.data.resize(rows);
    t.basis.resize(rows);
    for (int r = 0; r < rows; ++r) {
        t.data[r] = phase1.constraints[r];
        t.data[r].push_back(phase1.rhs[r]);
        t.basis[r] = cols + r;
    }
    optimize(t, phase1_cost);

    Rational infeasibility = 0;
    for (int r = 0; r < rows; ++r)
        if (t.basis[r] >= cols) infeasibility += t.data[r][t.cols];
    if (infeasibility != 0) return {Status::Infeasible, Rational(0), {}};

    // Drive any degenerate artificials out of the basis.
    for (int r = 0; r < rows; ++r) {
        if (t.basis[r] < cols) continue;
        int replacement = -1;
        for (int c = 0; c < cols && replacement < 0; ++c)
            if (t.data[r][c] != 0 &&
                std::find(t.basis.begin(), t.basis.end(), c) == t.basis.end())
                replacement = c;
        if (replacement >= 0) t.pivot(r, replacement);
        // A row with no structural pivot is redundant; its artificial stays
        // basic at zero and never re-enters with cost handling below.
    }

    std::vector<Rational> phase2_cost = problem.objective;
    phase2_cost.resize(cols + rows, Rational(0));
    // Forbid artificials from re-entering.
    t.cols = cols + rows;
    for (int r = 0; r < rows; ++r) {
        for (int c = cols; c < cols + rows; ++c)
            if (std::find(t.basis.begin(), t.basis.end(), c) == t.basis.end()) t.data[r][c] = 0;
    }
    Status status = optimize(t, phase2_cost);
    if (status == Status::Unbounded) return {Status::Unbounded, Rational(0), {}};
    return extract(t, problem.objective, cols);
}

}  // namespace fairchore::lp
