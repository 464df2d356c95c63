#pragma once

#include <vector>

#include "fairchore/rational.hpp"

namespace fairchore::lp {

/// minimize c.x subject to A x = b, x >= 0, in exact rational arithmetic.
struct Problem {
    std::vector<std::vector<Rational>> constraints;  // rows of A
    std::vector<Rational> rhs;                       // b
    std::vector<Rational> objective;                 // c
};

enum class Status { Optimal, Unbounded, Infeasible };

struct Solution {
    Status status = Status::Infeasible;
    Rational objective_value;
    std::vector<Rational> values;
};

/// Dense tableau simplex using Bland's rule (no cycling, no tolerances).
/// `basis` must name one column per row forming a feasible basic solution.
Solution solve_with_basis(const Problem& problem, std::vector<int> basis);

/// Two-phase wrapper: negates rows to make b nonnegative, runs phase one on
/// artificial variables, then optimizes.
Solution solve(const Problem& problem);

}  // namespace fairchore::lp
