#pragma once

#include "cmdbell/rational.hpp"

#include <cstddef>
#include <vector>

namespace cmdbell::lp {

using cmdbell::Rational;

/// Find x >= 0 with A x = b, exactly.
struct EqualityProblem {
    std::size_t num_vars = 0;
    std::vector<std::vector<Rational>> coeffs; // one row per constraint
    std::vector<Rational> rhs;
};

struct FeasibilityResult {
    bool feasible = false;
    /// A basic feasible point (size num_vars) when feasible.
    std::vector<Rational> solution;
    /// Farkas certificate (size rows) when infeasible: y with y.A <= 0
    /// componentwise and y.b > 0, stated for the problem as given.
    std::vector<Rational> certificate;
    /// Phase-1 optimum: total artificial mass that cannot be removed.
    Rational infeasibility;
};

/// Phase-1 simplex over exact rationals with Bland's rule (terminating).
FeasibilityResult solve_equality_feasibility(const EqualityProblem& problem);

} // namespace cmdbell::lp
