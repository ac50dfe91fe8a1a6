#include "cmdbell/simplex.hpp"

#include "cmdbell/errors.hpp"

#include <algorithm>

namespace cmdbell::lp {

namespace {

// Tableau columns: [original variables | artificials | rhs].
struct Tableau {
    std::size_t n = 0; // original variables
    std::size_t m = 0; // constraints
    std::vector<std::vector<Rational>> rows;
    // Reduced-cost row, same width as the tableau; its rhs cell carries the
    // negated objective so every pivot updates it alongside.
    std::vector<Rational> cost;
    std::vector<std::size_t> basis; // basic column per row

    Rational objective() const { return Rational(-cost.back()); }
};

std::size_t total_cols(const Tableau& t) { return t.n + t.m + 1; }

void pivot(Tableau& t, std::size_t prow, std::size_t pcol) {
    const std::size_t cols = total_cols(t);
    auto& row = t.rows[prow];
    const Rational inv = Rational(1) / row[pcol];
    for (std::size_t j = 0; j < cols; ++j)
        row[j] = Rational(row[j] * inv);
    for (std::size_t i = 0; i < t.m; ++i) {
        if (i == prow)
            continue;
        const Rational f = t.rows[i][pcol];
        if (f == 0)
            continue;
        for (std::size_t j = 0; j < cols; ++j)
            t.rows[i][j] -= f * row[j];
    }
    const Rational fc = t.cost[pcol];
    if (fc != 0) {
        for (std::size_t j = 0; j < cols; ++j)
            t.cost[j] -= fc * row[j];
    }
    t.basis[prow] = pcol;
}

} // namespace

FeasibilityResult solve_equality_feasibility(const EqualityProblem& problem) {
    const std::size_t m = problem.coeffs.size();
    const std::size_t n = problem.num_vars;
    if (problem.rhs.size() != m)
        throw ParameterError("rhs size does not match the number of constraint rows");
    for (const auto& row : problem.coeffs)
        if (row.size() != n)
            throw ParameterError("constraint row width does not match num_vars");

    Tableau t;
    t.n = n;
    t.m = m;
    t.basis.resize(m);
    t.rows.assign(m, std::vector<Rational>(n + m + 1));

    // Rows are negated as needed so every right-hand side is non-negative;
    // `flipped` maps the certificate back to the caller's orientation.
    std::vector<bool> flipped(m, false);
    for (std::size_t i = 0; i < m; ++i) {
        const bool neg = problem.rhs[i] < 0;
        flipped[i] = neg;
        for (std::size_t j = 0; j < n; ++j)
            t.rows[i][j] = neg ? Rational(-problem.coeffs[i][j]) : problem.coeffs[i][j];
        t.rows[i][n + i] = 1;
        t.rows[i][n + m] = neg ? Rational(-problem.rhs[i]) : problem.rhs[i];
        t.basis[i] = n + i;
    }

    // Phase-1 objective: minimize the sum of artificials. With the
    // artificial basis, reduced costs on original columns are -sum of the
    // column; the objective starts at sum(rhs).
    t.cost.assign(n + m + 1, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
        Rational s{};
        for (std::size_t i = 0; i < m; ++i)
            s += t.rows[i][j];
        t.cost[j] = Rational(-s);
    }
    Rational z0{};
    for (std::size_t i = 0; i < m; ++i)
        z0 += t.rows[i][n + m];
    t.cost[n + m] = Rational(-z0);

    // Bland's rule: smallest eligible column enters, smallest basic index
    // among minimal ratios leaves. No cycling, guaranteed termination.
    for (;;) {
        std::size_t enter = n + m;
        for (std::size_t j = 0; j < n + m; ++j) {
            if (t.cost[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == n + m)
            break;

        std::size_t leave = m;
        Rational best_ratio{};
        for (std::size_t i = 0; i < m; ++i) {
            if (t.rows[i][enter] <= 0)
                continue;
            const Rational ratio = Rational(t.rows[i][n + m] / t.rows[i][enter]);
            if (leave == m || ratio < best_ratio ||
                (ratio == best_ratio && t.basis[i] < t.basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == m)
            throw std::logic_error("phase-1 objective unbounded below; impossible");
        pivot(t, leave, enter);
    }

    FeasibilityResult result;
    result.infeasibility = t.objective();
    if (result.infeasibility == 0) {
        result.feasible = true;
        result.solution.assign(n, Rational(0));
        for (std::size_t i = 0; i < m; ++i)
            if (t.basis[i] < n)
                result.solution[t.basis[i]] = t.rows[i][n + m];
    } else {
        // Simplex multipliers off the final reduced costs of the artificial
        // columns: y_i = 1 - cost[n+i]; then y.A <= 0 and y.b = objective > 0.
        result.feasible = false;
        result.certificate.assign(m, Rational(0));
        for (std::size_t i = 0; i < m; ++i) {
            Rational y = Rational(1) - t.cost[n + i];
            result.certificate[i] = flipped[i] ? Rational(-y) : y;
        }
    }
    return result;
}

} // namespace cmdbell::lp
