#include "cmdbell/classify.hpp"

#include "cmdbell/bell.hpp"
#include "cmdbell/simplex.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>

namespace cmdbell {

namespace {

const ConstraintMatrix& cmd_matrix() {
    static const ConstraintMatrix m = build_cmd_matrix();
    return m;
}

const ConstraintMatrix& nosignal_matrix() {
    static const ConstraintMatrix n = build_nosignal_matrix();
    return n;
}

void require_valid(const HVModel& model) {
    const ValidityReport report = validate(model);
    if (!report.ok())
        throw ModelError("invalid model: " + report.summary());
}

} // namespace

std::string to_string(CaseLabel label) {
    switch (label) {
    case CaseLabel::s1: return "S1";
    case CaseLabel::s2_without_mi: return "S2-without-MI";
    case CaseLabel::s3: return "S3";
    case CaseLabel::s4: return "S4";
    }
    return "?";
}

Classification classify(const HVModel& model, double tol) {
    if (!(tol > 0))
        throw ParameterError("tolerance must be positive");
    require_valid(model);

    Classification c;
    c.residual_m = residual_max(cmd_matrix(), model.xi);
    c.residual_n = residual_max(nosignal_matrix(), model.xi);
    c.in_ker_m = c.residual_m <= tol;
    c.in_ker_n = c.residual_n <= tol;
    if (c.in_ker_m)
        c.label = c.in_ker_n ? CaseLabel::s1 : CaseLabel::s2_without_mi;
    else
        c.label = c.in_ker_n ? CaseLabel::s4 : CaseLabel::s3;
    return c;
}

std::string classification_to_json(const Classification& c, int indent) {
    nlohmann::json j;
    j["case"] = to_string(c.label);
    j["in_ker_M"] = c.in_ker_m;
    j["in_ker_N"] = c.in_ker_n;
    j["residual_M"] = c.residual_m;
    j["residual_N"] = c.residual_n;
    return j.dump(indent);
}

double MarginalContrasts::max_abs() const {
    return std::max({std::abs(alice_a1), std::abs(alice_a2), std::abs(bob_b1),
                     std::abs(bob_b2)});
}

MarginalContrasts marginal_contrasts(const HVModel& model) {
    MarginalContrasts c;
    c.alice_a1 = local_expectation(model, kA1, kPairA1B2) - local_expectation(model, kA1, kPairA1B1);
    c.alice_a2 = local_expectation(model, kA2, kPairA2B2) - local_expectation(model, kA2, kPairA2B1);
    c.bob_b1 = local_expectation(model, kB1, kPairA2B1) - local_expectation(model, kB1, kPairA1B1);
    c.bob_b2 = local_expectation(model, kB2, kPairA2B2) - local_expectation(model, kB2, kPairA1B2);
    return c;
}

bool is_nosignaling(const HVModel& model, double tol) {
    if (!(tol > 0))
        throw ParameterError("tolerance must be positive");
    return marginal_contrasts(model).max_abs() <= tol;
}

Distribution MiRepresentation::distribution_as_double() const {
    Distribution d{};
    if (distribution)
        for (int l = 0; l < kStrategyCount; ++l)
            d.p[l] = to_double(distribution->p[l]);
    return d;
}

namespace {

/// Feasibility over the 16-strategy simplex: nine equality rows
/// (normalization, two Alice expectations, two Bob expectations, four
/// correlations) with exact rational targets.
MiRepresentation solve_mi(const std::array<Rational, 8>& targets, bool ambiguous) {
    lp::EqualityProblem problem;
    problem.num_vars = kStrategyCount;
    problem.coeffs.assign(9, std::vector<Rational>(kStrategyCount));
    problem.rhs.assign(9, Rational(0));

    for (int l = 0; l < kStrategyCount; ++l) {
        problem.coeffs[0][l] = 1;
        problem.coeffs[1][l] = outcome_at(l, kA1);
        problem.coeffs[2][l] = outcome_at(l, kA2);
        problem.coeffs[3][l] = outcome_at(l, kB1);
        problem.coeffs[4][l] = outcome_at(l, kB2);
        for (int p = 0; p < 4; ++p) {
            const SettingPair sp = kAllPairs[p];
            problem.coeffs[5 + p][l] =
                outcome_at(l, sp.alice) * outcome_at(l, sp.bob);
        }
    }
    problem.rhs[0] = 1;
    for (int k = 0; k < 8; ++k)
        problem.rhs[1 + k] = targets[k];

    const lp::FeasibilityResult lp_result = lp::solve_equality_feasibility(problem);

    MiRepresentation rep;
    rep.ambiguous_marginals = ambiguous;
    rep.targets = targets;
    rep.feasible = lp_result.feasible;
    rep.infeasibility = lp_result.infeasibility;
    if (lp_result.feasible) {
        BasicDistribution<Rational> q;
        for (int l = 0; l < kStrategyCount; ++l)
            q.p[l] = lp_result.solution[l];
        rep.distribution = std::move(q);
    } else {
        rep.certificate = lp_result.certificate;
    }
    return rep;
}

template <typename T>
std::array<T, 8> representation_targets(const BasicHVModel<T>& model) {
    // Marginal targets from the pair keeping the remote party at its
    // reference setting; for no-signaling models any choice coincides.
    return {
        local_expectation(model, kA1, kPairA1B1),
        local_expectation(model, kA2, kPairA2B1),
        local_expectation(model, kB1, kPairA1B1),
        local_expectation(model, kB2, kPairA1B2),
        correlation(model, kPairA1B1),
        correlation(model, kPairA1B2),
        correlation(model, kPairA2B1),
        correlation(model, kPairA2B2),
    };
}

} // namespace

MiRepresentation find_mi_representation(const HVModel& model) {
    require_valid(model);
    const std::array<double, 8> t = representation_targets(model);
    std::array<Rational, 8> targets;
    for (int k = 0; k < 8; ++k)
        targets[k] = rational_from_double(t[k]);
    return solve_mi(targets, !is_nosignaling(model));
}

MiRepresentation find_mi_representation(const BasicHVModel<Rational>& model) {
    const ValidityReport report = validate(model);
    if (!report.ok())
        throw ModelError("invalid model: " + report.summary());

    const std::array<Rational, 8> targets = representation_targets(model);
    const ConstraintMatrix& n = nosignal_matrix();
    bool signals = false;
    const ResidualVector<Rational> res = residual(n, model.xi);
    for (const Rational& r : res.per_row)
        if (r != 0)
            signals = true;
    return solve_mi(targets, signals);
}

} // namespace cmdbell
