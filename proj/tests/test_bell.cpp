#include "doctest.h"

#include "cmdbell/bell.hpp"
#include "cmdbell/constructors.hpp"
#include "cmdbell/rational.hpp"

#include "test_helpers.hpp"

#include <cmath>
#include <numbers>
#include <set>

using namespace cmdbell;

TEST_SUITE_BEGIN("bell");

TEST_CASE("chsh_family: eight distinct members, product -1, bound 2") {
    const auto family = chsh_family();
    CHECK(family.size() == 8);
    std::set<std::array<double, 4>> seen;
    for (const WeightVector& w : family) {
        CHECK(w.w11 * w.w12 * w.w21 * w.w22 == -1.0);
        CHECK(w.bound == 2.0);
        seen.insert({w.w11, w.w12, w.w21, w.w22});
    }
    CHECK(seen.size() == 8);
    CHECK(seen.count({1.0, 1.0, 1.0, -1.0}) == 1);
    CHECK(seen.count({-1.0, -1.0, -1.0, 1.0}) == 1);
}

TEST_CASE("correlation: uniform model vanishes on every pair") {
    const HVModel m = uniform_mi_model();
    for (const SettingPair& pair : kAllPairs)
        CHECK(correlation(m, pair) == 0.0);
}

TEST_CASE("correlation: PR-box pair (A2,B2) is -1") {
    const HVModel m = pr_box_model();
    CHECK(correlation(m, kPairA2B2) == -1.0);
    CHECK(correlation(m, kPairA1B1) == 1.0);
    CHECK(correlation(m, kPairA1B2) == 1.0);
    CHECK(correlation(m, kPairA2B1) == 1.0);
}

TEST_CASE("correlation: singlet-style model reproduces -cos(theta)") {
    // oracle: the two-outcome joint probabilities P(a,b) = (1 - a*b*cos)/4
    // give E = sum_ab a*b*P(a,b)
    const double theta = std::numbers::pi / 4.0;
    double oracle = 0.0;
    for (int a : {+1, -1})
        for (int b : {+1, -1})
            oracle += a * b * (1.0 - a * b * std::cos(theta)) / 4.0;
    CHECK(oracle == doctest::Approx(-std::sqrt(2.0) / 2.0).epsilon(1e-15));

    BransAngles angles = standard_brans_angles();
    angles.theta11 = theta;
    const HVModel m = brans_model(angles);
    CHECK(correlation(m, kPairA1B1) == doctest::Approx(oracle).epsilon(1e-14));
}

TEST_CASE("generalized_correlation collapses to correlation on the diagonal") {
    for (std::uint64_t seed = 11; seed < 16; ++seed) {
        const HVModel m = testutil::random_valid_model(seed, 0.05);
        for (const SettingPair& pair : kAllPairs)
            CHECK(generalized_correlation(m, pair, pair) ==
                  doctest::Approx(correlation(m, pair)).epsilon(1e-14));
    }
}

TEST_CASE("generalized_correlation: PR-box outcomes of (A2,B2) over the reference") {
    // oracle: enumerate a2*b2 against the (A1,B1)-conditioned distribution
    const HVModel m = pr_box_model();
    const Distribution ref = distribution_for(m, kPairA1B1);
    double oracle = 0.0;
    for (int l = 0; l < kStrategyCount; ++l)
        oracle += outcome_at(l, kA2) * outcome_at(l, kB2) * ref.p[l];
    CHECK(oracle == 0.0);
    CHECK(generalized_correlation(m, kPairA2B2, kPairA1B1) == 0.0);
}

TEST_CASE("generalized_correlation ignores dist when xi = 0") {
    HVModel m;
    m.reference = testutil::random_reference(5);
    for (const SettingPair& measured : kAllPairs) {
        const double base = generalized_correlation(m, measured, kPairA1B1);
        for (const SettingPair& dist : kAllPairs)
            CHECK(generalized_correlation(m, measured, dist) == base);
    }
}

TEST_CASE("local_expectation and marginal_probability on the witness") {
    const HVModel uniform = uniform_mi_model();
    for (const Setting& setting : kAllSettings)
        for (const SettingPair& pair : kAllPairs) {
            CHECK(local_expectation(uniform, setting, pair) == 0.0);
            CHECK(marginal_probability(uniform, setting, +1, pair) == 0.5);
        }

    const double eps = 1.0 / 16.0;
    const HVModel witness = signaling_cmd_witness(eps);
    // oracle: sum over lambda of a1 * (1/16 + eps*a1) = 16*eps
    double oracle = 0.0;
    for (int l = 0; l < kStrategyCount; ++l)
        oracle += outcome_at(l, kA1) * (1.0 / 16.0 + eps * outcome_at(l, kA1));
    CHECK(oracle == 16.0 * eps);

    CHECK(local_expectation(witness, kA1, kPairA1B2) == 1.0);
    CHECK(local_expectation(witness, kA1, kPairA1B1) == 0.0);
    CHECK(marginal_probability(witness, kA1, +1, kPairA1B2) == 1.0);
    CHECK(marginal_probability(witness, kA1, -1, kPairA1B2) == 0.0);
    CHECK_THROWS_AS(static_cast<void>(marginal_probability(witness, kA1, 2, kPairA1B2)),
                    ParameterError);
}

TEST_CASE("marginal probabilities of both outcomes sum to one") {
    for (std::uint64_t seed = 21; seed < 26; ++seed) {
        const HVModel m = testutil::random_valid_model(seed, 0.05);
        for (const Setting& setting : kAllSettings)
            for (const SettingPair& pair : kAllPairs) {
                const double p_plus = marginal_probability(m, setting, +1, pair);
                const double p_minus = marginal_probability(m, setting, -1, pair);
                CHECK(p_plus + p_minus == doctest::Approx(1.0).epsilon(1e-14));
                CHECK(p_plus >= 0.0);
                CHECK(p_plus <= 1.0);
            }
    }
}

TEST_CASE("bell_value: uniform vanishes, PR-box reaches 4, singlet reaches 2*sqrt(2)") {
    const auto family = chsh_family();
    const HVModel uniform = uniform_mi_model();
    for (const WeightVector& w : family)
        CHECK(bell_value(uniform, w) == 0.0);

    const HVModel pr = pr_box_model();
    CHECK(bell_value(pr, WeightVector{1, 1, 1, -1, 2}) == 4.0);

    const HVModel brans = brans_model(standard_brans_angles());
    double best = -4.0;
    for (const WeightVector& w : family)
        best = std::max(best, bell_value(brans, w));
    CHECK(best == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-13));
}

TEST_CASE("gamma: single-block deviation and the PR-box shifts") {
    CHECK(gamma(XiVector{}, WeightVector{1, 1, 1, -1, 2}) == 0.0);

    const double eps = 1.0 / 128.0;
    XiVector xi{};
    for (int l = 0; l < kStrategyCount; ++l)
        xi.block(PairCode::a2b2)[l] = -eps * outcome_at(l, kA2) * outcome_at(l, kB2);
    CHECK(gamma(xi, WeightVector{1, 1, 1, -1, 2}) == 16.0 * eps);

    // oracle: the PR-box correlation shifts are (1, 1, -1)
    const HVModel pr = pr_box_model();
    const auto shifts = correlation_shifts(pr.xi);
    CHECK(shifts[0] == 1.0);
    CHECK(shifts[1] == 1.0);
    CHECK(shifts[2] == -1.0);
    CHECK(gamma(pr.xi, WeightVector{1, 1, 1, -1, 2}) == 3.0);
}

TEST_CASE("gamma_max: kernel directions give zero, shifts add up in L1") {
    const ConstraintMatrix m = build_cmd_matrix();
    const XiVector kernel_xi =
        project_to_kernel(m, testutil::random_raw_xi(33)).parallel;
    CHECK(gamma_max(kernel_xi) <= 1e-12);

    CHECK(gamma_max(pr_box_model().xi) == 3.0);

    const double eps = 1.0 / 256.0;
    XiVector xi{};
    for (int l = 0; l < kStrategyCount; ++l)
        xi.block(PairCode::a2b2)[l] = eps * outcome_at(l, kA2) * outcome_at(l, kB2);
    CHECK(gamma_max(xi) == 16.0 * eps);
}

TEST_CASE("gamma_max is determined by the row-space part") {
    const ConstraintMatrix m = build_cmd_matrix();
    SUBCASE("float mode") {
        for (std::uint64_t seed = 40; seed < 50; ++seed) {
            const XiVector xi = testutil::random_raw_xi(seed);
            const auto split = project_to_kernel(m, xi);
            CHECK(gamma_max(xi) == doctest::Approx(gamma_max(split.perp)).epsilon(1e-12));
        }
    }
    SUBCASE("rational mode, exact") {
        BasicXiVector<Rational> xi;
        for (int f = 0; f < 48; ++f)
            xi.set_flat(f, Rational((f * 37) % 23 - 11, 64));
        const auto split = project_to_kernel(m, xi);
        CHECK(gamma_max(xi) == gamma_max(split.perp));
        CHECK(gamma_max(split.parallel) == 0);
    }
}

TEST_CASE("gamma equals the family maximum at some member") {
    for (std::uint64_t seed = 60; seed < 70; ++seed) {
        const XiVector xi = testutil::random_raw_xi(seed);
        double best = 0.0;
        for (const WeightVector& w : chsh_family())
            best = std::max(best, gamma(xi, w));
        CHECK(best == doctest::Approx(gamma_max(xi)).epsilon(1e-12));
    }
}

TEST_CASE("hall_measure: baseline, PR-box and witness values") {
    const auto zero = hall_measure(XiVector{});
    CHECK(zero.measure == 0.0);
    CHECK(zero.bound == 2.0);

    // oracle: the PR-box blocks are concentrated with half-overlapping
    // supports, so the largest block distance is 8 * (1/8) * ... = 1
    const HVModel pr = pr_box_model();
    double largest = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const auto bi = pr.xi.block_or_zero(kAllPairs[i].code());
            const auto bj = pr.xi.block_or_zero(kAllPairs[j].code());
            double dist = 0.0;
            for (int l = 0; l < kStrategyCount; ++l)
                dist += std::abs(bi[l] - bj[l]);
            largest = std::max(largest, dist);
        }
    CHECK(largest == 1.0);

    const auto pr_hall = hall_measure(pr.xi);
    CHECK(pr_hall.measure == 1.0);
    CHECK(pr_hall.bound == 4.0);

    const HVModel witness = signaling_cmd_witness(1.0 / 16.0);
    const auto w_hall = hall_measure(witness.xi);
    CHECK(w_hall.measure == 1.0);
    CHECK(w_hall.bound == 4.0);
    CHECK(gamma_max(witness.xi) == 0.0); // the two bound notions diverge here
}

TEST_CASE("decomposition identity: bell value = reference value + gamma") {
    for (std::uint64_t seed = 80; seed < 110; ++seed) {
        const HVModel m = testutil::random_valid_model(seed, 0.06);
        const HVModel ref = reference_only(m);
        for (const WeightVector& w : chsh_family())
            CHECK(bell_value(m, w) ==
                  doctest::Approx(bell_value(ref, w) + gamma(m.xi, w)).epsilon(1e-12));
    }
}

TEST_CASE("kernel models keep every CHSH member within the classical bound") {
    const ConstraintMatrix m = build_cmd_matrix();
    for (std::uint64_t seed = 200; seed < 400; ++seed) {
        const HVModel model = testutil::random_kernel_model(seed, 0.08, m);
        REQUIRE(validate(model).ok());
        for (const WeightVector& w : chsh_family())
            CHECK(bell_value(model, w) <= w.bound + 1e-9);
    }
}

TEST_CASE("vanishing gamma on the family forces vanishing shifts") {
    for (std::uint64_t seed = 500; seed < 700; ++seed) {
        const XiVector xi = testutil::random_raw_xi(seed);
        double max_gamma = 0.0;
        for (const WeightVector& w : chsh_family())
            max_gamma = std::max(max_gamma, std::abs(gamma(xi, w)));
        const auto shifts = correlation_shifts(xi);
        const double max_shift =
            std::max({std::abs(shifts[0]), std::abs(shifts[1]), std::abs(shifts[2])});
        CHECK((max_gamma <= 1e-9) == (max_shift <= 1e-9));
        CHECK(max_gamma >= max_shift - 1e-12);
        CHECK(max_gamma <= 3.0 * max_shift + 1e-12);
    }
}

TEST_CASE("the capped L1 bound dominates every CHSH value") {
    for (std::uint64_t seed = 700; seed < 900; ++seed) {
        const HVModel m = testutil::random_valid_model(seed, 0.1);
        const auto hall = hall_measure(m.xi);
        for (const WeightVector& w : chsh_family())
            CHECK(bell_value(m, w) <= hall.bound + 1e-9);
    }
}

TEST_CASE("correlations stay in [-1, 1]") {
    for (std::uint64_t seed = 900; seed < 930; ++seed) {
        const HVModel m = testutil::random_valid_model(seed, 0.2);
        for (const SettingPair& pair : kAllPairs) {
            const double e = correlation(m, pair);
            CHECK(e >= -1.0);
            CHECK(e <= 1.0);
        }
    }
}

TEST_CASE("bell report carries the per-member decomposition") {
    const HVModel pr = pr_box_model();
    const BellReport report = make_bell_report(pr);
    CHECK(report.max_bell_value == 4.0);
    CHECK(report.gamma_max == 3.0);
    CHECK(report.hall_measure == 1.0);
    CHECK(report.hall_bound == 4.0);
    const HVModel ref = reference_only(pr);
    for (const auto& member : report.members)
        CHECK(member.bell_value ==
              doctest::Approx(bell_value(ref, member.weights) + member.gamma).epsilon(1e-12));

    const std::string json = bell_report_to_json(report);
    CHECK(json.find("\"gamma_max\"") != std::string::npos);
    CHECK(json.find("\"hall_bound\"") != std::string::npos);
}

TEST_SUITE_END();
