#include "doctest.h"

#include "cmdbell/bell.hpp"
#include "cmdbell/classify.hpp"
#include "cmdbell/constructors.hpp"
#include "cmdbell/verification.hpp"

#include "test_helpers.hpp"

#include <algorithm>
#include <cmath>

using namespace cmdbell;

TEST_SUITE_BEGIN("classify");

TEST_CASE("label table is total and mutually exclusive") {
    CHECK(to_string(CaseLabel::s1) == "S1");
    CHECK(to_string(CaseLabel::s2_without_mi) == "S2-without-MI");
    CHECK(to_string(CaseLabel::s3) == "S3");
    CHECK(to_string(CaseLabel::s4) == "S4");
}

TEST_CASE("classify: uniform model is S1") {
    const Classification c = classify(uniform_mi_model());
    CHECK(c.label == CaseLabel::s1);
    CHECK(c.in_ker_m);
    CHECK(c.in_ker_n);
    CHECK(c.residual_m == 0.0);
    CHECK(c.residual_n == 0.0);
}

TEST_CASE("classify: signaling witness is S2-without-MI with N-residual 1") {
    const Classification c = classify(signaling_cmd_witness(1.0 / 16.0));
    CHECK(c.label == CaseLabel::s2_without_mi);
    CHECK(c.in_ker_m);
    CHECK(!c.in_ker_n);
    CHECK(c.residual_m == 0.0);
    CHECK(c.residual_n == 1.0); // the Alice(A1) row dots to -16*epsilon = -1

    const HVModel witness = signaling_cmd_witness(1.0 / 16.0);
    const auto res = residual(build_nosignal_matrix(), witness.xi);
    CHECK(res.per_row[0] == -1.0);
}

TEST_CASE("classify: singlet-style model is S4") {
    const HVModel m = brans_model(standard_brans_angles());
    const Classification c = classify(m);
    CHECK(c.label == CaseLabel::s4);
    CHECK(!c.in_ker_m);
    CHECK(c.in_ker_n);
    // CHSH above 2 forces a nonzero correlation shift
    CHECK(c.residual_m > 0.5);
}

TEST_CASE("classify: PR-box model is S4 (no observable signaling)") {
    // Exact enumeration: every marginal of the PR-box model is 1/2, so its
    // xi annihilates all of N even though the CHSH value is 4.
    const HVModel pr = pr_box_model();
    for (const SettingPair& pair : kAllPairs) {
        const Distribution d = distribution_for(pr, pair);
        for (const Setting& s :
             {pair.alice, pair.bob}) {
            double plus = 0.0;
            for (int l = 0; l < kStrategyCount; ++l)
                if (outcome_at(l, s) == +1)
                    plus += d.p[l];
            CHECK(plus == 0.5);
        }
    }
    const auto res = residual(build_nosignal_matrix(), pr.xi);
    CHECK(res.max_abs == 0.0);

    const Classification c = classify(pr);
    CHECK(c.label == CaseLabel::s4);
    CHECK(!c.in_ker_m);
    CHECK(c.in_ker_n);
    CHECK(is_nosignaling(pr));
}

TEST_CASE("classify: generic random models are S3") {
    int s3 = 0;
    const int trials = 200;
    for (std::uint64_t seed = 0; seed < trials; ++seed) {
        const HVModel m = random_model(seed, 0.02);
        if (classify(m).label == CaseLabel::s3)
            ++s3;
    }
    CHECK(s3 >= trials * 9 / 10); // kernels have measure zero
}

TEST_CASE("classify rejects invalid models and bad tolerances") {
    HVModel bad = uniform_mi_model();
    bad.xi.block(PairCode::a1b2)[0] = -1.0;
    CHECK_THROWS_AS(static_cast<void>(classify(bad)), ModelError);
    CHECK_THROWS_AS(static_cast<void>(classify(uniform_mi_model(), 0.0)), ParameterError);
}

TEST_CASE("classification JSON carries the contract fields") {
    const std::string j = classification_to_json(classify(signaling_cmd_witness(1.0 / 16.0)));
    for (const char* key : {"\"case\"", "\"in_ker_M\"", "\"in_ker_N\"", "\"residual_M\"",
                            "\"residual_N\"", "S2-without-MI"})
        CHECK(j.find(key) != std::string::npos);
}

TEST_CASE("is_nosignaling: witness signals with contrast exactly 1") {
    CHECK(is_nosignaling(uniform_mi_model()));

    const HVModel witness = signaling_cmd_witness(1.0 / 16.0);
    CHECK(!is_nosignaling(witness));
    const MarginalContrasts c = marginal_contrasts(witness);
    CHECK(c.alice_a1 == 1.0);
    CHECK(c.alice_a2 == 0.0);
    CHECK(c.bob_b1 == 0.0);
    CHECK(c.bob_b2 == 0.0);

    const HVModel brans = brans_model(standard_brans_angles());
    CHECK(is_nosignaling(brans));
    CHECK(marginal_contrasts(brans).max_abs() == 0.0);
}

TEST_CASE("is_nosignaling agrees with membership in ker(N)") {
    const ConstraintMatrix n = build_nosignal_matrix();
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        HVModel m;
        switch (seed % 4) {
        case 0: m = random_model(seed, 0.03); break;
        case 1: m = testutil::random_kernel_model(seed, 0.05, n); break;
        case 2: m = random_nosignaling_model(seed); break;
        default: m = testutil::random_valid_model(seed, 0.04); break;
        }
        REQUIRE(validate(m).ok());
        const bool via_marginals = is_nosignaling(m, 1e-9);
        const bool via_kernel = residual_max(n, m.xi) <= 1e-9;
        CHECK(via_marginals == via_kernel);
        ++checked;
    }
    CHECK(checked == 400);
}

TEST_CASE("find_mi_representation: uniform model is representable") {
    const MiRepresentation rep = find_mi_representation(uniform_mi_model());
    REQUIRE(rep.feasible);
    CHECK(!rep.ambiguous_marginals);
    REQUIRE(rep.distribution.has_value());
    Rational sum(0);
    for (const Rational& q : rep.distribution->p) {
        CHECK(q >= 0);
        sum += q;
    }
    CHECK(sum == 1);
}

TEST_CASE("find_mi_representation: PR-box is not representable, with certificate") {
    const MiRepresentation rep = find_mi_representation(pr_box_model());
    REQUIRE(!rep.feasible);
    CHECK(rep.infeasibility > 0);
    REQUIRE(rep.certificate.size() == 9);

    // Farkas: y.A <= 0 on every strategy column while y.b > 0
    Rational yb = rep.certificate[0];
    for (int k = 0; k < 8; ++k)
        yb += rep.certificate[1 + k] * rep.targets[k];
    CHECK(yb > 0);
    for (int l = 0; l < kStrategyCount; ++l) {
        const Strategy s = Strategy::from_index(l);
        Rational col = rep.certificate[0];
        col += rep.certificate[1] * s.a1;
        col += rep.certificate[2] * s.a2;
        col += rep.certificate[3] * s.b1;
        col += rep.certificate[4] * s.b2;
        col += rep.certificate[5] * (s.a1 * s.b1);
        col += rep.certificate[6] * (s.a1 * s.b2);
        col += rep.certificate[7] * (s.a2 * s.b1);
        col += rep.certificate[8] * (s.a2 * s.b2);
        CHECK(col <= 0);
    }
}

TEST_CASE("find_mi_representation: perfect anticorrelation is representable") {
    // all four correlations -1, all marginals 0
    std::array<Distribution, 4> dists;
    for (int p = 0; p < 4; ++p) {
        const SettingPair sp = kAllPairs[p];
        for (int l = 0; l < kStrategyCount; ++l) {
            const int ab = outcome_at(l, sp.alice) * outcome_at(l, sp.bob);
            dists[p].p[l] = ab == -1 ? 1.0 / 8.0 : 0.0;
        }
    }
    const HVModel m = xi_from_distributions(dists[0], dists[1], dists[2], dists[3]);
    for (const SettingPair& pair : kAllPairs)
        CHECK(correlation(m, pair) == -1.0);

    // oracle: equal weight on (+,+,-,-) and (-,-,+,+) satisfies all nine
    // constraints directly
    const int up_down = Strategy{+1, +1, -1, -1}.index();
    const int down_up = Strategy{-1, -1, +1, +1}.index();
    Distribution q{};
    q.p[up_down] = 0.5;
    q.p[down_up] = 0.5;
    for (const SettingPair& pair : kAllPairs) {
        double corr = 0.0;
        for (int l = 0; l < kStrategyCount; ++l)
            corr += outcome_at(l, pair.alice) * outcome_at(l, pair.bob) * q.p[l];
        CHECK(corr == -1.0);
    }

    const MiRepresentation rep = find_mi_representation(m);
    REQUIRE(rep.feasible);
    // the returned witness reproduces the same behavior
    for (int p = 0; p < 4; ++p) {
        const SettingPair sp = kAllPairs[p];
        Rational corr(0);
        for (int l = 0; l < kStrategyCount; ++l)
            corr += Rational(outcome_at(l, sp.alice) * outcome_at(l, sp.bob)) *
                    rep.distribution->p[l];
        CHECK(corr == -1);
    }
}

TEST_CASE("find_mi_representation flags signaling models as ambiguous") {
    const MiRepresentation rep = find_mi_representation(signaling_cmd_witness(1.0 / 16.0));
    CHECK(rep.ambiguous_marginals);
    // targets were taken against the reference-side pairs: E(A1) from (A1,B1)
    CHECK(rep.targets[0] == 0);
}

TEST_CASE("representability coincides with the CHSH system on no-signaling models") {
    int feasible = 0;
    int infeasible = 0;
    for (std::uint64_t seed = 1000; seed < 1200; ++seed) {
        const HVModel m = random_nosignaling_model(seed);
        double max_s = -4.0;
        for (const WeightVector& w : chsh_family())
            max_s = std::max(max_s, bell_value(m, w));
        const MiRepresentation rep = find_mi_representation(m);
        if (rep.feasible) {
            ++feasible;
            CHECK(max_s <= 2.0 + 1e-7);
        } else {
            ++infeasible;
            CHECK(max_s > 2.0 - 1e-7);
        }
    }
    CHECK(feasible > 0);
    CHECK(infeasible > 0);
}

TEST_CASE("S1 models are always representable") {
    const ConstraintMatrix m = build_cmd_matrix();
    const ConstraintMatrix n = build_nosignal_matrix();
    int s1_count = 0;
    for (std::uint64_t seed = 2000; seed < 2050; ++seed) {
        // project onto ker(M), then ker(N); the matrices' rows are mutually
        // orthogonal across the two, so the result lies in both kernels
        HVModel model;
        model.reference = testutil::random_reference(seed);
        XiVector xi = project_to_kernel(m, testutil::random_raw_xi(seed)).parallel;
        xi = project_to_kernel(n, xi).parallel;
        model.xi = testutil::fit_to_reference(xi, model.reference, 0.05);
        REQUIRE(validate(model).ok());

        const Classification c = classify(model);
        REQUIRE(c.label == CaseLabel::s1);
        ++s1_count;
        CHECK(find_mi_representation(model).feasible);
    }
    CHECK(s1_count == 50);
}

TEST_SUITE_END();
