#include "cmdbell/verification.hpp"

#include "cmdbell/bell.hpp"
#include "cmdbell/classify.hpp"
#include "cmdbell/constructors.hpp"
#include "cmdbell/model_json.hpp"
#include "cmdbell/prng.hpp"
#include "cmdbell/sampler.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <sstream>

namespace cmdbell {

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    double millis() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start)
            .count();
    }
};

struct Checker {
    bool ok = true;
    int failures = 0;
    std::ostringstream notes;

    void require(bool condition, const std::string& what) {
        if (condition)
            return;
        ok = false;
        if (failures < 8) {
            if (failures)
                notes << "; ";
            notes << what;
        }
        ++failures;
    }
};

CheckResult finish(int id, const std::string& name, const Checker& c, const Timer& timer,
                   const std::string& success_detail) {
    CheckResult r;
    r.id = id;
    r.name = name;
    r.passed = c.ok;
    r.millis = timer.millis();
    if (c.ok) {
        r.detail = success_detail;
    } else {
        std::ostringstream os;
        os << c.failures << " failure(s): " << c.notes.str();
        r.detail = os.str();
    }
    return r;
}

bool bits_equal(double a, double b) {
    return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

double snap_unit(double x, int bits) { return std::ldexp(std::round(std::ldexp(x, bits)), -bits); }

double snap_down(double x, int bits) { return std::ldexp(std::floor(std::ldexp(x, bits)), -bits); }

const ConstraintMatrix& suite_cmd_matrix(const SuiteOptions& o) {
    static const ConstraintMatrix m = build_cmd_matrix();
    return o.cmd_matrix_override ? *o.cmd_matrix_override : m;
}

const ConstraintMatrix& suite_nosignal_matrix(const SuiteOptions& o) {
    static const ConstraintMatrix n = build_nosignal_matrix();
    return o.nosignal_matrix_override ? *o.nosignal_matrix_override : n;
}

// ---------------------------------------------------------------------------
// 1. kernel dimensions, exactly
// ---------------------------------------------------------------------------

void check_matrix_exact(Checker& c, const ConstraintMatrix& m, int expected_rank,
                        int expected_nullity) {
    for (const ConstraintRow& row : m.rows)
        for (int e : row.entries)
            c.require(e == -1 || e == 0 || e == 1,
                      m.name + ": entry outside {-1,0,+1} in row " + row.label);
    c.require(m.rows_pairwise_orthogonal(), m.name + ": rows not pairwise orthogonal");

    const int r = rank(m);
    c.require(r == expected_rank,
              m.name + ": rank " + std::to_string(r) + " != " + std::to_string(expected_rank));

    const KernelBasis basis = kernel_basis(m);
    c.require(basis.dimension() == expected_nullity,
              m.name + ": nullity " + std::to_string(basis.dimension()) +
                  " != " + std::to_string(expected_nullity));

    for (const auto& v : basis.vectors) {
        for (const ConstraintRow& row : m.rows) {
            std::int64_t dot = 0;
            for (int i = 0; i < kXiDimension; ++i)
                dot += row.entries[i] * v[i];
            c.require(dot == 0, m.name + ": kernel vector not annihilated by " + row.label);
        }
    }
    for (std::size_t i = 0; i < basis.vectors.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.vectors.size(); ++j) {
            std::int64_t dot = 0;
            for (int k = 0; k < kXiDimension; ++k)
                dot += basis.vectors[i][k] * basis.vectors[j][k];
            c.require(dot == 0, m.name + ": kernel basis vectors not orthogonal");
            if (dot != 0)
                return;
        }
    }
}

CheckResult check_kernel_dimensions(const SuiteOptions& o) {
    Timer timer;
    Checker c;
    check_matrix_exact(c, suite_cmd_matrix(o), 6, 42);
    check_matrix_exact(c, suite_nosignal_matrix(o), 7, 41);
    return finish(1, "kernel-dimensions", c, timer,
                  "rank(M)=6 nullity(M)=42 rank(N)=7 nullity(N)=41, rows and kernel bases "
                  "orthogonal, integer-exact");
}

// ---------------------------------------------------------------------------
// 2. kernel models leave every CHSH member within the classical bound
// ---------------------------------------------------------------------------

CheckResult check_cmd_implies_bell(const SuiteOptions& o) {
    Timer timer;
    Checker c;
    const auto family = chsh_family();
    const ConstraintMatrix& m = suite_cmd_matrix(o);
    const std::uint64_t mag_seed = derive_seed(o.seed, 2);
    double worst = -4.0;
    const int trials = 10000;
    for (int t = 0; t < trials && c.ok; ++t) {
        const double magnitude = 0.0625 * counter_uniform01(mag_seed, t);
        const HVModel model = random_cmd_model(derive_seed(o.seed, 100000 + t), magnitude);
        c.require(validate(model).ok(), "model " + std::to_string(t) + " invalid");
        c.require(residual_max(m, model.xi) <= 1e-12,
                  "model " + std::to_string(t) + " left the kernel");
        for (const WeightVector& w : family) {
            const double s = bell_value(model, w);
            worst = std::max(worst, s);
            c.require(s <= w.bound + 1e-9,
                      "model " + std::to_string(t) + " exceeds the classical bound: " +
                          std::to_string(s));
        }
    }
    std::ostringstream detail;
    detail << trials << " kernel-projected models, max CHSH value " << worst
           << " <= 2 + 1e-9";
    return finish(2, "cmd-implies-bell", c, timer, detail.str());
}

// ---------------------------------------------------------------------------
// 3. vanishing gamma on the whole family forces vanishing correlation shifts
// ---------------------------------------------------------------------------

CheckResult check_bell_implies_cmd(const SuiteOptions& o) {
    Timer timer;
    Checker c;
    const auto family = chsh_family();
    const ConstraintMatrix& m = suite_cmd_matrix(o);
    const int trials = 10000;
    for (int t = 0; t < trials && c.ok; ++t) {
        const std::uint64_t xi_seed = derive_seed(o.seed, 300000 + t);
        XiVector xi;
        if (t % 4 == 0) {
            // in-kernel flavor
            XiVector raw;
            for (int i = 0; i < XiVector::flat_size(); ++i)
                raw.set_flat(i, 2.0 * counter_uniform01(xi_seed, i) - 1.0);
            xi = project_to_kernel(m, raw).parallel;
        } else if (t % 4 == 1) {
            // a single nonzero correlation shift
            const int b = t % 3;
            const double eps = 0.01 + counter_uniform01(xi_seed, 99);
            const SettingPair sp = kNonReferencePairs[b];
            for (int l = 0; l < kStrategyCount; ++l)
                xi.blocks[b][l] = eps * outcome_at(l, sp.alice) * outcome_at(l, sp.bob);
        } else {
            for (int i = 0; i < XiVector::flat_size(); ++i)
                xi.set_flat(i, 2.0 * counter_uniform01(xi_seed, i) - 1.0);
        }

        double max_gamma = 0.0;
        for (const WeightVector& w : family)
            max_gamma = std::max(max_gamma, std::abs(gamma(xi, w)));

        const auto shifts = correlation_shifts(xi);
        const double max_shift =
            std::max({std::abs(shifts[0]), std::abs(shifts[1]), std::abs(shifts[2])});

        c.require((max_gamma <= 1e-9) == (max_shift <= 1e-9),
                  "gamma and correlation shifts disagree at t=" + std::to_string(t));
        c.require(max_gamma >= max_shift - 1e-12 && max_gamma <= 3.0 * max_shift + 1e-12,
                  "gamma bounds violated at t=" + std::to_string(t));
        c.require(std::abs(max_gamma - gamma_max(xi)) <= 1e-12,
                  "family maximum differs from gamma_max at t=" + std::to_string(t));

        if (t % 4 == 1)
            c.require(max_gamma > 1e-9,
                      "nonzero shift produced no violating member at t=" + std::to_string(t));

        if (t < 16) {
            // the shifts are exactly the first three residual rows
            const auto res = residual(m, xi);
            for (int k = 0; k < 3; ++k)
                c.require(std::abs(res.per_row[k] - shifts[k]) <= 1e-12,
                          "shift/residual mismatch at t=" + std::to_string(t));
        }
    }
    return finish(3, "bell-implies-cmd", c, timer,
                  "10000 xi draws: gamma vanishes on the family iff all correlation shifts "
                  "vanish (within 1e-9)");
}

// ---------------------------------------------------------------------------
// 4. the signaling witness: kernel of M, but observably signaling
// ---------------------------------------------------------------------------

CheckResult check_signaling_witness(const SuiteOptions& o) {
    Timer timer;
    Checker c;
    const HVModel witness = signaling_cmd_witness(1.0 / 16.0);

    const Classification cls = classify(witness);
    c.require(cls.label == CaseLabel::s2_without_mi,
              "classification " + to_string(cls.label) + " != S2-without-MI");

    const MarginalContrasts contrasts = marginal_contrasts(witness);
    c.require(contrasts.alice_a1 == 1.0,
              "analytic Alice A1 contrast " + std::to_string(contrasts.alice_a1) + " != 1.0");

    const auto estimates = estimate_signaling(witness, 100000, derive_seed(o.seed, 4));
    const SignalingEstimate& a1 = estimates[0];
    c.require(a1.setting == "A1", "estimate order changed");
    c.require(std::abs(a1.contrast - 1.0) <= a1.radius,
              "sampled contrast " + std::to_string(a1.contrast) + " not within " +
                  std::to_string(a1.radius) + " of 1.0");

    std::ostringstream detail;
    detail << "S2-without-MI, analytic contrast 1.0, sampled " << a1.contrast << " +- "
           << a1.radius;
    return finish(4, "signaling-witness", c, timer, detail.str());
}

// ---------------------------------------------------------------------------
// 5. singlet-style model at the standard angles
// ---------------------------------------------------------------------------

CheckResult check_brans(const SuiteOptions& o) {
    Timer timer;
    Checker c;
    const double target = 2.0 * std::sqrt(2.0);
    const HVModel model = brans_model(standard_brans_angles());

    const auto family = chsh_family();
    int best = 0;
    double best_s = -4.0;
    for (int k = 0; k < 8; ++k) {
        const double s = bell_value(model, family[k]);
        if (s > best_s) {
            best_s = s;
            best = k;
        }
    }
    c.require(std::abs(best_s - target) <= 1e-12,
              "best CHSH member " + std::to_string(best_s) + " != 2*sqrt(2) within 1e-12");

    const Classification cls = classify(model);
    c.require(cls.label == CaseLabel::s4, "classification " + to_string(cls.label) + " != S4");

    const std::uint64_t sample_seed = derive_seed(o.seed, 5);
    double estimate = 0.0;
    double variance = 0.0;
    for (int p = 0; p < 4; ++p) {
        const RunResult run =
            sample_run(model, kAllPairs[p], 250000, derive_seed(sample_seed, p));
        const Estimate e = estimate_correlation(run);
        estimate += family[best].weight(kAllPairs[p].code()) * e.value;
        variance += e.std_error * e.std_error;
    }
    const double sigma = std::sqrt(variance);
    c.require(std::abs(estimate - target) <= 4.0 * sigma,
              "sampled CHSH " + std::to_string(estimate) + " not within 4 sigma (" +
                  std::to_string(4.0 * sigma) + ") of 2*sqrt(2)");

    std::ostringstream detail;
    detail << "best CHSH = " << best_s << " (2*sqrt(2) within 1e-12), S4, sampled " << estimate
           << " +- " << 4.0 * sigma;
    return finish(5, "brans-singlet", c, timer, detail.str());
}

// ---------------------------------------------------------------------------
// 6. PR-box model saturates the capped bound, exactly
// ---------------------------------------------------------------------------

CheckResult check_pr_box(const SuiteOptions&) {
    Timer timer;
    Checker c;
    const HVModel model = pr_box_model();
    const BellReport report = make_bell_report(model);
    c.require(report.max_bell_value == 4.0,
              "max CHSH " + std::to_string(report.max_bell_value) + " != 4");
    c.require(report.gamma_max == 3.0, "gamma_max " + std::to_string(report.gamma_max) + " != 3");
    c.require(report.hall_measure == 1.0,
              "hall measure " + std::to_string(report.hall_measure) + " != 1");
    c.require(report.hall_bound == 4.0,
              "hall bound " + std::to_string(report.hall_bound) + " != 4");
    c.require(report.max_bell_value == report.hall_bound, "bound not attained with equality");
    return finish(6, "pr-box", c, timer,
                  "max CHSH = 4, gamma_max = 3, measure = 1, bound = min{2+3*1, 4} = 4, all exact");
}

// ---------------------------------------------------------------------------
// 7. the two bound formulas diverge on the witness
// ---------------------------------------------------------------------------

CheckResult check_gamma_vs_hall(const SuiteOptions&) {
    Timer timer;
    Checker c;
    const HVModel witness = signaling_cmd_witness(1.0 / 16.0);
    const double g = gamma_max(witness.xi);
    const HallMeasure<double> hall = hall_measure(witness.xi);
    c.require(g == 0.0, "gamma_max " + std::to_string(g) + " != 0");
    c.require(hall.measure == 1.0, "hall measure " + std::to_string(hall.measure) + " != 1");
    c.require(hall.bound == 4.0, "hall bound " + std::to_string(hall.bound) + " != 4");
    return finish(7, "gamma-vs-hall", c, timer,
                  "witness: gamma_max = 0 while min{2+3*measure, 4} = 4, exact");
}

// ---------------------------------------------------------------------------
// 8. the capped L1 bound dominates every CHSH value
// ---------------------------------------------------------------------------

CheckResult check_hall_dominance(const SuiteOptions& o) {
    Timer timer;
    Checker c;
    const auto family = chsh_family();
    const std::uint64_t mag_seed = derive_seed(o.seed, 8);
    const int trials = 10000;
    double closest = 4.0;
    for (int t = 0; t < trials && c.ok; ++t) {
        const double magnitude = 0.25 * counter_uniform01(mag_seed, t);
        const HVModel model = random_model(derive_seed(o.seed, 800000 + t), magnitude);
        const HallMeasure<double> hall = hall_measure(model.xi);
        for (const WeightVector& w : family) {
            const double s = bell_value(model, w);
            closest = std::min(closest, hall.bound - s);
            c.require(s <= hall.bound + 1e-9,
                      "CHSH " + std::to_string(s) + " exceeds bound " +
                          std::to_string(hall.bound) + " at t=" + std::to_string(t));
        }
    }
    std::ostringstream detail;
    detail << trials << " random models, min(bound - CHSH) = " << closest << " >= -1e-9";
    return finish(8, "hall-dominance", c, timer, detail.str());
}

// ---------------------------------------------------------------------------
// 9. representability equals the full CHSH system (no-signaling models)
// ---------------------------------------------------------------------------

void verify_representation_exactly(Checker& c, const HVModel& model,
                                   const MiRepresentation& rep, int t) {
    if (rep.feasible) {
        const BasicDistribution<Rational>& q = *rep.distribution;
        Rational sum(0);
        for (int l = 0; l < kStrategyCount; ++l) {
            c.require(q.p[l] >= 0, "negative witness entry at t=" + std::to_string(t));
            sum += q.p[l];
        }
        c.require(sum == 1, "witness does not normalize at t=" + std::to_string(t));
        // the witness must reproduce all nine targets exactly
        const std::array<std::array<int, 2>, 4> pair_settings{{{0, 2}, {0, 3}, {1, 2}, {1, 3}}};
        std::array<Rational, 8> reproduced{};
        for (int l = 0; l < kStrategyCount; ++l) {
            const Strategy s = Strategy::from_index(l);
            const std::array<int, 4> signs{s.a1, s.a2, s.b1, s.b2};
            for (int k = 0; k < 4; ++k)
                reproduced[k] += Rational(signs[k]) * q.p[l];
            for (int p = 0; p < 4; ++p)
                reproduced[4 + p] +=
                    Rational(signs[pair_settings[p][0]] * signs[pair_settings[p][1]]) * q.p[l];
        }
        for (int k = 0; k < 8; ++k)
            c.require(reproduced[k] == rep.targets[k],
                      "witness misses target " + std::to_string(k) + " at t=" + std::to_string(t));
    } else {
        // Farkas certificate: y.A <= 0 on every strategy column, y.b > 0
        c.require(rep.certificate.size() == 9, "certificate size wrong at t=" + std::to_string(t));
        Rational yb = rep.certificate[0];
        for (int k = 0; k < 8; ++k)
            yb += rep.certificate[1 + k] * rep.targets[k];
        c.require(yb > 0, "certificate fails y.b > 0 at t=" + std::to_string(t));
        const std::array<std::array<int, 2>, 4> pair_settings{{{0, 2}, {0, 3}, {1, 2}, {1, 3}}};
        for (int l = 0; l < kStrategyCount; ++l) {
            const Strategy s = Strategy::from_index(l);
            const std::array<int, 4> signs{s.a1, s.a2, s.b1, s.b2};
            Rational col = rep.certificate[0];
            for (int k = 0; k < 4; ++k)
                col += rep.certificate[1 + k] * Rational(signs[k]);
            for (int p = 0; p < 4; ++p)
                col += rep.certificate[5 + p] *
                       Rational(signs[pair_settings[p][0]] * signs[pair_settings[p][1]]);
            c.require(col <= 0, "certificate fails y.A <= 0 at t=" + std::to_string(t));
        }
    }
    (void)model;
}

CheckResult check_fine_equivalence(const SuiteOptions& o) {
    Timer timer;
    Checker c;
    const auto family = chsh_family();
    const int trials = 1000;
    int feasible_count = 0;
    int infeasible_count = 0;
    for (int t = 0; t < trials && c.ok; ++t) {
        const HVModel model = random_nosignaling_model(derive_seed(o.seed, 900000 + t));
        c.require(validate(model).ok(), "generated model invalid at t=" + std::to_string(t));
        c.require(is_nosignaling(model), "generated model signals at t=" + std::to_string(t));

        double max_s = -4.0;
        for (const WeightVector& w : family)
            max_s = std::max(max_s, bell_value(model, w));

        const MiRepresentation rep = find_mi_representation(model);
        c.require(!rep.ambiguous_marginals, "no-signaling model flagged ambiguous");
        if (rep.feasible) {
            ++feasible_count;
            c.require(max_s <= 2.0 + 1e-7,
                      "feasible model with CHSH " + std::to_string(max_s) + " at t=" +
                          std::to_string(t));
        } else {
            ++infeasible_count;
            c.require(max_s > 2.0 - 1e-7,
                      "infeasible model with CHSH " + std::to_string(max_s) + " at t=" +
                          std::to_string(t));
        }
        verify_representation_exactly(c, model, rep, t);
    }
    c.require(feasible_count > 0 && infeasible_count > 0,
              "trivial split: " + std::to_string(feasible_count) + " feasible / " +
                  std::to_string(infeasible_count) + " infeasible");
    std::ostringstream detail;
    detail << trials << " no-signaling models: " << feasible_count << " representable, "
           << infeasible_count << " not; equivalence with CHSH <= 2 held throughout";
    return finish(9, "fine-equivalence", c, timer, detail.str());
}

// ---------------------------------------------------------------------------
// 10. byte-exact round trips and chunking-independent sampling
// ---------------------------------------------------------------------------

CheckResult check_roundtrip_determinism(const SuiteOptions& o) {
    Timer timer;
    Checker c;
    const std::array<HVModel, 5> models{
        signaling_cmd_witness(1.0 / 16.0),
        brans_model(standard_brans_angles()),
        pr_box_model(),
        random_model(derive_seed(o.seed, 10), 0.03),
        random_cmd_model(derive_seed(o.seed, 11), 0.05),
    };
    for (std::size_t i = 0; i < models.size(); ++i) {
        const std::string text = model_to_json(models[i]);
        const HVModel parsed = model_from_json(text);
        c.require(model_to_json(parsed) == text,
                  "serialized text changed after a round trip (model " + std::to_string(i) + ")");
        bool bits_ok = true;
        for (int l = 0; l < kStrategyCount; ++l)
            bits_ok = bits_ok && bits_equal(parsed.reference.p[l], models[i].reference.p[l]);
        for (int f = 0; f < XiVector::flat_size(); ++f)
            bits_ok = bits_ok && bits_equal(parsed.xi.flat(f), models[i].xi.flat(f));
        c.require(bits_ok, "parsed doubles differ bitwise (model " + std::to_string(i) + ")");
    }

    const HVModel model = brans_model(standard_brans_angles());
    const std::uint64_t seed = derive_seed(o.seed, 12);
    const RunResult base = sample_run(model, kPairA1B2, 200000, seed, 1);
    for (unsigned chunks : {0u, 3u, 8u, 16u}) {
        const RunResult again = sample_run(model, kPairA1B2, 200000, seed, chunks);
        c.require(again.counts == base.counts,
                  "counts differ with chunks=" + std::to_string(chunks));
    }
    const RunResult other = sample_run(model, kPairA1B2, 200000, seed + 1, 1);
    c.require(other.counts != base.counts, "different seeds produced identical counts");

    return finish(10, "roundtrip-determinism", c, timer,
                  "5 models round-trip byte-exactly; counts identical for chunks in "
                  "{1,auto,3,8,16}");
}

} // namespace

HVModel random_nosignaling_model(std::uint64_t seed) {
    static const ConstraintMatrix nosignal = build_nosignal_matrix();
    std::uint64_t k = 0;
    auto next = [&]() { return counter_uniform01(seed, k++); };

    // Setting-independent product distribution q(lambda) on a dyadic grid:
    // a partition of 1024 per party, every weight >= 1/1024.
    auto dyadic_simplex4 = [&]() {
        std::array<int, 3> cuts{};
        for (int& cut : cuts)
            cut = static_cast<int>(next() * 1021.0); // 0..1020
        std::sort(cuts.begin(), cuts.end());
        const std::array<int, 4> parts{cuts[0] + 1, cuts[1] - cuts[0] + 1, cuts[2] - cuts[1] + 1,
                                       1020 - cuts[2] + 1};
        std::array<double, 4> p{};
        for (int i = 0; i < 4; ++i)
            p[i] = static_cast<double>(parts[i]) / 1024.0;
        return p;
    };
    const std::array<double, 4> qa = dyadic_simplex4();
    const std::array<double, 4> qb = dyadic_simplex4();
    Distribution product;
    for (int l = 0; l < kStrategyCount; ++l)
        product.p[l] = qa[l >> 2] * qb[l & 3];

    // Singlet-style component with dyadic cosines in [-1, 1], biased toward
    // the extremes so a healthy share of draws violates the CHSH system.
    std::array<double, 4> cosines{};
    for (double& value : cosines) {
        const double raw = 2.0 * next() - 1.0;
        value = snap_unit(std::copysign(std::sqrt(std::abs(raw)), raw), 12);
    }

    const double mu = snap_unit(0.75 * next(), 10); // product weight
    std::array<Distribution, 4> dists;
    for (int p = 0; p < 4; ++p) {
        const SettingPair sp = kAllPairs[p];
        for (int l = 0; l < kStrategyCount; ++l) {
            const int ab = outcome_at(l, sp.alice) * outcome_at(l, sp.bob);
            const double singlet = (1.0 - ab * cosines[p]) / 16.0;
            dists[p].p[l] = mu * product.p[l] + (1.0 - mu) * singlet;
        }
    }
    HVModel model = xi_from_distributions(dists[0], dists[1], dists[2], dists[3]);

    // Generic no-signaling deviation: random dyadic xi projected onto
    // ker(N), added with a dyadic scale small enough to keep positivity.
    XiVector raw;
    for (int i = 0; i < XiVector::flat_size(); ++i)
        raw.set_flat(i, snap_unit(2.0 * next() - 1.0, 14));
    const XiVector kernel_part = project_to_kernel(nosignal, raw).parallel;

    double cap = 1.0; // also bounds the deviation when nothing is negative
    for (int p = 0; p < 4; ++p) {
        const PairCode code = kAllPairs[p].code();
        const auto block = code == PairCode::a1b1
                               ? std::array<double, kStrategyCount>{}
                               : kernel_part.block(code);
        for (int l = 0; l < kStrategyCount; ++l)
            if (block[l] < 0.0)
                cap = std::min(cap, dists[p].p[l] / -block[l]);
    }
    const double scale = snap_down(0.5 * next() * cap, 20);
    for (int b = 0; b < 3; ++b)
        for (int l = 0; l < kStrategyCount; ++l)
            model.xi.blocks[b][l] += scale * kernel_part.blocks[b][l];
    return model;
}

std::vector<CheckResult> run_acceptance_suite(const SuiteOptions& options) {
    std::vector<CheckResult> results;
    results.push_back(check_kernel_dimensions(options));
    results.push_back(check_cmd_implies_bell(options));
    results.push_back(check_bell_implies_cmd(options));
    results.push_back(check_signaling_witness(options));
    results.push_back(check_brans(options));
    results.push_back(check_pr_box(options));
    results.push_back(check_gamma_vs_hall(options));
    results.push_back(check_hall_dominance(options));
    results.push_back(check_fine_equivalence(options));
    results.push_back(check_roundtrip_determinism(options));
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results)
        if (!r.passed)
            return false;
    return true;
}

std::string suite_to_json(const std::vector<CheckResult>& results, int indent) {
    nlohmann::json j = nlohmann::json::array();
    for (const CheckResult& r : results)
        j.push_back({{"id", r.id},
                     {"name", r.name},
                     {"passed", r.passed},
                     {"detail", r.detail},
                     {"millis", r.millis}});
    return j.dump(indent);
}

std::string format_check_line(const CheckResult& r) {
    std::ostringstream os;
    os << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << ": " << r.detail << " ("
       << r.millis << " ms)";
    return os.str();
}

} // namespace cmdbell
