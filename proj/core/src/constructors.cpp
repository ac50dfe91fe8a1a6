#include "cmdbell/constructors.hpp"

#include "cmdbell/constraints.hpp"
#include "cmdbell/prng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cmdbell {

namespace {

Distribution uniform_distribution() {
    Distribution d;
    d.p.fill(1.0 / 16.0);
    return d;
}

/// Scale xi so max |entry| <= magnitude and 1/16 + entry >= 0 everywhere.
/// Scaling (rather than clipping) preserves membership in any kernel.
XiVector scale_for_positivity(const XiVector& xi, double magnitude) {
    double max_abs = 0.0;
    double min_entry = 0.0;
    for (int i = 0; i < XiVector::flat_size(); ++i) {
        max_abs = std::max(max_abs, std::abs(xi.flat(i)));
        min_entry = std::min(min_entry, xi.flat(i));
    }
    if (max_abs == 0.0 || magnitude == 0.0)
        return XiVector{};
    double scale = magnitude / max_abs;
    if (min_entry < 0.0) {
        // Back off a hair so float rounding cannot push a probability
        // below zero.
        const double positivity_cap = (1.0 / 16.0) / (-min_entry) * (1.0 - 1e-12);
        scale = std::min(scale, positivity_cap);
    }
    XiVector scaled;
    for (int i = 0; i < XiVector::flat_size(); ++i)
        scaled.set_flat(i, scale * xi.flat(i));
    return scaled;
}

XiVector random_xi(std::uint64_t seed) {
    XiVector xi;
    for (int i = 0; i < XiVector::flat_size(); ++i)
        xi.set_flat(i, 2.0 * counter_uniform01(seed, static_cast<std::uint64_t>(i)) - 1.0);
    return xi;
}

} // namespace

BransAngles standard_brans_angles() {
    const double q = std::numbers::pi / 4.0;
    return BransAngles{q, 3.0 * q, q, q};
}

HVModel uniform_mi_model() {
    HVModel m;
    m.reference = uniform_distribution();
    return m;
}

HVModel signaling_cmd_witness(double epsilon) {
    if (!(epsilon >= 0.0) || epsilon > 1.0 / 16.0)
        throw ParameterError("witness epsilon must lie in [0, 1/16] = [0, 0.0625]; "
                             "above 1/16 the A1B2 distribution would go negative");
    HVModel m;
    m.reference = uniform_distribution();
    auto& block = m.xi.block(PairCode::a1b2);
    for (int l = 0; l < kStrategyCount; ++l)
        block[l] = epsilon * outcome_at(l, kA1);
    return m;
}

HVModel pr_box_model() {
    const std::array<int, 4> sigma{+1, +1, +1, -1}; // pair order A1B1..A2B2
    std::array<Distribution, 4> dists;
    for (int p = 0; p < 4; ++p) {
        const SettingPair sp = kAllPairs[p];
        for (int l = 0; l < kStrategyCount; ++l) {
            const int ab = outcome_at(l, sp.alice) * outcome_at(l, sp.bob);
            dists[p].p[l] = ab == sigma[p] ? 1.0 / 8.0 : 0.0;
        }
    }
    return xi_from_distributions(dists[0], dists[1], dists[2], dists[3]);
}

HVModel brans_model(const BransAngles& angles) {
    const std::array<double, 4> cosines{std::cos(angles.theta11), std::cos(angles.theta12),
                                        std::cos(angles.theta21), std::cos(angles.theta22)};
    std::array<Distribution, 4> dists;
    for (int p = 0; p < 4; ++p) {
        const SettingPair sp = kAllPairs[p];
        for (int l = 0; l < kStrategyCount; ++l) {
            const int ab = outcome_at(l, sp.alice) * outcome_at(l, sp.bob);
            dists[p].p[l] = (1.0 - ab * cosines[p]) / 16.0;
        }
    }
    return xi_from_distributions(dists[0], dists[1], dists[2], dists[3]);
}

HVModel random_cmd_model(std::uint64_t seed, double magnitude) {
    if (!(magnitude >= 0.0))
        throw ParameterError("magnitude must be non-negative");
    static const ConstraintMatrix cmd = build_cmd_matrix();
    const KernelSplit<double> split = project_to_kernel(cmd, random_xi(seed));
    HVModel m;
    m.reference = uniform_distribution();
    m.xi = scale_for_positivity(split.parallel, magnitude);
    return m;
}

HVModel random_model(std::uint64_t seed, double magnitude) {
    if (!(magnitude >= 0.0))
        throw ParameterError("magnitude must be non-negative");
    XiVector xi = random_xi(seed);
    for (auto& block : xi.blocks) {
        double mean = 0.0;
        for (double v : block)
            mean += v;
        mean /= kStrategyCount;
        for (double& v : block)
            v -= mean;
    }
    HVModel m;
    m.reference = uniform_distribution();
    m.xi = scale_for_positivity(xi, magnitude);
    return m;
}

} // namespace cmdbell
