#pragma once

#include "cmdbell/errors.hpp"
#include "cmdbell/strategy.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

namespace cmdbell {

/// Numeric-mode policy. Float mode compares sums up to 1e-12; exact mode
/// (rationals) compares exactly. Positivity is exact in both modes.
template <typename T>
struct numeric_mode {
    static constexpr bool is_float = std::is_floating_point_v<T>;

    static bool finite(const T& x) {
        if constexpr (is_float)
            return std::isfinite(x);
        else {
            (void)x;
            return true;
        }
    }

    static bool sum_matches(const T& sum, const T& target) {
        if constexpr (is_float)
            return std::abs(sum - target) <= 1e-12;
        else
            return sum == target;
    }
};

/// Probability distribution over the 16 deterministic strategies,
/// indexed by Strategy::index().
template <typename T>
struct BasicDistribution {
    std::array<T, kStrategyCount> p{};

    T sum() const {
        T s{};
        for (const T& v : p)
            s += v;
        return s;
    }

    friend bool operator==(const BasicDistribution&, const BasicDistribution&) = default;
};

/// Per-pair deviation from the reference distribution: one 16-entry block
/// for each non-reference pair (order A1B2, A2B1, A2B2), each summing to 0.
/// The reference pair's block is identically zero and not stored.
template <typename T>
struct BasicXiVector {
    std::array<std::array<T, kStrategyCount>, 3> blocks{};

    std::array<T, kStrategyCount>& block(PairCode c) { return blocks[block_index(c)]; }
    const std::array<T, kStrategyCount>& block(PairCode c) const {
        return blocks[block_index(c)];
    }

    /// Block for any pair; the reference pair yields all zeros.
    std::array<T, kStrategyCount> block_or_zero(PairCode c) const {
        if (c == PairCode::a1b1)
            return std::array<T, kStrategyCount>{};
        return blocks[block_index(c)];
    }

    /// Flat 48-vector view, entry 16*block + lambda.
    T flat(int i) const { return blocks[i / kStrategyCount][i % kStrategyCount]; }
    void set_flat(int i, const T& v) { blocks[i / kStrategyCount][i % kStrategyCount] = v; }

    static constexpr int flat_size() { return 3 * kStrategyCount; }

    bool is_zero() const {
        for (const auto& b : blocks)
            for (const T& v : b)
                if (!(v == T{}))
                    return false;
        return true;
    }

    friend bool operator==(const BasicXiVector&, const BasicXiVector&) = default;
};

/// Hidden-variable model: reference distribution P(lambda|A1,B1) plus the
/// xi deviations. Valid iff the reference is a distribution, every block
/// sums to zero, and every induced distribution stays non-negative.
template <typename T>
struct BasicHVModel {
    BasicDistribution<T> reference;
    BasicXiVector<T> xi;

    friend bool operator==(const BasicHVModel&, const BasicHVModel&) = default;
};

using Distribution = BasicDistribution<double>;
using XiVector = BasicXiVector<double>;
using HVModel = BasicHVModel<double>;

enum class ViolationKind {
    non_finite_value,
    negative_probability,
    reference_sum,
    block_sum,
};

struct Violation {
    ViolationKind kind;
    PairCode pair; // pair/block involved; a1b1 for reference issues
    int lambda;    // strategy index, -1 for sum violations
    double value;  // offending entry or sum

    std::string describe() const {
        std::ostringstream os;
        switch (kind) {
        case ViolationKind::non_finite_value:
            os << "non-finite value in block " << to_string(pair) << " at lambda=" << lambda;
            break;
        case ViolationKind::negative_probability:
            os << "negative probability " << value << " for pair " << to_string(pair)
               << " at lambda=" << lambda;
            break;
        case ViolationKind::reference_sum:
            os << "reference distribution sums to " << value << ", expected 1";
            break;
        case ViolationKind::block_sum:
            os << "xi block " << to_string(pair) << " sums to " << value << ", expected 0";
            break;
        }
        return os.str();
    }
};

struct ValidityReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }

    std::string summary() const {
        if (ok())
            return "valid";
        std::string s;
        for (const Violation& v : violations) {
            if (!s.empty())
                s += "; ";
            s += v.describe();
        }
        return s;
    }
};

/// Lists every violated constraint; empty report iff the model is valid.
template <typename T>
ValidityReport validate(const BasicHVModel<T>& m) {
    using mode = numeric_mode<T>;
    ValidityReport report;

    bool all_finite = true;
    for (int l = 0; l < kStrategyCount; ++l) {
        if (!mode::finite(m.reference.p[l])) {
            report.violations.push_back(
                {ViolationKind::non_finite_value, PairCode::a1b1, l, 0.0});
            all_finite = false;
        }
    }
    for (const SettingPair& sp : kNonReferencePairs) {
        const auto& b = m.xi.block(sp.code());
        for (int l = 0; l < kStrategyCount; ++l) {
            if (!mode::finite(b[l])) {
                report.violations.push_back({ViolationKind::non_finite_value, sp.code(), l, 0.0});
                all_finite = false;
            }
        }
    }
    if (!all_finite)
        return report; // sums would be meaningless

    const T ref_sum = m.reference.sum();
    if (!mode::sum_matches(ref_sum, T(1)))
        report.violations.push_back(
            {ViolationKind::reference_sum, PairCode::a1b1, -1, static_cast<double>(ref_sum)});
    for (int l = 0; l < kStrategyCount; ++l)
        if (m.reference.p[l] < T{})
            report.violations.push_back({ViolationKind::negative_probability, PairCode::a1b1, l,
                                         static_cast<double>(m.reference.p[l])});

    for (const SettingPair& sp : kNonReferencePairs) {
        const auto& b = m.xi.block(sp.code());
        T block_sum{};
        for (const T& v : b)
            block_sum += v;
        if (!mode::sum_matches(block_sum, T{}))
            report.violations.push_back(
                {ViolationKind::block_sum, sp.code(), -1, static_cast<double>(block_sum)});
        for (int l = 0; l < kStrategyCount; ++l) {
            const T induced = m.reference.p[l] + b[l];
            if (induced < T{})
                report.violations.push_back({ViolationKind::negative_probability, sp.code(), l,
                                             static_cast<double>(induced)});
        }
    }
    return report;
}

/// P(lambda|X,Y): the reference distribution shifted by the pair's block.
/// Throws ModelError naming the offending (pair, lambda) if the result is
/// not a distribution.
template <typename T>
BasicDistribution<T> distribution_for(const BasicHVModel<T>& m, SettingPair pair) {
    using mode = numeric_mode<T>;
    BasicDistribution<T> d = m.reference;
    if (!pair.is_reference()) {
        const auto& b = m.xi.block(pair.code());
        for (int l = 0; l < kStrategyCount; ++l)
            d.p[l] += b[l];
    }
    for (int l = 0; l < kStrategyCount; ++l) {
        if (!mode::finite(d.p[l]))
            throw ModelError("non-finite probability for pair " + to_string(pair) +
                             " at lambda=" + std::to_string(l));
        if (d.p[l] < T{})
            throw ModelError("positivity violation for pair " + to_string(pair) +
                             " at lambda=" + std::to_string(l) +
                             " (p=" + std::to_string(static_cast<double>(d.p[l])) + ")");
    }
    if (!mode::sum_matches(d.sum(), T(1)))
        throw ModelError("distribution for pair " + to_string(pair) + " sums to " +
                         std::to_string(static_cast<double>(d.sum())) + ", expected 1");
    return d;
}

/// Inverse of distribution_for over all four pairs: reference = d11,
/// blocks = d_xy - d11. Round-trips exactly in rational mode.
template <typename T>
BasicHVModel<T> xi_from_distributions(const BasicDistribution<T>& d11,
                                      const BasicDistribution<T>& d12,
                                      const BasicDistribution<T>& d21,
                                      const BasicDistribution<T>& d22) {
    using mode = numeric_mode<T>;
    const std::array<const BasicDistribution<T>*, 4> all{&d11, &d12, &d21, &d22};
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (int l = 0; l < kStrategyCount; ++l) {
            if (!mode::finite(all[i]->p[l]))
                throw ModelError("non-finite probability in distribution for pair " +
                                 to_string(kAllPairs[i]));
            if (all[i]->p[l] < T{})
                throw ModelError("negative probability in distribution for pair " +
                                 to_string(kAllPairs[i]) + " at lambda=" + std::to_string(l));
        }
        if (!mode::sum_matches(all[i]->sum(), T(1)))
            throw ModelError("distribution for pair " + to_string(kAllPairs[i]) + " sums to " +
                             std::to_string(static_cast<double>(all[i]->sum())) +
                             ", expected 1");
    }
    BasicHVModel<T> m;
    m.reference = d11;
    for (const SettingPair& sp : kNonReferencePairs) {
        const BasicDistribution<T>& d = *all[static_cast<int>(sp.code())];
        auto& b = m.xi.block(sp.code());
        for (int l = 0; l < kStrategyCount; ++l)
            b[l] = d.p[l] - d11.p[l];
    }
    return m;
}

/// Model with the same reference and xi = 0; the Bell value of a model
/// splits as reference-model value plus gamma.
template <typename T>
BasicHVModel<T> reference_only(const BasicHVModel<T>& m) {
    BasicHVModel<T> r;
    r.reference = m.reference;
    return r;
}

} // namespace cmdbell
