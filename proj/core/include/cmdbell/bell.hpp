#pragma once

#include "cmdbell/constraints.hpp"
#include "cmdbell/model.hpp"
#include "cmdbell/strategy.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace cmdbell {

/// Weights of a correlation inequality sum(w_ij E(Ai,Bj)) <= bound.
struct WeightVector {
    double w11, w12, w21, w22;
    double bound;

    double weight(PairCode c) const {
        switch (c) {
        case PairCode::a1b1: return w11;
        case PairCode::a1b2: return w12;
        case PairCode::a2b1: return w21;
        default: return w22;
        }
    }

    friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

/// The eight CHSH-family members: all +-1 sign patterns with product -1,
/// each with classical bound 2. The restriction of the family to
/// (w12, w21, w22) runs over every sign pattern in {+-1}^3.
inline std::array<WeightVector, 8> chsh_family() {
    std::array<WeightVector, 8> family{};
    int k = 0;
    for (int s12 : {+1, -1})
        for (int s21 : {+1, -1})
            for (int s22 : {+1, -1}) {
                const int s11 = -s12 * s21 * s22;
                family[k++] = WeightVector{static_cast<double>(s11), static_cast<double>(s12),
                                           static_cast<double>(s21), static_cast<double>(s22),
                                           2.0};
            }
    return family;
}

/// E(X,Y) under the pair's own distribution; always in [-1, 1].
template <typename T>
T correlation(const BasicHVModel<T>& m, SettingPair pair) {
    const BasicDistribution<T> d = distribution_for(m, pair);
    T sum{};
    for (int l = 0; l < kStrategyCount; ++l) {
        const int ab = outcome_at(l, pair.alice) * outcome_at(l, pair.bob);
        if (ab > 0)
            sum += d.p[l];
        else
            sum -= d.p[l];
    }
    return sum;
}

/// Outcomes of `measured` settings averaged over the distribution of
/// `dist`; reduces to correlation() when the two pairs coincide.
template <typename T>
T generalized_correlation(const BasicHVModel<T>& m, SettingPair measured, SettingPair dist) {
    const BasicDistribution<T> d = distribution_for(m, dist);
    T sum{};
    for (int l = 0; l < kStrategyCount; ++l) {
        const int ab = outcome_at(l, measured.alice) * outcome_at(l, measured.bob);
        if (ab > 0)
            sum += d.p[l];
        else
            sum -= d.p[l];
    }
    return sum;
}

/// Single-party expectation of `setting` under `pair`'s distribution.
template <typename T>
T local_expectation(const BasicHVModel<T>& m, Setting setting, SettingPair pair) {
    const BasicDistribution<T> d = distribution_for(m, pair);
    T sum{};
    for (int l = 0; l < kStrategyCount; ++l) {
        if (outcome_at(l, setting) > 0)
            sum += d.p[l];
        else
            sum -= d.p[l];
    }
    return sum;
}

/// P(outcome | setting, pair) = (1 + outcome * local expectation) / 2.
template <typename T>
T marginal_probability(const BasicHVModel<T>& m, Setting setting, int outcome_sign,
                       SettingPair pair) {
    if (outcome_sign != 1 && outcome_sign != -1)
        throw ParameterError("outcome must be +1 or -1");
    const T e = local_expectation(m, setting, pair);
    return (T(1) + (outcome_sign > 0 ? e : T(-e))) / T(2);
}

template <typename T>
T bell_value(const BasicHVModel<T>& m, const WeightVector& w) {
    T sum{};
    for (const SettingPair& sp : kAllPairs)
        sum += T(w.weight(sp.code())) * correlation(m, sp);
    return sum;
}

/// The three correlation-row dot products of xi, in block order
/// A1B2, A2B1, A2B2. Component (i,j) is sum_lambda a_i b_j xi_(AiBj).
template <typename T>
std::array<T, 3> correlation_shifts(const BasicXiVector<T>& xi) {
    std::array<T, 3> shifts{};
    for (int b = 0; b < 3; ++b) {
        const SettingPair sp = kNonReferencePairs[b];
        const auto& block = xi.blocks[b];
        T sum{};
        for (int l = 0; l < kStrategyCount; ++l) {
            if (outcome_at(l, sp.alice) * outcome_at(l, sp.bob) > 0)
                sum += block[l];
            else
                sum -= block[l];
        }
        shifts[b] = sum;
    }
    return shifts;
}

/// Additive shift of a Bell expression from the xi deviations:
/// gamma = w12*shift(A1B2) + w21*shift(A2B1) + w22*shift(A2B2). For every
/// model, bell_value(model, w) = bell_value(reference-only model, w) + gamma.
template <typename T>
T gamma(const BasicXiVector<T>& xi, const WeightVector& w) {
    const std::array<T, 3> s = correlation_shifts(xi);
    return T(w.w12) * s[0] + T(w.w21) * s[1] + T(w.w22) * s[2];
}

/// Maximum of gamma over the CHSH family: the family realizes every sign
/// pattern on the three shifts, so the maximum is the L1 norm of the
/// shifts. Unchanged when xi is replaced by its row-space part.
template <typename T>
T gamma_max(const BasicXiVector<T>& xi) {
    const std::array<T, 3> s = correlation_shifts(xi);
    T sum{};
    for (const T& v : s)
        sum += detail::abs_value(v);
    return sum;
}

template <typename T>
struct HallMeasure {
    T measure; // largest L1 distance between two setting pairs' xi blocks
    T bound;   // min(2 + 3*measure, 4)
};

/// Supremum over all ordered pairs of setting pairs (reference included,
/// with a zero block) of the L1 distance between their xi blocks.
template <typename T>
HallMeasure<T> hall_measure(const BasicXiVector<T>& xi) {
    std::array<std::array<T, kStrategyCount>, 4> blocks{};
    for (const SettingPair& sp : kAllPairs)
        blocks[static_cast<int>(sp.code())] = xi.block_or_zero(sp.code());

    T best{};
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            T dist{};
            for (int l = 0; l < kStrategyCount; ++l)
                dist += detail::abs_value(T(blocks[i][l] - blocks[j][l]));
            if (dist > best)
                best = dist;
        }
    }
    const T linear = T(2) + T(3) * best;
    return HallMeasure<T>{best, linear < T(4) ? linear : T(4)};
}

/// Full per-model report over the CHSH family.
struct BellReport {
    struct Member {
        WeightVector weights;
        double bell_value;
        double gamma;
    };
    std::array<Member, 8> members{};
    double max_bell_value = 0.0;
    double gamma_max = 0.0;
    double hall_measure = 0.0;
    double hall_bound = 0.0;
};

BellReport make_bell_report(const HVModel& m);
std::string bell_report_to_json(const BellReport& report, int indent = 2);

} // namespace cmdbell
