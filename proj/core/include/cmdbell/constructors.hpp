#pragma once

#include "cmdbell/model.hpp"

#include <cstdint>

namespace cmdbell {

/// Angles (radians) between the analyzer directions of the four setting
/// pairs; the singlet-style construction yields E(Ai,Bj) = -cos(theta_ij).
struct BransAngles {
    double theta11, theta12, theta21, theta22;
};

/// A1 = 0, A2 = pi/2 against B1 = pi/4, B2 = 3pi/4: the angle set whose
/// best CHSH member reaches 2*sqrt(2).
BransAngles standard_brans_angles();

/// Uniform reference, xi = 0; the baseline setting-independent model.
HVModel uniform_mi_model();

/// Uniform reference with block(A1B2) = epsilon * a1(lambda): correlations
/// all stay at their reference values while Alice's A1 marginal shifts by
/// 16*epsilon between Bob's settings. Requires 0 <= epsilon <= 1/16 for
/// positivity.
HVModel signaling_cmd_witness(double epsilon);

/// For each pair, uniform over the 8 strategies with a_i*b_j = sigma_ij,
/// sigma = (+,+,+,-): correlations (1,1,1,-1), the algebraic CHSH maximum 4.
HVModel pr_box_model();

/// P(lambda|Ai,Bj) = (1 - a_i(lambda) b_j(lambda) cos(theta_ij)) / 16:
/// reproduces E = -cos(theta) with all marginals zero; the two bits not
/// involved in a pair are uniform.
HVModel brans_model(const BransAngles& angles);

/// Uniform reference plus a random xi projected onto ker(M), scaled so the
/// largest entry is at most `magnitude` and every probability stays
/// non-negative. Deterministic in (seed, magnitude).
HVModel random_cmd_model(std::uint64_t seed, double magnitude);

/// Uniform reference plus an unconstrained random xi (block sums zeroed),
/// same scaling rule. Deterministic in (seed, magnitude).
HVModel random_model(std::uint64_t seed, double magnitude);

} // namespace cmdbell
