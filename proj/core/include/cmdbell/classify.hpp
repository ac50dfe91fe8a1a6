#pragma once

#include "cmdbell/constraints.hpp"
#include "cmdbell/model.hpp"
#include "cmdbell/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cmdbell {

/// Case labels from joint kernel membership of xi:
///   ker(M) and ker(N)      -> S1  (an equivalent setting-independent model exists)
///   ker(M), not ker(N)     -> S2-without-MI  (correlations concealed, marginals signal)
///   neither                -> S3  (Bell bound increases, marginals signal)
///   not ker(M), ker(N)     -> S4  (Bell bound increases, no observable signaling)
enum class CaseLabel { s1, s2_without_mi, s3, s4 };

std::string to_string(CaseLabel label);

struct Classification {
    bool in_ker_m = false;
    bool in_ker_n = false;
    CaseLabel label = CaseLabel::s1;
    double residual_m = 0.0; // max |row . xi| over the CMD matrix
    double residual_n = 0.0; // max |row . xi| over the no-signaling matrix
};

/// Kernel membership decided by residual max-magnitude <= tol.
Classification classify(const HVModel& model, double tol = 1e-9);

std::string classification_to_json(const Classification& c, int indent = 2);

/// Four marginal contrasts in expectation units: how much each party's
/// local expectation moves when the remote setting flips.
struct MarginalContrasts {
    double alice_a1 = 0.0; // E_{A1B2}(A1) - E_{A1B1}(A1)
    double alice_a2 = 0.0; // E_{A2B2}(A2) - E_{A2B1}(A2)
    double bob_b1 = 0.0;   // E_{A2B1}(B1) - E_{A1B1}(B1)
    double bob_b2 = 0.0;   // E_{A2B2}(B2) - E_{A1B2}(B2)

    double max_abs() const;
};

MarginalContrasts marginal_contrasts(const HVModel& model);

/// True iff every marginal contrast vanishes within tol. Agrees with
/// membership of xi in ker(N) for valid models.
bool is_nosignaling(const HVModel& model, double tol = 1e-9);

/// Outcome of the search for a single setting-independent distribution
/// over the 16 strategies reproducing the model's four correlations and
/// four local expectations.
struct MiRepresentation {
    bool feasible = false;
    /// Exact witness distribution when feasible.
    std::optional<BasicDistribution<Rational>> distribution;
    /// Farkas certificate (9 entries: normalization, A1, A2, B1, B2,
    /// A1B1, A1B2, A2B1, A2B2 rows) when infeasible.
    std::vector<Rational> certificate;
    Rational infeasibility;
    /// Set when the model signals: local expectations then depend on the
    /// remote setting, and the targets below were taken from the pair
    /// keeping the remote party at its reference setting.
    bool ambiguous_marginals = false;
    /// The matched targets: E(A1), E(A2), E(B1), E(B2), then the four
    /// correlations in pair order.
    std::array<Rational, 8> targets{};

    Distribution distribution_as_double() const;
};

MiRepresentation find_mi_representation(const HVModel& model);
MiRepresentation find_mi_representation(const BasicHVModel<Rational>& model);

} // namespace cmdbell
