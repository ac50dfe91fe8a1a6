#pragma once

#include "cmdbell/model.hpp"
#include "cmdbell/prng.hpp"
#include "cmdbell/strategy.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace cmdbell {

/// Joint outcome counts of one measurement run. Cell order: ++, +-, -+, --
/// with Alice's outcome first.
struct RunResult {
    SettingPair pair = kPairA1B1;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::array<std::uint64_t, 4> counts{};

    static int cell(int alice_outcome, int bob_outcome) {
        return (alice_outcome < 0 ? 2 : 0) + (bob_outcome < 0 ? 1 : 0);
    }
};

/// Draws `shots` strategies i.i.d. from the pair's distribution and counts
/// joint outcomes. Each draw depends only on (seed, shot index), so the
/// counts are identical for every chunking; chunks > 1 runs chunks in
/// parallel, chunks == 0 picks a hardware-based count.
RunResult sample_run(const HVModel& model, SettingPair pair, std::uint64_t shots,
                     std::uint64_t seed, unsigned chunks = 0);

struct Estimate {
    double value = 0.0;
    double std_error = 0.0;
};

/// Correlation estimate sum(alpha*beta)/shots with standard error
/// sqrt((1 - est^2)/shots).
Estimate estimate_correlation(const RunResult& run);

/// Single-party expectation estimates from the same counts.
Estimate estimate_alice_marginal(const RunResult& run);
Estimate estimate_bob_marginal(const RunResult& run);

/// One marginal contrast (expectation units) with a 4-sigma radius.
struct SignalingEstimate {
    std::string setting; // "A1", "A2", "B1", "B2"
    double contrast = 0.0;
    double radius = 0.0;
};

/// Runs all four pairs (shots each, sub-seeded per pair) and estimates the
/// four marginal contrasts, matching cmdbell::marginal_contrasts.
std::array<SignalingEstimate, 4> estimate_signaling(const HVModel& model,
                                                    std::uint64_t shots_per_pair,
                                                    std::uint64_t seed);

std::string run_result_to_json(const RunResult& run, int indent = 2);

} // namespace cmdbell
