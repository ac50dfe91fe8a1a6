#include "cmdbell/sampler.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>
#include <vector>

namespace cmdbell {

namespace {

std::array<std::uint64_t, 4> count_range(const std::array<double, kStrategyCount>& cdf,
                                         const std::array<int, kStrategyCount>& cells,
                                         std::uint64_t seed, std::uint64_t begin,
                                         std::uint64_t end) {
    std::array<std::uint64_t, 4> counts{};
    for (std::uint64_t i = begin; i < end; ++i) {
        const double r = counter_uniform01(seed, i);
        int k = 0;
        while (k < kStrategyCount - 1 && r >= cdf[k])
            ++k;
        ++counts[cells[k]];
    }
    return counts;
}

} // namespace

RunResult sample_run(const HVModel& model, SettingPair pair, std::uint64_t shots,
                     std::uint64_t seed, unsigned chunks) {
    if (shots == 0)
        throw ParameterError("shots must be at least 1");
    const Distribution d = distribution_for(model, pair);

    std::array<double, kStrategyCount> cdf{};
    double acc = 0.0;
    for (int l = 0; l < kStrategyCount; ++l) {
        acc += d.p[l];
        cdf[l] = acc;
    }
    cdf[kStrategyCount - 1] = 1.0; // guard against rounding at the top

    std::array<int, kStrategyCount> cells{};
    for (int l = 0; l < kStrategyCount; ++l)
        cells[l] = RunResult::cell(outcome_at(l, pair.alice), outcome_at(l, pair.bob));

    if (chunks == 0) {
        const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
        chunks = static_cast<unsigned>(std::min<std::uint64_t>(hw, 1 + shots / 65536));
    }
    chunks = static_cast<unsigned>(std::min<std::uint64_t>(chunks, shots));

    RunResult result;
    result.pair = pair;
    result.shots = shots;
    result.seed = seed;

    if (chunks <= 1) {
        result.counts = count_range(cdf, cells, seed, 0, shots);
        return result;
    }

    // Fixed chunking by shot index; each draw depends only on its index,
    // so the merged counts match a sequential pass exactly.
    std::vector<std::future<std::array<std::uint64_t, 4>>> parts;
    const std::uint64_t per = shots / chunks;
    std::uint64_t begin = 0;
    for (unsigned c = 0; c < chunks; ++c) {
        const std::uint64_t end = (c + 1 == chunks) ? shots : begin + per;
        parts.push_back(std::async(std::launch::async, count_range, std::cref(cdf),
                                   std::cref(cells), seed, begin, end));
        begin = end;
    }
    for (auto& part : parts) {
        const auto counts = part.get();
        for (int k = 0; k < 4; ++k)
            result.counts[k] += counts[k];
    }
    return result;
}

Estimate estimate_correlation(const RunResult& run) {
    const double n = static_cast<double>(run.shots);
    const double est = (static_cast<double>(run.counts[0]) + run.counts[3] -
                        static_cast<double>(run.counts[1]) - run.counts[2]) /
                       n;
    const double variance = std::max(0.0, 1.0 - est * est);
    return Estimate{est, std::sqrt(variance / n)};
}

namespace {

Estimate marginal_estimate(const RunResult& run, bool alice) {
    const double n = static_cast<double>(run.shots);
    double plus;
    if (alice)
        plus = static_cast<double>(run.counts[0] + run.counts[1]);
    else
        plus = static_cast<double>(run.counts[0] + run.counts[2]);
    const double est = (2.0 * plus - n) / n;
    const double variance = std::max(0.0, 1.0 - est * est);
    return Estimate{est, std::sqrt(variance / n)};
}

} // namespace

Estimate estimate_alice_marginal(const RunResult& run) { return marginal_estimate(run, true); }

Estimate estimate_bob_marginal(const RunResult& run) { return marginal_estimate(run, false); }

std::array<SignalingEstimate, 4> estimate_signaling(const HVModel& model,
                                                    std::uint64_t shots_per_pair,
                                                    std::uint64_t seed) {
    std::array<RunResult, 4> runs;
    for (int p = 0; p < 4; ++p)
        runs[p] = sample_run(model, kAllPairs[p], shots_per_pair,
                             derive_seed(seed, static_cast<std::uint64_t>(p)));

    const auto a11 = estimate_alice_marginal(runs[0]);
    const auto a12 = estimate_alice_marginal(runs[1]);
    const auto a21 = estimate_alice_marginal(runs[2]);
    const auto a22 = estimate_alice_marginal(runs[3]);
    const auto b11 = estimate_bob_marginal(runs[0]);
    const auto b12 = estimate_bob_marginal(runs[1]);
    const auto b21 = estimate_bob_marginal(runs[2]);
    const auto b22 = estimate_bob_marginal(runs[3]);

    auto contrast = [](const Estimate& x, const Estimate& y, const char* name) {
        const double radius =
            4.0 * std::sqrt(x.std_error * x.std_error + y.std_error * y.std_error);
        return SignalingEstimate{name, x.value - y.value, radius};
    };
    return {
        contrast(a12, a11, "A1"), // Alice A1 across Bob's settings
        contrast(a22, a21, "A2"),
        contrast(b21, b11, "B1"), // Bob B1 across Alice's settings
        contrast(b22, b12, "B2"),
    };
}

std::string run_result_to_json(const RunResult& run, int indent) {
    nlohmann::json j;
    j["pair"] = to_string(run.pair);
    j["shots"] = run.shots;
    j["seed"] = run.seed;
    j["counts"] = {{"++", run.counts[0]},
                   {"+-", run.counts[1]},
                   {"-+", run.counts[2]},
                   {"--", run.counts[3]}};
    return j.dump(indent);
}

} // namespace cmdbell
