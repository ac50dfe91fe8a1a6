#pragma once

#include <cstdint>

namespace cmdbell {

/// Counter-based generator: the value at position `index` of the stream
/// identified by `seed` (splitmix64 evaluated at seed + (index+1)*gamma).
/// Stateless by construction, so any chunking or thread layout that covers
/// each index exactly once reproduces identical results.
inline std::uint64_t counter_value(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Uniform double in [0, 1) from the counter stream (53 random bits).
inline double counter_uniform01(std::uint64_t seed, std::uint64_t index) {
    return static_cast<double>(counter_value(seed, index) >> 11) * 0x1.0p-53;
}

/// Deterministic sub-stream seed (e.g. one stream per setting pair).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    return counter_value(seed ^ 0xD1B54A32D192ED03ULL, stream);
}

} // namespace cmdbell
