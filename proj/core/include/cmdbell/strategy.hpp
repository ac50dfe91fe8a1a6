#pragma once

#include "cmdbell/errors.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace cmdbell {

enum class Party : std::uint8_t { alice, bob };

/// One of the four measurement settings: A1, A2 (Alice), B1, B2 (Bob).
struct Setting {
    Party party;
    int index; // 1 or 2

    friend constexpr bool operator==(const Setting&, const Setting&) = default;
};

inline constexpr Setting kA1{Party::alice, 1};
inline constexpr Setting kA2{Party::alice, 2};
inline constexpr Setting kB1{Party::bob, 1};
inline constexpr Setting kB2{Party::bob, 2};

inline constexpr std::array<Setting, 4> kAllSettings{kA1, kA2, kB1, kB2};

/// Joint setting choice (X, Y). (A1, B1) is the designated reference pair:
/// the xi decomposition measures every other pair's distribution against it.
enum class PairCode : int { a1b1 = 0, a1b2 = 1, a2b1 = 2, a2b2 = 3 };

struct SettingPair {
    Setting alice;
    Setting bob;

    constexpr PairCode code() const {
        return static_cast<PairCode>((alice.index - 1) * 2 + (bob.index - 1));
    }

    static constexpr SettingPair from_code(PairCode c) {
        const int i = static_cast<int>(c);
        return SettingPair{Setting{Party::alice, i / 2 + 1}, Setting{Party::bob, i % 2 + 1}};
    }

    constexpr bool is_reference() const { return code() == PairCode::a1b1; }

    friend constexpr bool operator==(const SettingPair&, const SettingPair&) = default;
};

inline constexpr SettingPair kPairA1B1{kA1, kB1};
inline constexpr SettingPair kPairA1B2{kA1, kB2};
inline constexpr SettingPair kPairA2B1{kA2, kB1};
inline constexpr SettingPair kPairA2B2{kA2, kB2};

inline constexpr std::array<SettingPair, 4> kAllPairs{kPairA1B1, kPairA1B2, kPairA2B1,
                                                      kPairA2B2};

/// The three pairs other than the reference, in block order A1B2, A2B1, A2B2.
/// This order fixes the layout of every 48-entry vector in the library:
/// entry 16*block + lambda.
inline constexpr std::array<SettingPair, 3> kNonReferencePairs{kPairA1B2, kPairA2B1,
                                                               kPairA2B2};

/// Block slot (0..2) of a non-reference pair; throws for the reference pair.
inline int block_index(PairCode c) {
    if (c == PairCode::a1b1)
        throw ParameterError("the reference pair A1B1 has no xi block");
    return static_cast<int>(c) - 1;
}

/// A deterministic local strategy: one fixed +-1 outcome per setting.
/// Sixteen exist; they are the hidden-variable states of every model here.
struct Strategy {
    int a1, a2, b1, b2; // each +1 or -1

    /// index = 8*u(a1) + 4*u(a2) + 2*u(b1) + u(b2) with u(+1)=0, u(-1)=1.
    /// The encoding is a bijection onto 0..15 and fixes serialization order.
    constexpr int index() const {
        auto u = [](int s) { return s == 1 ? 0 : 1; };
        return 8 * u(a1) + 4 * u(a2) + 2 * u(b1) + u(b2);
    }

    static constexpr Strategy from_index(int index) {
        auto bit = [index](int mask) { return (index & mask) ? -1 : +1; };
        return Strategy{bit(8), bit(4), bit(2), bit(1)};
    }

    friend constexpr bool operator==(const Strategy&, const Strategy&) = default;
};

inline constexpr int kStrategyCount = 16;

/// The outcome the strategy assigns to one setting.
constexpr int outcome(const Strategy& s, Setting x) {
    if (x.party == Party::alice)
        return x.index == 1 ? s.a1 : s.a2;
    return x.index == 1 ? s.b1 : s.b2;
}

/// outcome(strategy(lambda), setting) for lambda = 0..15.
inline int outcome_at(int lambda, Setting x) { return outcome(Strategy::from_index(lambda), x); }

inline std::string to_string(Setting s) {
    return (s.party == Party::alice ? "A" : "B") + std::to_string(s.index);
}

inline std::string to_string(PairCode c) {
    const SettingPair p = SettingPair::from_code(c);
    return to_string(p.alice) + to_string(p.bob);
}

inline std::string to_string(const SettingPair& p) { return to_string(p.code()); }

inline Setting setting_from_string(const std::string& name) {
    for (const Setting& s : kAllSettings)
        if (to_string(s) == name)
            return s;
    throw ParseError("unknown setting '" + name + "' (expected A1, A2, B1 or B2)");
}

inline SettingPair pair_from_string(const std::string& name) {
    for (const SettingPair& p : kAllPairs)
        if (to_string(p) == name)
            return p;
    throw ParseError("unknown setting pair '" + name +
                     "' (expected A1B1, A1B2, A2B1 or A2B2)");
}

} // namespace cmdbell
