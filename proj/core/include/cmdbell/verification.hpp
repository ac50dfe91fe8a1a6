#pragma once

#include "cmdbell/constraints.hpp"
#include "cmdbell/model.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cmdbell {

struct CheckResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double millis = 0.0;
};

/// Options exist for test-harness injection (e.g. feeding a tampered
/// constraint matrix to prove the checks can fail); defaults run the real
/// suite. Every check is deterministic given `seed`.
struct SuiteOptions {
    std::uint64_t seed = 0x5bd1e995u;
    const ConstraintMatrix* cmd_matrix_override = nullptr;
    const ConstraintMatrix* nosignal_matrix_override = nullptr;
};

/// Runs the ten self-verification checks: exact kernel dimensions, the two
/// directions of the bound-preservation theorem, the signaling witness, the
/// singlet-style and PR-box landmark models, the two bound comparisons, the
/// representability equivalence, and round-trip/determinism contracts.
std::vector<CheckResult> run_acceptance_suite(const SuiteOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

std::string suite_to_json(const std::vector<CheckResult>& results, int indent = 2);

/// One line per check: "[PASS] 3 bell-implies-cmd ... (12.3 ms)".
std::string format_check_line(const CheckResult& result);

/// Deterministic no-signaling model on a dyadic grid: a mix of a
/// setting-independent product distribution, a singlet-style family with
/// random cosines, and a kernel-projected random deviation. Dyadic entries
/// keep the exact-rational feasibility solve fast.
HVModel random_nosignaling_model(std::uint64_t seed);

} // namespace cmdbell
