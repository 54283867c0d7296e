#pragma once

#include <string>
#include <vector>

namespace atrans {

enum class VerifyLevel { quick, full };

struct CheckResult {
    std::string name;
    std::string expected;
    std::string observed;
    bool pass = false;
    double millis = 0.0;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    int passed() const;
    int failed() const;
    bool all_pass() const { return failed() == 0; }
};

// Testing hook: deliberately corrupt a named internal formula so a failing
// run can be exercised end to end.
struct FaultInjection {
    bool corrupt_msis_bound = false;
};

// Replays the full battery of formula identities, construction measurements,
// randomized cross-checks and (at full level) the exhaustive sweeps.
// quick runs in seconds; full adds the n = 6 exhaustive searches.
VerificationReport run_verification(VerifyLevel level, const FaultInjection* faults = nullptr);

} // namespace atrans
