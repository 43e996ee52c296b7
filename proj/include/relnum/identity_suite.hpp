#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace relnum {

struct IdentitySuiteParams {
    int trials = 200;
    int max_len = 6;        // sequence length bound
    long coeff_bound = 5;   // |entries| bound
    std::uint64_t seed = 1;
};

struct IdentityResult {
    std::string name;
    int trials = 0;
    int failures = 0;
    std::uint64_t first_failure_seed = 0;  // reproducing seed of the first failing trial
};

struct IdentitySuiteReport {
    IdentitySuiteParams params;
    std::vector<IdentityResult> results;
    bool all_pass() const {
        for (const auto& r : results)
            if (r.failures) return false;
        return true;
    }
};

/// Seed-deterministic randomized verification of the continuant/Chebyshev
/// identity kit; every check is an exact symbolic or exact-arithmetic equality.
IdentitySuiteReport run_identity_suite(const IdentitySuiteParams& params = {});

} // namespace relnum
