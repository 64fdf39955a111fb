#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hankel/report.hpp"

namespace hankel {

struct Range {
    long lo = 0, hi = 0;
};

// Sweep bounds for a claim run. Unset ranges fall back to each claim's
// published defaults; quick shrinks the defaults for smoke runs.
struct ClaimRanges {
    std::optional<Range> r, k, n, N;
    bool quick = false;
    unsigned threads = 0;
};

const std::vector<std::string>& claim_names();
bool has_claim(const std::string& name);

// Runs one named claim over the given ranges. Throws std::invalid_argument
// for unknown names.
VerificationReport run_claim(const std::string& name, const ClaimRanges& cfg);

}  // namespace hankel
