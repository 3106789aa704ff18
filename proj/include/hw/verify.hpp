#pragma once

#include <string>

namespace hw {

struct VerifyResult {
    bool ok = false;
    std::string report;
};

/// Core verification suite: three-route equality for the full preset set at
/// weight n, degrees 0..D. The report is deterministic byte-for-byte for a
/// given (n, D), independent of the parallelism width. On the first mismatch
/// the report names the (preset, d, mu, nu) triple and both values.
VerifyResult verify_core(int n, int D = 3);

}  // namespace hw
