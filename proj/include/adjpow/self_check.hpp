#pragma once

#include <string>
#include <vector>

namespace adjpow {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // first discrepancy, empty on pass
};

struct CombinatoricsReport {
    int max_index = 0;
    bool pass = false;
    std::vector<CheckResult> checks;
};

// Every cross-formula identity between the derangement, Euler-table,
// higher-derangement, series and coefficient routes for indices up to
// max_index. Exact-division failures are caught and recorded as failed checks.
CombinatoricsReport verify_combinatorics(int max_index);

std::string report_to_json(const CombinatoricsReport& report);
std::string report_to_text(const CombinatoricsReport& report);

}  // namespace adjpow
