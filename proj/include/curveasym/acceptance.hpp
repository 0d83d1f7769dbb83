#pragma once

#include <string>
#include <vector>

namespace curveasym {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// Run the full verification suite (nine criteria). Each result carries a
/// one-line detail string suitable for console output.
std::vector<CriterionResult> run_acceptance();

bool all_passed(const std::vector<CriterionResult>& results);

} // namespace curveasym
