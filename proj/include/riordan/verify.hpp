#pragma once

#include <string>
#include <vector>

namespace riordan {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // empty on success, first mismatch otherwise
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    int failures() const;
    std::string render() const;  // one line per check plus a summary line
};

// "examples": every registry fixture recomputed and cross-validated across
// all applicable methods. "identities": polynomial-family and group-law
// property checks.
SuiteReport run_suite(const std::string& name);

std::vector<std::string> suite_names();

}  // namespace riordan
