#pragma once

#include "normkit/types.hpp"

#include <string>
#include <vector>

namespace normkit::showcase {

struct Assertion {
    std::string name;
    bool passed;
    std::string detail;  // measured value, for the report
};

struct CaseResult {
    std::string id;
    std::vector<Assertion> assertions;
    bool all_passed() const;
};

/// End-to-end reproduction of one of the worked examples.
/// Valid ids: "6.1", "6.2.1", "6.2.2", "6.3".
CaseResult run_case(const std::string& id);

std::vector<CaseResult> run_all();

}  // namespace normkit::showcase
