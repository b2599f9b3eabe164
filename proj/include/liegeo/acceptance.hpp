#pragma once

#include <string>
#include <vector>

namespace liegeo {

struct CriterionResult {
    CriterionResult() = default;
    CriterionResult(int id_, std::string name_) : id(id_), name(std::move(name_)) {}

    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    std::vector<std::string> info;  // informational lines, never asserted
};

// The full verification suite. All randomized checks run with seed 0.
std::vector<CriterionResult> run_acceptance_suite();

}  // namespace liegeo
