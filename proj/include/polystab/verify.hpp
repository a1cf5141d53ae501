// Built-in verification of the dimension-10 family against the published
// reference dataset. Shared by the `verify-paper` CLI subcommand and the
// acceptance suite.
#pragma once

#include <string>
#include <vector>

namespace polystab {

struct CheckLine {
    std::string name;
    bool pass = false;
    bool informational = false;  // supplementary evidence, not a criterion
    std::string detail;
};

struct ReferenceRun {
    std::vector<CheckLine> lines;
    int failures() const;
};

ReferenceRun run_reference_checks();

}  // namespace polystab
