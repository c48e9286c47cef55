#pragma once

#include <string>

#include "cli/scenario.hpp"

namespace entsim::cli {

struct RunResult {
    std::string output;     // rendered table, csv or json
    std::string transcript; // serialized ledger lines; empty when none apply
};

// Executes a validated scenario. Deterministic: identical scenario and seed
// produce byte-identical output.
RunResult run(const Scenario& scenario);

} // namespace entsim::cli
