#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace entsim::cli {

// Documented defaults: bare invocations are reproducible.
inline constexpr std::uint64_t kDefaultSeed = 20240601;
inline constexpr std::uint64_t kDefaultTrials = 1000;

enum class Command {
    Entropy,
    Concentrate,
    Dilute,
    Teleport,
    Dense,
    Cycle,
    Sweep,
    CompareDistance,
};

enum class OutputFormat { Csv, Json };

// Invalid parameters: reported on stderr, exit status 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Scenario {
    Command command = Command::Entropy;
    std::string protocol;                  // sweep / compare-distance target
    double a2 = 0.5;                       // squared Schmidt amplitude, as the formulas consume it
    std::vector<std::uint64_t> n_list;     // copy counts; one entry except for sweep
    std::vector<std::uint64_t> budget_list; // Bell budgets m; sweep dilute may list several
    std::optional<double> rate;            // budget = ceil(rate * n * E) when no budget given
    std::uint64_t trials = kDefaultTrials;
    std::uint64_t seed = kDefaultSeed;
    std::vector<double> distances;         // meters
    OutputFormat format = OutputFormat::Csv;
    std::string transcript_path;           // empty: no transcript

    std::uint64_t single_n() const; // the one copy count; throws UsageError otherwise
    std::size_t sweep_points() const;
    void validate() const; // throws UsageError
};

Command command_from_string(const std::string& name);
std::string to_string(Command command);

OutputFormat format_from_string(const std::string& name);

// Structured scenario file: a JSON object mirroring the CLI flags.
Scenario scenario_from_file(const std::string& path);

} // namespace entsim::cli
