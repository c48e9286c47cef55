#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cli/runner.hpp"
#include "cli/scenario.hpp"

namespace {

using entsim::cli::Command;
using entsim::cli::Scenario;

struct Flags {
    Scenario scenario;
    std::string format = "csv";
    std::string scenario_file;
};

void add_common_options(CLI::App* cmd, Flags& flags) {
    cmd->add_option("--seed", flags.scenario.seed, "Master RNG seed");
    cmd->add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--transcript", flags.scenario.transcript_path,
                    "Write the ledger transcript to this file");
}

int run_and_print(const Scenario& scenario) {
    const entsim::cli::RunResult result = entsim::cli::run(scenario);
    std::cout << result.output;
    if (!scenario.transcript_path.empty()) {
        std::ofstream out(scenario.transcript_path);
        if (!out) {
            throw entsim::cli::UsageError("cannot write transcript file: " +
                                          scenario.transcript_path);
        }
        out << result.transcript;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bipartite entanglement manipulation simulator"};
    app.require_subcommand(0, 1);

    Flags flags;
    app.add_option("--scenario", flags.scenario_file,
                   "Run a JSON scenario file instead of a subcommand");

    auto* entropy = app.add_subcommand("entropy", "Entropy of entanglement of a|00> + b|11>");
    entropy->add_option("--a2", flags.scenario.a2, "Squared Schmidt amplitude a^2")->required();
    add_common_options(entropy, flags);

    auto* conc = app.add_subcommand("concentrate", "Collective concentration of n copies");
    conc->add_option("--a2", flags.scenario.a2)->required();
    conc->add_option("--n", flags.scenario.n_list, "Copy count")->required()->delimiter(',');
    conc->add_option("--trials", flags.scenario.trials, "Sampled runs");
    add_common_options(conc, flags);

    auto* dil = app.add_subcommand("dilute", "Dilution of m Bell pairs toward n copies");
    dil->add_option("--a2", flags.scenario.a2)->required();
    dil->add_option("--n", flags.scenario.n_list)->required()->delimiter(',');
    dil->add_option("--budget", flags.scenario.budget_list, "Bell budget m")->delimiter(',');
    dil->add_option("--rate", [&flags](const CLI::results_t& r) {
        flags.scenario.rate = std::stod(r.front());
        return true;
    }, "Budget as ceil(rate * n * E)");
    dil->add_option("--d", flags.scenario.distances, "Distance in meters")->delimiter(',');
    add_common_options(dil, flags);

    auto* tele = app.add_subcommand("teleport", "Teleport seeded random qubits");
    tele->add_option("--trials", flags.scenario.trials);
    add_common_options(tele, flags);

    auto* dense = app.add_subcommand("dense", "Superdense-code all four 2-bit messages");
    add_common_options(dense, flags);

    auto* cycle = app.add_subcommand("cycle", "Concentrate then dilute back");
    cycle->add_option("--a2", flags.scenario.a2)->required();
    cycle->add_option("--n", flags.scenario.n_list)->required()->delimiter(',');
    add_common_options(cycle, flags);

    auto* sweep = app.add_subcommand("sweep", "One row per --n point");
    sweep->add_option("protocol", flags.scenario.protocol, "concentrate, dilute, or cycle")
        ->required();
    sweep->add_option("--a2", flags.scenario.a2)->required();
    sweep->add_option("--n", flags.scenario.n_list)->required()->delimiter(',');
    sweep->add_option("--budget", flags.scenario.budget_list, "Bell budget points")
        ->delimiter(',');
    sweep->add_option("--rate", [&flags](const CLI::results_t& r) {
        flags.scenario.rate = std::stod(r.front());
        return true;
    });
    sweep->add_option("--trials", flags.scenario.trials);
    add_common_options(sweep, flags);

    auto* cmpd = app.add_subcommand("compare-distance", "Replay one ledger at two distances");
    cmpd->add_option("protocol", flags.scenario.protocol, "concentrate, dilute, or teleport")
        ->required();
    cmpd->add_option("--a2", flags.scenario.a2);
    cmpd->add_option("--n", flags.scenario.n_list)->delimiter(',');
    cmpd->add_option("--budget", flags.scenario.budget_list)->delimiter(',');
    cmpd->add_option("--rate", [&flags](const CLI::results_t& r) {
        flags.scenario.rate = std::stod(r.front());
        return true;
    });
    cmpd->add_option("--d", flags.scenario.distances, "Two distances in meters")
        ->required()
        ->delimiter(',');
    add_common_options(cmpd, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!flags.scenario_file.empty()) {
            if (app.get_subcommands().size() > 0) {
                throw entsim::cli::UsageError("--scenario excludes subcommands");
            }
            return run_and_print(entsim::cli::scenario_from_file(flags.scenario_file));
        }
        if (app.get_subcommands().empty()) {
            std::cerr << app.help();
            return 2;
        }

        CLI::App* chosen = app.get_subcommands().front();
        flags.scenario.command = entsim::cli::command_from_string(chosen->get_name());
        flags.scenario.format = entsim::cli::format_from_string(flags.format);
        return run_and_print(flags.scenario);
    } catch (const entsim::cli::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
