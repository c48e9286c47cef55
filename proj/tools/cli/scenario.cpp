#include "cli/scenario.hpp"

#include <fstream>

#include <json.hpp>

namespace entsim::cli {

namespace {

bool needs_copy_count(Command command, const std::string& protocol) {
    switch (command) {
    case Command::Concentrate:
    case Command::Dilute:
    case Command::Cycle:
    case Command::Sweep:
        return true;
    case Command::CompareDistance:
        return protocol != "teleport";
    default:
        return false;
    }
}

} // namespace

std::uint64_t Scenario::single_n() const {
    if (n_list.size() != 1) {
        throw UsageError("expected exactly one --n value for this command");
    }
    return n_list.front();
}

std::size_t Scenario::sweep_points() const { return std::max(n_list.size(), budget_list.size()); }

void Scenario::validate() const {
    if (a2 < 0.0 || a2 > 1.0) {
        throw UsageError("--a2 must lie in [0, 1]");
    }
    if (trials < 1) {
        throw UsageError("--trials must be at least 1");
    }
    for (double d : distances) {
        if (!(d > 0.0)) throw UsageError("--d distances must be positive");
    }
    if (rate && !(*rate > 0.0)) {
        throw UsageError("--rate must be positive");
    }

    if (needs_copy_count(command, protocol)) {
        if (n_list.empty()) throw UsageError("this command needs --n");
        for (std::uint64_t n : n_list) {
            if (n < 1) throw UsageError("--n values must be at least 1");
        }
    }

    const bool needs_budget =
        command == Command::Dilute ||
        ((command == Command::Sweep || command == Command::CompareDistance) &&
         protocol == "dilute");
    if (needs_budget && budget_list.empty() && !rate) {
        throw UsageError("dilute needs --budget or --rate");
    }
    if (command != Command::Sweep && budget_list.size() > 1) {
        throw UsageError("only sweep accepts multiple --budget values");
    }

    switch (command) {
    case Command::Sweep:
        if (protocol != "concentrate" && protocol != "dilute" && protocol != "cycle") {
            throw UsageError("sweep protocol must be concentrate, dilute, or cycle");
        }
        if (!transcript_path.empty()) {
            throw UsageError("--transcript is not supported for sweep");
        }
        if (n_list.size() > 1 && budget_list.size() > 1) {
            throw UsageError("sweep varies --n or --budget, not both");
        }
        if (budget_list.size() > 1 && protocol != "dilute") {
            throw UsageError("budget sweeps apply to dilute only");
        }
        break;
    case Command::CompareDistance:
        if (protocol != "concentrate" && protocol != "dilute" && protocol != "teleport") {
            throw UsageError("compare-distance protocol must be concentrate, dilute, or teleport");
        }
        if (distances.size() != 2) {
            throw UsageError("compare-distance needs exactly two --d distances");
        }
        break;
    default:
        break;
    }
}

Command command_from_string(const std::string& name) {
    if (name == "entropy") return Command::Entropy;
    if (name == "concentrate") return Command::Concentrate;
    if (name == "dilute") return Command::Dilute;
    if (name == "teleport") return Command::Teleport;
    if (name == "dense") return Command::Dense;
    if (name == "cycle") return Command::Cycle;
    if (name == "sweep") return Command::Sweep;
    if (name == "compare-distance") return Command::CompareDistance;
    throw UsageError("unknown command: " + name);
}

std::string to_string(Command command) {
    switch (command) {
    case Command::Entropy: return "entropy";
    case Command::Concentrate: return "concentrate";
    case Command::Dilute: return "dilute";
    case Command::Teleport: return "teleport";
    case Command::Dense: return "dense";
    case Command::Cycle: return "cycle";
    case Command::Sweep: return "sweep";
    case Command::CompareDistance: return "compare-distance";
    }
    throw UsageError("unknown command");
}

OutputFormat format_from_string(const std::string& name) {
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    throw UsageError("--format must be csv or json");
}

Scenario scenario_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open scenario file: " + path);

    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("scenario file is not valid JSON: ") + e.what());
    }

    Scenario s;
    try {
        s.command = command_from_string(doc.at("command").get<std::string>());
        if (doc.contains("protocol")) s.protocol = doc["protocol"].get<std::string>();
        if (doc.contains("a2")) s.a2 = doc["a2"].get<double>();
        if (doc.contains("n")) {
            if (doc["n"].is_array()) {
                s.n_list = doc["n"].get<std::vector<std::uint64_t>>();
            } else {
                s.n_list = {doc["n"].get<std::uint64_t>()};
            }
        }
        if (doc.contains("budget")) {
            if (doc["budget"].is_array()) {
                s.budget_list = doc["budget"].get<std::vector<std::uint64_t>>();
            } else {
                s.budget_list = {doc["budget"].get<std::uint64_t>()};
            }
        }
        if (doc.contains("rate")) s.rate = doc["rate"].get<double>();
        if (doc.contains("trials")) s.trials = doc["trials"].get<std::uint64_t>();
        if (doc.contains("seed")) s.seed = doc["seed"].get<std::uint64_t>();
        if (doc.contains("d")) s.distances = doc["d"].get<std::vector<double>>();
        if (doc.contains("format")) s.format = format_from_string(doc["format"].get<std::string>());
        if (doc.contains("transcript")) s.transcript_path = doc["transcript"].get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("bad scenario field: ") + e.what());
    }
    return s;
}

} // namespace entsim::cli
