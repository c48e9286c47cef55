#include "cli/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <numbers>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "entsim/commsim.hpp"
#include "entsim/copies.hpp"
#include "entsim/protocols.hpp"
#include "entsim/rng.hpp"
#include "entsim/states.hpp"

namespace entsim::cli {

namespace {

using Row = nlohmann::ordered_json;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string render_csv(const std::vector<Row>& rows) {
    std::ostringstream out;
    if (rows.empty()) return out.str();
    bool first = true;
    for (const auto& item : rows.front().items()) {
        out << (first ? "" : ",") << item.key();
        first = false;
    }
    out << '\n';
    for (const auto& row : rows) {
        first = true;
        for (const auto& item : row.items()) {
            out << (first ? "" : ",");
            first = false;
            const auto& v = item.value();
            if (v.is_string()) {
                out << v.get<std::string>();
            } else if (v.is_number_float()) {
                out << format_double(v.get<double>());
            } else {
                out << v.dump();
            }
        }
        out << '\n';
    }
    return out.str();
}

std::string render(const std::vector<Row>& rows, OutputFormat format) {
    if (format == OutputFormat::Csv) return render_csv(rows);
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& row : rows) doc.push_back(row);
    return doc.dump(2) + "\n";
}

std::uint64_t resolve_budget(const Scenario& s, std::uint64_t n, std::size_t point = 0) {
    if (s.budget_list.size() > 1) return s.budget_list[point];
    if (s.budget_list.size() == 1) return s.budget_list.front();
    const double target = *s.rate * static_cast<double>(n) * binary_entropy(s.a2);
    return static_cast<std::uint64_t>(std::ceil(target));
}

DistanceModel timing_model(const Scenario& s) {
    const double distance = s.distances.empty() ? 1000.0 : s.distances.front();
    return DistanceModel{distance};
}

// Haar-uniform single-qubit state from two uniforms.
Qubit random_qubit(Rng& rng) {
    const double theta = std::acos(1.0 - 2.0 * rng.uniform());
    const double phi = 2.0 * std::numbers::pi * rng.uniform();
    return {std::cos(theta / 2.0),
            std::complex<double>(std::cos(phi), std::sin(phi)) * std::sin(theta / 2.0)};
}

Row run_entropy(const Scenario& s) {
    Row row;
    row["command"] = "entropy";
    row["a2"] = s.a2;
    row["seed"] = s.seed;
    row["entropy_ebits"] = entropy_of_entanglement(make_partial(std::sqrt(s.a2)));
    return row;
}

Row run_concentrate(const Scenario& s, std::uint64_t n, std::uint64_t seed, Ledger& ledger) {
    const WeightSectorState ws = expand_copies(std::sqrt(s.a2), n);
    Rng rng(seed);

    double total_yield = 0.0;
    for (std::uint64_t t = 0; t < s.trials; ++t) {
        total_yield += concentrate(ws, rng, ledger).outcome.ebits_out;
    }
    const double expected = expected_concentration_yield(ws);

    Row row;
    row["command"] = "concentrate";
    row["a2"] = s.a2;
    row["n"] = n;
    row["trials"] = s.trials;
    row["seed"] = seed;
    row["expected_yield_ebits"] = expected;
    row["expected_yield_per_copy"] = expected / static_cast<double>(n);
    row["mean_sampled_yield_per_copy"] =
        total_yield / static_cast<double>(s.trials) / static_cast<double>(n);
    row["classical_bits"] = ledger.total_bits();
    return row;
}

Row run_dilute(const Scenario& s, std::uint64_t n, std::uint64_t seed, Ledger& ledger,
               std::size_t point = 0) {
    const std::uint64_t budget = resolve_budget(s, n, point);
    const DistanceModel timing = timing_model(s);
    const ProtocolOutcome outcome = dilute(std::sqrt(s.a2), n, budget, ledger, timing);

    Row row;
    row["command"] = "dilute";
    row["a2"] = s.a2;
    row["n"] = n;
    row["budget"] = budget;
    row["rate"] = s.rate ? Row(*s.rate) : Row(nullptr);
    row["seed"] = seed;
    row["fidelity"] = outcome.fidelity;
    row["classical_bits"] = ledger.total_bits();
    row["rounds"] = ledger.total_rounds();
    row["distance_m"] = timing.distance_m;
    row["elapsed_seconds"] = outcome.notes.at("elapsed_seconds");
    return row;
}

Row run_teleport(const Scenario& s, std::uint64_t seed, Ledger& ledger) {
    Rng rng(seed);
    double mean_fidelity = 0.0;
    double min_fidelity = 1.0;
    std::uint64_t branch_counts[4] = {0, 0, 0, 0};
    for (std::uint64_t t = 0; t < s.trials; ++t) {
        const TeleportResult r = teleport(random_qubit(rng), rng, ledger);
        mean_fidelity += r.outcome.fidelity;
        min_fidelity = std::min(min_fidelity, r.outcome.fidelity);
        ++branch_counts[r.z_correction * 2 + r.x_correction];
    }
    mean_fidelity /= static_cast<double>(s.trials);

    Row row;
    row["command"] = "teleport";
    row["trials"] = s.trials;
    row["seed"] = seed;
    row["mean_fidelity"] = mean_fidelity;
    row["min_fidelity"] = min_fidelity;
    row["bits_per_run"] = 2;
    row["rounds_per_run"] = 1;
    row["branch_00"] = branch_counts[0];
    row["branch_01"] = branch_counts[1];
    row["branch_10"] = branch_counts[2];
    row["branch_11"] = branch_counts[3];
    return row;
}

std::vector<Row> run_dense(const Scenario& s, Ledger& ledger) {
    std::vector<Row> rows;
    for (int message = 0; message < 4; ++message) {
        Ledger one;
        const int decoded = superdense_send(message, one);
        for (const auto& event : one.events()) {
            ledger.record({ledger.next_round(), event.direction, event.classical_bits,
                           event.qubit_count});
        }
        Row row;
        row["command"] = "dense";
        row["seed"] = s.seed;
        row["message"] = message;
        row["decoded"] = decoded;
        row["ok"] = static_cast<int>(decoded == message);
        row["classical_bits"] = one.total_bits();
        row["qubit_count"] = one.total_qubits();
        rows.push_back(std::move(row));
    }
    return rows;
}

Row run_cycle(const Scenario& s, std::uint64_t n, std::uint64_t seed, Ledger& ledger) {
    Rng rng(seed);
    const CycleReport report = reversibility_cycle(std::sqrt(s.a2), n, rng, ledger);

    Row row;
    row["command"] = "cycle";
    row["a2"] = s.a2;
    row["n"] = n;
    row["seed"] = seed;
    row["degenerate"] = static_cast<int>(report.degenerate);
    row["entropy_ebits"] = report.entropy;
    row["measured_weight"] = report.measured_weight;
    row["sampled_yield"] = report.sampled_yield;
    row["expected_yield"] = report.expected_yield;
    row["bell_budget"] = report.bell_budget;
    row["residual_ebits"] = report.residual_ebits;
    row["n_prime"] = report.n_prime;
    row["dilution_fidelity"] = report.dilution_fidelity;
    row["concentration_bits"] = report.concentration_bits;
    row["dilution_bits"] = report.dilution_bits;
    row["per_copy_shortfall"] = report.per_copy_shortfall;
    return row;
}

Row sweep_point(const Scenario& s, std::size_t index) {
    const std::uint64_t n = s.n_list.size() > 1 ? s.n_list[index] : s.n_list.front();
    const std::uint64_t point_seed = Rng::derive_seed(s.seed, index);
    Ledger ledger;
    Row row;
    if (s.protocol == "concentrate") {
        row = run_concentrate(s, n, point_seed, ledger);
    } else if (s.protocol == "dilute") {
        row = run_dilute(s, n, point_seed, ledger, index);
    } else {
        row = run_cycle(s, n, point_seed, ledger);
    }
    Row out;
    out["command"] = "sweep";
    out["protocol"] = s.protocol;
    out["point_index"] = index;
    out["master_seed"] = s.seed;
    for (const auto& item : row.items()) {
        if (item.key() == "command") continue;
        out[item.key()] = item.value();
    }
    return out;
}

std::vector<Row> run_sweep(const Scenario& s) {
    // Points are independent; run them concurrently but emit in index order.
    std::vector<std::future<Row>> futures;
    futures.reserve(s.sweep_points());
    for (std::size_t i = 0; i < s.sweep_points(); ++i) {
        futures.push_back(std::async(std::launch::async, sweep_point, std::cref(s), i));
    }
    std::vector<Row> rows;
    rows.reserve(futures.size());
    for (auto& f : futures) rows.push_back(f.get());
    return rows;
}

Row run_compare_distance(const Scenario& s, Ledger& ledger) {
    Rng rng(s.seed);
    std::uint64_t n = 0;
    std::uint64_t budget = 0;
    if (s.protocol == "teleport") {
        teleport(random_qubit(rng), rng, ledger);
    } else if (s.protocol == "concentrate") {
        n = s.single_n();
        concentrate(expand_copies(std::sqrt(s.a2), n), rng, ledger);
    } else {
        n = s.single_n();
        budget = resolve_budget(s, n);
        dilute(std::sqrt(s.a2), n, budget, ledger, DistanceModel{s.distances.front()});
    }

    const DistanceComparison cmp = compare_distances(ledger, s.distances[0], s.distances[1]);

    Row row;
    row["command"] = "compare-distance";
    row["protocol"] = s.protocol;
    row["a2"] = s.a2;
    row["n"] = n;
    row["budget"] = budget;
    row["seed"] = s.seed;
    row["d1"] = s.distances[0];
    row["d2"] = s.distances[1];
    row["time_at_d1"] = cmp.time_first;
    row["time_at_d2"] = cmp.time_second;
    row["ratio"] = cmp.ratio;
    row["distance_independent"] = static_cast<int>(cmp.distance_independent);
    return row;
}

} // namespace

RunResult run(const Scenario& scenario) {
    scenario.validate();

    std::vector<Row> rows;
    Ledger ledger;
    switch (scenario.command) {
    case Command::Entropy:
        rows.push_back(run_entropy(scenario));
        break;
    case Command::Concentrate:
        rows.push_back(run_concentrate(scenario, scenario.single_n(), scenario.seed, ledger));
        break;
    case Command::Dilute:
        rows.push_back(run_dilute(scenario, scenario.single_n(), scenario.seed, ledger));
        break;
    case Command::Teleport:
        rows.push_back(run_teleport(scenario, scenario.seed, ledger));
        break;
    case Command::Dense:
        rows = run_dense(scenario, ledger);
        break;
    case Command::Cycle:
        rows.push_back(run_cycle(scenario, scenario.single_n(), scenario.seed, ledger));
        break;
    case Command::Sweep:
        rows = run_sweep(scenario);
        break;
    case Command::CompareDistance:
        rows.push_back(run_compare_distance(scenario, ledger));
        break;
    }

    RunResult result;
    result.output = render(rows, scenario.format);
    if (!scenario.transcript_path.empty()) {
        result.transcript = ledger.serialize();
    }
    return result;
}

} // namespace entsim::cli
