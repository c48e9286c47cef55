#include "entsim/protocols.hpp"

#include <cmath>
#include <stdexcept>

#include "entsim/register.hpp"

namespace entsim {

namespace {

void check_qubit_normalized(const Qubit& q) {
    const double norm_sq = std::norm(q[0]) + std::norm(q[1]);
    if (std::abs(std::sqrt(norm_sq) - 1.0) > kNormTolerance) {
        throw std::invalid_argument("teleport: input qubit is not normalized");
    }
}

} // namespace

MaximallyEntangledState MaximallyEntangledState::from_rank(std::uint64_t rank) {
    if (rank < 1) throw std::invalid_argument("MaximallyEntangledState: rank must be >= 1");
    MaximallyEntangledState mes;
    mes.ebits = std::log2(static_cast<double>(rank));
    mes.rank = static_cast<double>(rank);
    return mes;
}

MaximallyEntangledState MaximallyEntangledState::from_ebits(double ebits) {
    if (ebits < 0.0) throw std::invalid_argument("MaximallyEntangledState: ebits must be >= 0");
    MaximallyEntangledState mes;
    mes.ebits = ebits;
    mes.rank = std::exp2(ebits);
    return mes;
}

BellExtraction extract_bell_pairs(const MaximallyEntangledState& mes) {
    const double whole = std::floor(mes.ebits);
    return {static_cast<std::uint64_t>(whole), mes.ebits - whole};
}

TeleportResult teleport(const Qubit& input, Rng& rng, Ledger& ledger) {
    check_qubit_normalized(input);

    // Qubit 0 carries the input; 1 is Alice's Bell half, 2 is Bob's.
    std::vector<std::complex<double>> amps(8, {0.0, 0.0});
    amps[0] = input[0];
    amps[1] = input[1];
    Register reg = Register::from_amplitudes(3, std::move(amps));
    reg.apply(gates::hadamard(), 1);
    reg.apply(gates::cnot(), 1, 2);

    // Bell measurement on Alice's side.
    reg.apply(gates::cnot(), 0, 1);
    reg.apply(gates::hadamard(), 0);
    const MeasurementResult phase = measure_qubit(reg, 0, rng);
    const MeasurementResult parity = measure_qubit(reg, 1, rng);

    // Bob's conditional corrections, keyed by the two transmitted bits.
    if (parity.outcome == 1) reg.apply(gates::pauli_x(), 2);
    if (phase.outcome == 1) reg.apply(gates::pauli_z(), 2);

    const std::size_t base =
        static_cast<std::size_t>(phase.outcome) | (static_cast<std::size_t>(parity.outcome) << 1);
    Qubit received{reg.amp(base), reg.amp(base | 4)};

    ledger.record({ledger.next_round(), Direction::AliceToBob, 2, 0});

    TeleportResult result;
    result.received = received;
    result.x_correction = parity.outcome;
    result.z_correction = phase.outcome;
    result.outcome.fidelity = fidelity(std::span<const std::complex<double>>(received),
                                       std::span<const std::complex<double>>(input));
    result.outcome.ebits_in = 1.0;
    result.outcome.ebits_out = 0.0;
    result.outcome.notes["branch"] =
        static_cast<double>(phase.outcome * 2 + parity.outcome);
    return result;
}

int superdense_send(int message, Ledger& ledger) {
    if (message < 0 || message > 3) {
        throw std::invalid_argument("superdense_send: message must be 2 bits");
    }

    // Shared Bell pair: qubit 0 with Alice, qubit 1 with Bob.
    Register reg(2);
    reg.apply(gates::hadamard(), 0);
    reg.apply(gates::cnot(), 0, 1);

    if (message & 1) reg.apply(gates::pauli_x(), 0);
    if (message & 2) reg.apply(gates::pauli_z(), 0);

    // Alice's half travels to Bob: one qubit, zero classical bits.
    ledger.record({ledger.next_round(), Direction::AliceToBob, 0, 1});

    // Bell measurement, now entirely on Bob's side.
    reg.apply(gates::cnot(), 0, 1);
    reg.apply(gates::hadamard(), 0);

    for (std::size_t idx = 0; idx < reg.dim(); ++idx) {
        if (std::norm(reg.amp(idx)) > 0.5) {
            const int x_bit = static_cast<int>(idx >> 1) & 1;
            const int z_bit = static_cast<int>(idx) & 1;
            return (z_bit << 1) | x_bit;
        }
    }
    throw std::logic_error("superdense_send: decoding produced no basis state");
}

ConcentrationResult concentrate(const WeightSectorState& ws, Rng& rng, Ledger& ledger) {
    const std::uint64_t bits_before = ledger.total_bits();

    // Invert the exact CDF of the sector distribution.
    const double u = rng.uniform();
    double cumulative = 0.0;
    std::uint64_t weight = ws.n();
    for (std::uint64_t k = 0; k <= ws.n(); ++k) {
        cumulative += ws.sector_prob(k);
        if (u < cumulative) {
            weight = k;
            break;
        }
    }

    ConcentrationResult result;
    result.weight = weight;
    result.state = MaximallyEntangledState::from_ebits(ws.log2_multiplicity(weight));
    result.outcome.fidelity = 1.0; // the post-measurement state is exactly maximally entangled
    result.outcome.ebits_in =
        static_cast<double>(ws.n()) * binary_entropy(ws.a() * ws.a());
    result.outcome.ebits_out = result.state.ebits;
    result.outcome.notes["weight"] = static_cast<double>(weight);

    if (ledger.total_bits() != bits_before) {
        throw std::logic_error("concentrate: classical communication recorded");
    }
    return result;
}

ProtocolOutcome dilute(double a, std::uint64_t n, std::uint64_t bell_budget, Ledger& ledger,
                       const DistanceModel& timing) {
    timing.validate();
    const WeightSectorState ws = expand_copies(a, n);
    const TypicalSubspace kept = typical_subspace_pow2(ws, bell_budget);

    ProtocolOutcome outcome;
    outcome.fidelity = kept.mass;
    outcome.ebits_in = static_cast<double>(bell_budget);
    outcome.ebits_out = static_cast<double>(n) * binary_entropy(a * a);
    outcome.notes["bell_budget"] = static_cast<double>(bell_budget);

    // Teleporting the compressed qubits costs 2 bits per Bell pair, batched
    // into a single message round.
    if (bell_budget > 0) {
        Ledger own;
        own.record({ledger.next_round(), Direction::AliceToBob, 2 * bell_budget, 0});
        ledger.record(own.events().front());
        outcome.notes["elapsed_seconds"] = elapsed_time(own, timing);
    } else {
        outcome.notes["elapsed_seconds"] = 0.0;
    }
    return outcome;
}

CycleReport reversibility_cycle(double a, std::uint64_t n, Rng& rng, Ledger& ledger) {
    CycleReport report;
    report.n = n;
    report.entropy = binary_entropy(a * a);

    if (report.entropy == 0.0) {
        report.degenerate = true; // product state: no entanglement to cycle
        return report;
    }

    const WeightSectorState ws = expand_copies(a, n);

    const std::uint64_t bits_before = ledger.total_bits();
    const ConcentrationResult conc = concentrate(ws, rng, ledger);
    report.concentration_bits = ledger.total_bits() - bits_before;
    report.measured_weight = conc.weight;
    report.sampled_yield = conc.outcome.ebits_out;
    report.expected_yield = expected_concentration_yield(ws);
    report.per_copy_shortfall = report.entropy - report.expected_yield / static_cast<double>(n);

    if (report.expected_yield >
        static_cast<double>(n) * report.entropy + 1e-9) {
        throw std::logic_error("reversibility_cycle: yield exceeds n*E");
    }

    const BellExtraction extracted = extract_bell_pairs(conc.state);
    report.bell_budget = extracted.whole_pairs;
    report.residual_ebits = extracted.residual_ebits;
    report.n_prime = static_cast<std::uint64_t>(std::floor(report.sampled_yield / report.entropy));

    if (report.n_prime > 0) {
        const DistanceModel timing{1000.0};
        const std::uint64_t dilution_before = ledger.total_bits();
        const ProtocolOutcome diluted =
            dilute(a, report.n_prime, report.bell_budget, ledger, timing);
        report.dilution_fidelity = diluted.fidelity;
        report.dilution_bits = ledger.total_bits() - dilution_before;
    } else {
        // Yield below one copy's worth: nothing to dilute back.
        report.dilution_fidelity = 1.0;
        report.dilution_bits = 0;
    }

    if (report.dilution_fidelity > 1.0 + 1e-12) {
        throw std::logic_error("reversibility_cycle: fidelity above 1");
    }
    return report;
}

} // namespace entsim
