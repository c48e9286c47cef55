#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <string>

#include "entsim/commsim.hpp"
#include "entsim/copies.hpp"
#include "entsim/rng.hpp"
#include "entsim/states.hpp"

namespace entsim {

struct ProtocolOutcome {
    double fidelity = 1.0;
    double ebits_in = 0.0;
    double ebits_out = 0.0;
    std::map<std::string, double> notes;
};

// Maximally entangled state of Schmidt rank D: D equal coefficients carrying
// log2(D) ebits. `ebits` is primary; `rank` saturates to +inf once C(n,k)
// outgrows double range.
struct MaximallyEntangledState {
    double ebits = 0.0;
    double rank = 1.0;

    static MaximallyEntangledState from_rank(std::uint64_t rank);
    static MaximallyEntangledState from_ebits(double ebits);
};

struct BellExtraction {
    std::uint64_t whole_pairs; // floor(log2 rank), extractable deterministically
    double residual_ebits;     // log2(rank) - whole_pairs, in [0, 1)
};

BellExtraction extract_bell_pairs(const MaximallyEntangledState& mes);

using Qubit = std::array<std::complex<double>, 2>;

struct TeleportResult {
    ProtocolOutcome outcome;
    Qubit received;
    int x_correction; // parity bit from the Bell measurement
    int z_correction; // phase bit from the Bell measurement
};

// Circuit-level teleportation of one qubit through a Bell pair. Consumes one
// ebit and logs exactly one 2-bit Alice->Bob event.
TeleportResult teleport(const Qubit& input, Rng& rng, Ledger& ledger);

// Superdense coding of a 2-bit message (bit 1 selects Z, bit 0 selects X).
// Logs one transmitted qubit and zero classical bits; returns the decoded
// message.
int superdense_send(int message, Ledger& ledger);

struct ConcentrationResult {
    ProtocolOutcome outcome;
    MaximallyEntangledState state;
    std::uint64_t weight; // measured Hamming weight k
};

// Collective concentration: measures the total Hamming weight across the n
// copies, leaving a maximally entangled state of rank C(n,k). Needs no
// classical communication; the ledger is asserted unchanged.
ConcentrationResult concentrate(const WeightSectorState& ws, Rng& rng, Ledger& ledger);

// Dilution of `bell_budget` Bell pairs toward n copies of a|00> + b|11>:
// compress locally onto the best 2^bell_budget-dimensional subspace, teleport
// the compressed qubits, decompress. Compression is the only lossy step, so
// the fidelity equals the retained typical-subspace mass. Logs one round of
// 2*bell_budget classical bits.
ProtocolOutcome dilute(double a, std::uint64_t n, std::uint64_t bell_budget, Ledger& ledger,
                       const DistanceModel& timing);

struct CycleReport {
    bool degenerate = false; // E = 0: nothing to concentrate, cycle undefined
    std::uint64_t n = 0;
    double entropy = 0.0;            // E per copy
    std::uint64_t measured_weight = 0;
    double sampled_yield = 0.0;      // log2 C(n,k) for the measured k
    double expected_yield = 0.0;     // exact average over the sector distribution
    std::uint64_t bell_budget = 0;   // floor(sampled_yield)
    double residual_ebits = 0.0;
    std::uint64_t n_prime = 0;       // floor(sampled_yield / E) copies diluted back
    double dilution_fidelity = 1.0;
    std::uint64_t concentration_bits = 0; // always 0, asserted
    std::uint64_t dilution_bits = 0;      // 2 * bell_budget
    double per_copy_shortfall = 0.0;      // E - expected_yield / n, >= 0
};

// Concentrate n copies, convert the yield to whole Bell pairs, dilute those
// back toward fresh copies of the same state. Shortfall shrinks as n grows.
CycleReport reversibility_cycle(double a, std::uint64_t n, Rng& rng, Ledger& ledger);

} // namespace entsim
