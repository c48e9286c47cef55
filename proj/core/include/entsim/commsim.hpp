#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace entsim {

enum class Direction { AliceToBob, BobToAlice };

struct ChannelEvent {
    std::uint64_t round = 0;
    Direction direction = Direction::AliceToBob;
    std::uint64_t classical_bits = 0;
    std::uint64_t qubit_count = 0;
};

// Append-only record of channel use during a protocol run. Classical bits and
// transmitted qubits are counted separately so classical-cost claims are never
// contaminated by qubit traffic.
class Ledger {
  public:
    // Throws if the round index decreases or the event carries no traffic.
    void record(const ChannelEvent& event);

    // Round index for the next message batch: last recorded round + 1.
    std::uint64_t next_round() const;

    std::uint64_t total_bits() const;
    std::uint64_t total_qubits() const;
    std::uint64_t total_rounds() const; // number of distinct round indices

    const std::vector<ChannelEvent>& events() const { return events_; }
    bool empty() const { return events_.empty(); }

    // One event per line: round, direction, classical_bits, qubit_count.
    std::string serialize() const;

  private:
    std::vector<ChannelEvent> events_;
};

inline constexpr double kFiberSignalSpeed = 2.0e8; // m/s
inline constexpr double kUnboundedBandwidth = std::numeric_limits<double>::infinity();

// Rounds carry latency (one distance/signal_speed trip each); bits carry
// bandwidth cost. With unbounded bandwidth the elapsed time is purely the
// round-trip latency, linear in distance.
struct DistanceModel {
    double distance_m;
    double signal_speed_mps = kFiberSignalSpeed;
    double bandwidth_bps = kUnboundedBandwidth;

    void validate() const;
};

double elapsed_time(const Ledger& ledger, const DistanceModel& model);

struct DistanceComparison {
    double time_first;
    double time_second;
    double ratio;              // 1 when the run is distance-independent
    bool distance_independent; // no rounds recorded: elapsed 0 at every distance
};

// Replays one ledger under two models that differ only in distance.
DistanceComparison compare_distances(const Ledger& ledger, double d1, double d2,
                                     double signal_speed_mps = kFiberSignalSpeed,
                                     double bandwidth_bps = kUnboundedBandwidth);

} // namespace entsim
