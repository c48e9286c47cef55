#include "entsim/commsim.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace entsim {

void Ledger::record(const ChannelEvent& event) {
    if (event.classical_bits == 0 && event.qubit_count == 0) {
        throw std::invalid_argument("Ledger: event carries no traffic");
    }
    if (!events_.empty() && event.round < events_.back().round) {
        throw std::invalid_argument("Ledger: round index must be non-decreasing");
    }
    events_.push_back(event);
}

std::uint64_t Ledger::next_round() const {
    return events_.empty() ? 0 : events_.back().round + 1;
}

std::uint64_t Ledger::total_bits() const {
    std::uint64_t total = 0;
    for (const auto& e : events_) total += e.classical_bits;
    return total;
}

std::uint64_t Ledger::total_qubits() const {
    std::uint64_t total = 0;
    for (const auto& e : events_) total += e.qubit_count;
    return total;
}

std::uint64_t Ledger::total_rounds() const {
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < events_.size(); ++i) {
        if (i == 0 || events_[i].round != events_[i - 1].round) ++count;
    }
    return count;
}

std::string Ledger::serialize() const {
    std::ostringstream out;
    for (const auto& e : events_) {
        out << e.round << ' ' << (e.direction == Direction::AliceToBob ? "A->B" : "B->A") << ' '
            << e.classical_bits << ' ' << e.qubit_count << '\n';
    }
    return out.str();
}

void DistanceModel::validate() const {
    if (!(distance_m > 0.0)) {
        throw std::invalid_argument("DistanceModel: distance must be positive");
    }
    if (!(signal_speed_mps > 0.0)) {
        throw std::invalid_argument("DistanceModel: signal speed must be positive");
    }
    if (!(bandwidth_bps > 0.0)) {
        throw std::invalid_argument("DistanceModel: bandwidth must be positive or unbounded");
    }
}

double elapsed_time(const Ledger& ledger, const DistanceModel& model) {
    model.validate();
    const double latency = static_cast<double>(ledger.total_rounds()) *
                           (model.distance_m / model.signal_speed_mps);
    const double transfer = std::isinf(model.bandwidth_bps)
                                ? 0.0
                                : static_cast<double>(ledger.total_bits()) / model.bandwidth_bps;
    return latency + transfer;
}

DistanceComparison compare_distances(const Ledger& ledger, double d1, double d2,
                                     double signal_speed_mps, double bandwidth_bps) {
    const DistanceModel first{d1, signal_speed_mps, bandwidth_bps};
    const DistanceModel second{d2, signal_speed_mps, bandwidth_bps};
    DistanceComparison cmp;
    cmp.time_first = elapsed_time(ledger, first);
    cmp.time_second = elapsed_time(ledger, second);
    cmp.distance_independent = ledger.total_rounds() == 0;
    cmp.ratio = cmp.distance_independent ? 1.0 : cmp.time_second / cmp.time_first;
    return cmp;
}

} // namespace entsim
