#pragma once

#include <cstdint>
#include <random>

namespace entsim {

// Deterministic 64-bit-seeded random source. The raw mt19937_64 stream is
// pinned by the C++ standard and the [0,1) mapping below avoids
// std::uniform_real_distribution, so an identical seed yields an identical
// protocol transcript on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53 bits of precision.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Seed for an independent stream, e.g. one sweep point per index.
    static std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
        std::uint64_t z = master + (index + 1) * 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

  private:
    std::mt19937_64 engine_;
};

} // namespace entsim
