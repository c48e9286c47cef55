#include <benchmark/benchmark.h>

#include <cmath>

#include "entsim/protocols.hpp"
#include "entsim/register.hpp"

using namespace entsim;

static void bm_hadamard(benchmark::State& state) {
    Register reg(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        reg.apply(gates::hadamard(), 0);
    }
    state.SetItemsProcessed(state.iterations() * (1ll << state.range(0)));
}
BENCHMARK(bm_hadamard)->DenseRange(8, 20, 4);

static void bm_cnot(benchmark::State& state) {
    Register reg(static_cast<int>(state.range(0)));
    reg.apply(gates::hadamard(), 0);
    for (auto _ : state) {
        reg.apply(gates::cnot(), 0, static_cast<int>(state.range(0)) - 1);
    }
}
BENCHMARK(bm_cnot)->DenseRange(8, 20, 4);

static void bm_teleport(benchmark::State& state) {
    Rng rng(7);
    for (auto _ : state) {
        Ledger ledger;
        benchmark::DoNotOptimize(teleport({std::sqrt(0.3), std::sqrt(0.7)}, rng, ledger));
    }
}
BENCHMARK(bm_teleport);

static void bm_concentrate(benchmark::State& state) {
    const auto ws = expand_copies(std::sqrt(0.3), static_cast<std::uint64_t>(state.range(0)));
    Rng rng(7);
    Ledger ledger;
    for (auto _ : state) {
        benchmark::DoNotOptimize(concentrate(ws, rng, ledger));
    }
}
BENCHMARK(bm_concentrate)->Range(1 << 6, 1 << 16);

static void bm_dilute(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    const DistanceModel timing{1000.0};
    for (auto _ : state) {
        Ledger ledger;
        benchmark::DoNotOptimize(dilute(std::sqrt(0.9), n, n / 2, ledger, timing));
    }
}
BENCHMARK(bm_dilute)->Range(1 << 6, 1 << 16);

BENCHMARK_MAIN();
