#include <benchmark/benchmark.h>

#include <cmath>

#include "entsim/copies.hpp"

using namespace entsim;

static void bm_expand_copies(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(expand_copies(std::sqrt(0.3), n));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_expand_copies)->Range(1 << 10, 1 << 19)->Arg(1000000)->Complexity(benchmark::oN);

static void bm_expected_yield(benchmark::State& state) {
    const auto ws = expand_copies(std::sqrt(0.3), static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(expected_concentration_yield(ws));
    }
}
BENCHMARK(bm_expected_yield)->Range(1 << 10, 1 << 19)->Arg(1000000);

static void bm_typical_subspace(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    const auto ws = expand_copies(std::sqrt(0.9), n);
    const std::uint64_t budget = static_cast<std::uint64_t>(
        std::ceil(1.2 * static_cast<double>(n) * 0.469));
    for (auto _ : state) {
        benchmark::DoNotOptimize(typical_subspace_pow2(ws, budget));
    }
}
BENCHMARK(bm_typical_subspace)->Range(1 << 10, 1 << 19)->Arg(1000000);

static void bm_log_binomial(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(log_binomial(1000000, 333333));
    }
}
BENCHMARK(bm_log_binomial);

BENCHMARK_MAIN();
