#include "aao/presets.hpp"
#include "aao/retro.hpp"

#include <benchmark/benchmark.h>

#include <numbers>
#include <vector>

using namespace aao;

static void BM_WrappedSum(benchmark::State& state) {
    const retro::AnsatzParams params(state.range(0) == 0 ? 0.01 : 1.0);
    const double tolerance = state.range(1) == 0 ? 1e-8 : (state.range(1) == 1 ? 1e-12 : 1e-15);
    for (auto _ : state) {
        benchmark::DoNotOptimize(retro::wrapped_sum(1.1, params, tolerance));
    }
}
BENCHMARK(BM_WrappedSum)->Args({0, 1})->Args({1, 0})->Args({1, 1})->Args({1, 2});

static void BM_OutcomeRatioGrid(benchmark::State& state) {
    const retro::AnsatzParams params(0.1);
    for (auto _ : state) {
        double acc = 0.0;
        for (int k = 0; k < 100; ++k) {
            acc += retro::outcome_ratio(2.0 * std::numbers::pi * k / 100.0, params);
        }
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * 100);
}
BENCHMARK(BM_OutcomeRatioGrid);

static void BM_BornScan(benchmark::State& state) {
    std::vector<double> thetas(100);
    for (int k = 0; k < 100; ++k) thetas[static_cast<std::size_t>(k)] = 0.0628 * k;
    const std::vector<double> gammas{0.1, 0.01};
    for (auto _ : state) {
        benchmark::DoNotOptimize(retro::born_limit_scan(thetas, gammas));
    }
}
BENCHMARK(BM_BornScan);

static void BM_ChshStandard(benchmark::State& state) {
    const auto [a, ap, b, bp] = presets::chsh_standard_angles();
    const retro::AnsatzParams params(1e-6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(retro::chsh_value(a, ap, b, bp, params));
    }
}
BENCHMARK(BM_ChshStandard);
