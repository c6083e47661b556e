#include "aao/ising.hpp"
#include "aao/knowledge.hpp"
#include "aao/presets.hpp"

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

using namespace aao;

namespace {

ising::SpinGraph ring(int n) {
    std::vector<ising::SiteId> sites;
    std::vector<std::pair<ising::SiteId, ising::SiteId>> edges;
    sites.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        sites.push_back(i);
        edges.emplace_back(i, i % n + 1);
    }
    return {std::move(sites), std::move(edges)};
}

} // namespace

static void BM_EnergyKernel(benchmark::State& state) {
    const auto graph = ring(static_cast<int>(state.range(0)));
    const ising::ConfigurationSpace space(graph, {});
    for (auto _ : state) {
        std::int64_t acc = 0;
        for (std::uint64_t i = 0; i < space.count(); ++i) acc += space.energy_at(i);
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(space.count()));
}
BENCHMARK(BM_EnergyKernel)->Arg(16)->Arg(20);

static void BM_PartitionFunctionFloat(benchmark::State& state) {
    const auto graph = ring(static_cast<int>(state.range(0)));
    const ising::InverseTemperature beta(0.31);
    ising::EnumerationOptions options;
    options.max_threads = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ising::partition_function(graph, beta, {}, options));
    }
}
BENCHMARK(BM_PartitionFunctionFloat)
    ->Args({16, 1})
    ->Args({20, 1})
    ->Args({20, 2})
    ->Args({22, 2});

static void BM_PartitionFunctionExact(benchmark::State& state) {
    const auto graph = ring(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ising::partition_function(graph, {}));
    }
}
BENCHMARK(BM_PartitionFunctionExact)->Arg(12)->Arg(16);

static void BM_JointDistributionFloat(benchmark::State& state) {
    const auto graph = ring(static_cast<int>(state.range(0)));
    const ising::InverseTemperature beta(0.31);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ising::joint_distribution(graph, beta));
    }
}
BENCHMARK(BM_JointDistributionFloat)->Arg(14)->Arg(18);

static void BM_Fig1Audit(benchmark::State& state) {
    const auto ensemble = presets::fig1_ensemble();
    for (auto _ : state) {
        benchmark::DoNotOptimize(knowledge::independence_audit(ensemble, {}));
    }
}
BENCHMARK(BM_Fig1Audit);

BENCHMARK_MAIN();
