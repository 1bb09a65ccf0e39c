#include <benchmark/benchmark.h>

#include "lapspec/census.hpp"
#include "lapspec/graph.hpp"

// Census costs are dominated by the rooted cycle enumeration, so the host
// graphs keep a constant average degree while n grows.

namespace {

lapspec::Graph host(int n) {
    double p = std::min(1.0, 8.0 / n);
    return lapspec::generate_erdos_renyi(n, p, 20240u + n);
}

}  // namespace

static void BM_PowerSums(benchmark::State& state) {
    auto g = host(int(state.range(0)));
    for (auto _ : state) {
        auto s = lapspec::power_sums(g, 5);
        benchmark::DoNotOptimize(s);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PowerSums)->RangeMultiplier(4)->Range(16, 1024)->Complexity(benchmark::oN);

static void BM_CycleCensus(benchmark::State& state) {
    auto g = host(int(state.range(0)));
    for (auto _ : state) {
        auto cc = lapspec::cycle_census(g);
        benchmark::DoNotOptimize(cc);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CycleCensus)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

static void BM_FullCensus(benchmark::State& state) {
    auto g = host(int(state.range(0)));
    for (auto _ : state) {
        auto c = lapspec::full_census(g);
        benchmark::DoNotOptimize(c);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FullCensus)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

static void BM_CensusDense(benchmark::State& state) {
    // worst case: complete graph, every node closes every short cycle
    auto g = lapspec::generate_complete(int(state.range(0)));
    for (auto _ : state) {
        auto c = lapspec::full_census(g);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_CensusDense)->Arg(8)->Arg(16)->Arg(32);
