#include <benchmark/benchmark.h>

#include "lapspec/int_matrix.hpp"
#include "lapspec/moments.hpp"
#include "lapspec/walks.hpp"

namespace {

lapspec::Graph host(int n) {
    double p = std::min(1.0, 8.0 / n);
    return lapspec::generate_erdos_renyi(n, p, 40316u + n);
}

}  // namespace

static void BM_MomentsStructural(benchmark::State& state) {
    auto census = lapspec::full_census(host(int(state.range(0))));
    for (auto _ : state) {
        auto ms = lapspec::moments_structural(census);
        benchmark::DoNotOptimize(ms);
    }
}
BENCHMARK(BM_MomentsStructural)->Arg(64)->Arg(512);

static void BM_MomentsTrace(benchmark::State& state) {
    auto L = lapspec::laplacian_matrix(host(int(state.range(0))));
    for (auto _ : state) {
        auto ms = lapspec::moments_trace(L, 5);
        benchmark::DoNotOptimize(ms);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MomentsTrace)->RangeMultiplier(2)->Range(16, 128)->Complexity();

static void BM_WalkClassSums(benchmark::State& state) {
    auto lg = lapspec::laplacian_graph(
        lapspec::generate_erdos_renyi(12, 0.5, 7u));
    const int k = int(state.range(0));
    for (auto _ : state) {
        auto sums = lapspec::walk_class_sums(lg, k);
        benchmark::DoNotOptimize(sums);
    }
}
BENCHMARK(BM_WalkClassSums)->Arg(4)->Arg(5);
