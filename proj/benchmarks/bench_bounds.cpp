#include <benchmark/benchmark.h>

#include "lapspec/bounds.hpp"
#include "lapspec/numerics.hpp"

namespace {

lapspec::Graph host(int n) {
    double p = std::min(1.0, 8.0 / n);
    return lapspec::generate_erdos_renyi(n, p, 31337u + n);
}

std::vector<double> scaled_moments(const lapspec::Graph& g) {
    std::vector<double> out;
    for (const auto& r : lapspec::moments_structural(lapspec::full_census(g)).scaled())
        out.push_back(r.to_double());
    return out;
}

}  // namespace

static void BM_AlphaBisection(benchmark::State& state) {
    auto g = host(64);
    auto sc = scaled_moments(g);
    double cap = lapspec::bracket_cap(g);
    for (auto _ : state) {
        auto r = lapspec::alpha_bound(sc, 2, lapspec::kDefaultTol, cap);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_AlphaBisection);

static void BM_BetaBisection(benchmark::State& state) {
    auto g = host(64);
    auto sc = scaled_moments(g);
    double cap = lapspec::bracket_cap(g);
    for (auto _ : state) {
        auto r = lapspec::beta_bound(sc, 2, lapspec::kDefaultTol, cap);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_BetaBisection);

static void BM_BoundReport(benchmark::State& state) {
    auto g = host(int(state.range(0)));
    for (auto _ : state) {
        auto br = lapspec::bound_report(g, 2);
        benchmark::DoNotOptimize(br);
    }
}
BENCHMARK(BM_BoundReport)->Arg(32)->Arg(128)->Arg(512);

static void BM_JacobiEigenvalues(benchmark::State& state) {
    auto s = lapspec::SymMatrix::from_int(
        lapspec::laplacian_matrix(host(int(state.range(0)))));
    for (auto _ : state) {
        auto eig = lapspec::sym_eigenvalues(s);
        benchmark::DoNotOptimize(eig);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_JacobiEigenvalues)->RangeMultiplier(2)->Range(16, 128)->Complexity();

BENCHMARK_MAIN();
