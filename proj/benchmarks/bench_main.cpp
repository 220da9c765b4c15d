#include <benchmark/benchmark.h>

#include "imh/approx_reductions.hpp"
#include "imh/classic_paths.hpp"
#include "imh/im_hardness.hpp"
#include "imh/solvers.hpp"
#include "imh/verify.hpp"

using namespace imh;

static void MaxClique(benchmark::State& state) {
    const Graph g = gen_random(static_cast<std::size_t>(state.range(0)), 0.5, 42);
    for (auto _ : state)
        benchmark::DoNotOptimize(max_clique(g).value);
}
BENCHMARK(MaxClique)->Arg(40)->Arg(80)->Arg(120)->Unit(benchmark::kMillisecond);

static void MaxIndependentSet(benchmark::State& state) {
    const Graph g = gen_random(static_cast<std::size_t>(state.range(0)), 0.3, 42);
    for (auto _ : state)
        benchmark::DoNotOptimize(max_independent_set(g).value);
}
BENCHMARK(MaxIndependentSet)->Arg(30)->Arg(50)->Arg(70)->Unit(benchmark::kMillisecond);

static void MaxInducedMatching(benchmark::State& state) {
    const Graph g = gen_random(static_cast<std::size_t>(state.range(0)), 0.2, 42);
    for (auto _ : state)
        benchmark::DoNotOptimize(max_induced_matching(g).value);
}
BENCHMARK(MaxInducedMatching)->Arg(16)->Arg(24)->Arg(32)->Unit(benchmark::kMillisecond);

static void DenseBipartitePath(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Graph g = gen_random_bipartite(n, 0.95, 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(dense_bipartite_ham_path(g, 0, static_cast<VertexId>(n)).size());
}
BENCHMARK(DenseBipartitePath)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

static void BuildH(benchmark::State& state) {
    const Graph g = gen_complete(7);
    const auto k = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(build_h(g, k).graph.num_vertices());
}
BENCHMARK(BuildH)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

// Exact decision on H for a yes-instance (K7) and a no-instance (C7).
static void PartitionedDecision(benchmark::State& state) {
    const Graph g = state.range(0) == 1 ? gen_complete(7) : gen_cycle(7);
    const auto out = build_h(g, 1);
    const auto parts = region_partition(out);
    for (auto _ : state)
        benchmark::DoNotOptimize(has_induced_matching_partitioned(out.graph, out.target, parts, 1'000'000'000).verdict);
}
BENCHMARK(PartitionedDecision)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->Iterations(3);

static void BlowupSolve(benchmark::State& state) {
    const Graph g = gen_path(3);
    const auto out = blowup_reduce(g);
    for (auto _ : state)
        benchmark::DoNotOptimize(max_induced_matching(out.graph).value);
}
BENCHMARK(BlowupSolve)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
