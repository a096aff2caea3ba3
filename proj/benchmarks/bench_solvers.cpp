#include <benchmark/benchmark.h>

#include <random>

#include "burn/burning.hpp"
#include "burn/families.hpp"
#include "burn/format.hpp"
#include "burn/independence.hpp"
#include "burn/lazy.hpp"

using namespace burn;

static void BM_PropagateStep(benchmark::State& state) {
    auto h = gen_tight_path(3, int(state.range(0)));
    VertexSet burned(h.vertex_count());
    burned.set(h.vertex_count() / 2);
    burned.set(h.vertex_count() / 2 + 1);
    for (auto _ : state) benchmark::DoNotOptimize(propagate_step(h, burned));
}
BENCHMARK(BM_PropagateStep)->Arg(50)->Arg(200);

static void BM_LazyClosure(benchmark::State& state) {
    auto h = gen_tight_path(3, int(state.range(0)));
    VertexSet seeds(h.vertex_count());
    seeds.set(0);
    seeds.set(1);
    for (auto _ : state) benchmark::DoNotOptimize(lazy_closure(h, seeds).closure.count());
}
BENCHMARK(BM_LazyClosure)->Arg(50)->Arg(200);

static void BM_BurningNumberTightPath(benchmark::State& state) {
    auto h = gen_tight_path(3, int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(burning_number_exact(h).value);
}
BENCHMARK(BM_BurningNumberTightPath)->Arg(9)->Arg(13)->Arg(17);

static void BM_BurningNumberDisjointEdges(benchmark::State& state) {
    auto h = gen_disjoint_edges(std::vector<int>(int(state.range(0)), 3));
    SolverGuard guard{h.vertex_count()};
    for (auto _ : state) benchmark::DoNotOptimize(burning_number_exact(h, guard).value);
}
BENCHMARK(BM_BurningNumberDisjointEdges)->Arg(3)->Arg(5)->Arg(7);

static void BM_LazyNumber(benchmark::State& state) {
    auto h = gen_tight_path(3, int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(lazy_burning_number_exact(h).value);
}
BENCHMARK(BM_LazyNumber)->Arg(12)->Arg(18)->Arg(22);

static void BM_MaxIndependentSet(benchmark::State& state) {
    std::mt19937 rng(42);
    const int n = int(state.range(0));
    std::vector<std::vector<int>> edges;
    std::uniform_int_distribution<int> vd(0, n - 1);
    for (int i = 0; i < 2 * n; ++i) {
        int a = vd(rng), b = vd(rng), c = vd(rng);
        if (a != b && b != c && a != c) edges.push_back({a, b, c});
    }
    Hypergraph h(n, edges);
    for (auto _ : state) benchmark::DoNotOptimize(max_independent_set(h).count());
}
BENCHMARK(BM_MaxIndependentSet)->Arg(16)->Arg(20)->Arg(24);

static void BM_ParseSerializeRoundTrip(benchmark::State& state) {
    auto text = serialize_hypergraph(gen_tight_path(4, int(state.range(0))));
    for (auto _ : state) {
        auto h = parse_hypergraph(text);
        benchmark::DoNotOptimize(serialize_hypergraph(h).size());
    }
}
BENCHMARK(BM_ParseSerializeRoundTrip)->Arg(64)->Arg(256);

static void BM_MaxSpread(benchmark::State& state) {
    auto h = gen_tight_path(3, 12);
    for (auto _ : state) benchmark::DoNotOptimize(max_spread(h, int(state.range(0))));
}
BENCHMARK(BM_MaxSpread)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
