#include <benchmark/benchmark.h>

#include "trichain/chains.hpp"
#include "trichain/statespace.hpp"

using namespace trichain;

namespace {

void BM_chain_ii_step(benchmark::State& state) {
    const auto n = static_cast<Vertex>(state.range(0));
    CubicGraph g = triangle_rich_start(n);
    Rng rng(1);
    for (auto _ : state) benchmark::DoNotOptimize(step_chain_ii(g, rng));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_chain_ii_step)->Arg(100)->Arg(1000)->Arg(10000);

void BM_chain_i_step(benchmark::State& state) {
    const auto n = static_cast<Vertex>(state.range(0));
    CubicGraph g = triangle_rich_start(n);
    Rng rng(2);
    for (auto _ : state) benchmark::DoNotOptimize(step_chain_i(g, 0.7, 0.3, rng));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_chain_i_step)->Arg(1000);

void BM_chain_o_step(benchmark::State& state) {
    const auto n = static_cast<Vertex>(state.range(0));
    CubicGraph g = triangle_rich_start(n);
    TripleSets sets(g);
    Rng rng(3);
    for (auto _ : state) {
        const auto outcome = step_chain_o(g, sets, 0.5, rng);
        if (outcome.applied()) sets.update(g, outcome.delta);
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_chain_o_step)->Arg(1000);

void BM_full_census(benchmark::State& state) {
    const auto n = static_cast<Vertex>(state.range(0));
    const CubicGraph g = prism_packing(n);
    for (auto _ : state) benchmark::DoNotOptimize(full_census(g));
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_full_census)->Arg(1000)->Arg(100000);

void BM_uniform_sample(benchmark::State& state) {
    const auto n = static_cast<Vertex>(state.range(0));
    Rng rng(4);
    for (auto _ : state) benchmark::DoNotOptimize(sample_uniform_cubic(n, rng));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_uniform_sample)->Arg(100)->Arg(1000);

void BM_enumerate_states(benchmark::State& state) {
    const auto n = static_cast<Vertex>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_states(n));
}
BENCHMARK(BM_enumerate_states)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
