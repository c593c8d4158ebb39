#include <dpdp/catalog.hpp>
#include <dpdp/domination.hpp>
#include <dpdp/good_subgraph.hpp>
#include <dpdp/minimality.hpp>
#include <dpdp/subdivision.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace dpdp;

static void BM_IsDpdpPath(benchmark::State& state)
{
    auto g = path_graph(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(is_dpdp(g));
}
BENCHMARK(BM_IsDpdpPath)->Arg(10)->Arg(20)->Arg(40)->Arg(60);

static void BM_IsDpdpCycle(benchmark::State& state)
{
    auto g = cycle_graph(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(is_dpdp(g));
}
BENCHMARK(BM_IsDpdpCycle)->Arg(5)->Arg(20)->Arg(40);

static void BM_IsDpdpComplete(benchmark::State& state)
{
    auto g = complete_graph(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(is_dpdp(g));
}
BENCHMARK(BM_IsDpdpComplete)->Arg(8)->Arg(16);

static void BM_MinimalByDeletion(benchmark::State& state)
{
    auto g = build_s2(complete_graph(static_cast<std::size_t>(state.range(0)))).graph;
    for (auto _ : state)
        benchmark::DoNotOptimize(is_minimal_by_deletion(g));
}
BENCHMARK(BM_MinimalByDeletion)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_BuildS2(benchmark::State& state)
{
    auto h = complete_graph(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(build_s2(h));
}
BENCHMARK(BM_BuildS2)->Arg(6)->Arg(12);

static void BM_InvertS2(benchmark::State& state)
{
    auto g = build_s2(complete_graph(static_cast<std::size_t>(state.range(0)))).graph;
    for (auto _ : state)
        benchmark::DoNotOptimize(invert_s2(g));
}
BENCHMARK(BM_InvertS2)->Arg(6)->Arg(12);

static void BM_FindGoodSubgraph(benchmark::State& state)
{
    auto h = path_graph(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(find_good_subgraph(h));
}
BENCHMARK(BM_FindGoodSubgraph)->Arg(6)->Arg(12);

static void BM_TreeGoodSubtree(benchmark::State& state)
{
    std::mt19937_64 rng(5);
    auto t = random_tree(static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(tree_find_good_subtree(t));
}
BENCHMARK(BM_TreeGoodSubtree)->Arg(14)->Arg(100)->Arg(1000);

static void BM_XcheckSweep(benchmark::State& state)
{
    auto sweep = enumerate_connected_multigraphs(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        for (const auto& h : sweep)
            benchmark::DoNotOptimize(xcheck(h));
}
BENCHMARK(BM_XcheckSweep)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_EnumerateSimple(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_connected_simple(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_EnumerateSimple)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
