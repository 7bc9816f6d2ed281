#include "tdc/gadgets.hpp"
#include "tdc/generators.hpp"
#include "tdc/oracle.hpp"
#include "tdc/poly.hpp"

#include <benchmark/benchmark.h>

using namespace tdc;

static void BM_gamma_t_cycle(benchmark::State& state)
{
    Graph g = cycle_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(gamma_t(g));
}
BENCHMARK(BM_gamma_t_cycle)->Arg(12)->Arg(18)->Arg(24)->Arg(30);

static void BM_gamma_t_random(benchmark::State& state)
{
    Graph g = random_connected(static_cast<int>(state.range(0)), 0.3, 7);
    for (auto _ : state) benchmark::DoNotOptimize(gamma_t(g));
}
BENCHMARK(BM_gamma_t_random)->Arg(12)->Arg(16)->Arg(20);

static void BM_decision_oracle(benchmark::State& state)
{
    Graph g = random_connected(static_cast<int>(state.range(0)), 0.35, 11);
    for (auto _ : state) benchmark::DoNotOptimize(decide_by_definition(g));
}
BENCHMARK(BM_decision_oracle)->Arg(8)->Arg(10)->Arg(12);

static void BM_induced_p5_search(benchmark::State& state)
{
    Graph g = random_connected(static_cast<int>(state.range(0)), 0.4, 13);
    Graph p5 = path_graph(5);
    for (auto _ : state) benchmark::DoNotOptimize(contains_induced(g, p5));
}
BENCHMARK(BM_induced_p5_search)->Arg(16)->Arg(32)->Arg(64);

static void BM_contract_edge(benchmark::State& state)
{
    Graph g = random_connected(static_cast<int>(state.range(0)), 0.3, 17);
    Edge e = g.edges().front();
    for (auto _ : state) benchmark::DoNotOptimize(contract_edge(g, e));
}
BENCHMARK(BM_contract_edge)->Arg(32)->Arg(128)->Arg(512);

static void BM_subdivided_gamma_t(benchmark::State& state)
{
    Graph g = four_subdivide_all(random_connected(static_cast<int>(state.range(0)), 0.5, 19));
    for (auto _ : state) benchmark::DoNotOptimize(gamma_t(g));
}
BENCHMARK(BM_subdivided_gamma_t)->Arg(5)->Arg(6);

static void BM_p4p3_solver(benchmark::State& state)
{
    Graph g = random_connected(static_cast<int>(state.range(0)), 0.6, 23);
    for (auto _ : state) benchmark::DoNotOptimize(decide_p4_kp3_free(g, 1, PolyOptions{false, 0}));
}
BENCHMARK(BM_p4p3_solver)->Arg(10)->Arg(12);

BENCHMARK_MAIN();
