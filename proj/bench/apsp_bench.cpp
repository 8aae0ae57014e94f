// Serial vs OpenMP all-pairs shortest paths on Schreier graphs of growing
// index: the kernel behind every quotient metric build.

#include "boxdim/apsp.hpp"
#include "boxdim/quotient.hpp"
#include "boxdim/subgroup.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace boxdim;

WeightedGraph torus_graph(long long m) {
    auto Z2 = std::make_shared<MarkedGroup>(MarkedGroup::free_abelian(2));
    auto Q = build_quotient(congruence_spec(Z2, {m, m}));
    WeightedGraph g(Q.size());
    for (const auto& e : Q.edges)
        if (e.from < e.to) g.add_edge(e.from, e.to, e.weight);
    return g;
}

void BM_apsp_serial(benchmark::State& state) {
    auto g = torus_graph(state.range(0));
    for (auto _ : state) {
        auto d = apsp_serial(g);
        benchmark::DoNotOptimize(d);
    }
    state.SetComplexityN(g.size());
}

void BM_apsp_parallel(benchmark::State& state) {
    auto g = torus_graph(state.range(0));
    for (auto _ : state) {
        auto d = apsp_parallel(g);
        benchmark::DoNotOptimize(d);
    }
    state.SetComplexityN(g.size());
}

}  // namespace

BENCHMARK(BM_apsp_serial)->Arg(8)->Arg(16)->Arg(24)->Arg(32)->Complexity();
BENCHMARK(BM_apsp_parallel)->Arg(8)->Arg(16)->Arg(24)->Arg(32)->Complexity();

BENCHMARK_MAIN();
