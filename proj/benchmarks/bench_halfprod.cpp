#include <benchmark/benchmark.h>

#include "bidend/halfprod.hpp"

using namespace bidend;

namespace {

void BM_table_build(benchmark::State& state) {
    const int bound = static_cast<int>(state.range(0));
    for (auto _ : state) {
        HalfProductTable table(DecorationSet::single_default(), bound);
        table.build_all();
        benchmark::DoNotOptimize(table.entries().size());
    }
}
BENCHMARK(BM_table_build)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_single_solve(benchmark::State& state) {
    const int bound = static_cast<int>(state.range(0));
    const auto star = DecorationSet::single_default();
    const auto left = enumerate_forests(star, 1).front();
    const auto rights = enumerate_forests(star, bound - 1);
    for (auto _ : state) {
        // fresh table per iteration: measures gram factorization plus solve
        HalfProductTable table(star, bound);
        benchmark::DoNotOptimize(table.prec(left, rights.front()));
    }
}
BENCHMARK(BM_single_solve)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
