#include <benchmark/benchmark.h>

#include "bidend/pairing.hpp"

using namespace bidend;

namespace {

const DecorationSet& star() {
    static const auto d = DecorationSet::single_default();
    return d;
}

void BM_pair_recursive(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto basis = enumerate_forests(star(), n);
    for (auto _ : state) {
        clear_pairing_cache();
        Rational acc(0);
        for (const auto& a : basis)
            for (const auto& b : basis) acc += pair_forests(a, b);
        benchmark::DoNotOptimize(acc);
    }
    state.SetComplexityN(basis.size());
}
BENCHMARK(BM_pair_recursive)->DenseRange(2, 5)->Complexity();

void BM_pair_recursive_cached(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto basis = enumerate_forests(star(), n);
    clear_pairing_cache();
    for (auto _ : state) {
        Rational acc(0);
        for (const auto& a : basis)
            for (const auto& b : basis) acc += pair_forests(a, b);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_pair_recursive_cached)->DenseRange(2, 5);

void BM_pair_oracle(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto basis = enumerate_forests(star(), n);
    for (auto _ : state) {
        Rational acc(0);
        for (const auto& a : basis)
            for (const auto& b : basis) acc += pair_oracle(a, b);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_pair_oracle)->DenseRange(2, 4);

void BM_gram_determinant(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const GramMatrix gm = gram(star(), n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bareiss_det(gm.values));
    }
}
BENCHMARK(BM_gram_determinant)->DenseRange(3, 5);

}  // namespace

BENCHMARK_MAIN();
