#include <benchmark/benchmark.h>

#include "bidend/fqsym.hpp"
#include "bidend/prim.hpp"

using namespace bidend;

namespace {

void BM_shuffle_product(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto left = enumerate_perms(n);
    const auto right = enumerate_perms(n);
    for (auto _ : state) {
        std::size_t terms = 0;
        for (const auto& u : left)
            for (const auto& v : right) terms += fqsym::product(u, v).size();
        benchmark::DoNotOptimize(terms);
    }
}
BENCHMARK(BM_shuffle_product)->DenseRange(1, 3);

void BM_coproduct_sweep(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto basis = enumerate_perms(n);
    for (auto _ : state) {
        std::size_t terms = 0;
        for (const auto& u : basis) terms += fqsym::reduced_coproduct(u).size();
        benchmark::DoNotOptimize(terms);
    }
}
BENCHMARK(BM_coproduct_sweep)->DenseRange(3, 6);

void BM_prim_kernel(benchmark::State& state) {
    FqsymAlgebra alg;
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(prim_tot_basis(alg, n).dim());
    }
}
BENCHMARK(BM_prim_kernel)->DenseRange(3, 5);

void BM_projection(benchmark::State& state) {
    FqsymAlgebra alg;
    const int n = static_cast<int>(state.range(0));
    const auto basis = alg.basis(n);
    for (auto _ : state) {
        for (const auto& u : basis) benchmark::DoNotOptimize(t_total(alg, FqElem::basis(u)));
    }
}
BENCHMARK(BM_projection)->DenseRange(2, 4);

}  // namespace

BENCHMARK_MAIN();
