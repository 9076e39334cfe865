#include <benchmark/benchmark.h>

#include "genexp/branching.hpp"
#include "genexp/extremal.hpp"
#include "genexp/genexp.hpp"
#include "genexp/oracle.hpp"
#include "genexp/partition.hpp"

namespace {

using namespace genexp;

void bm_genexp_a_adjoint(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<int> parts = {2};
    parts.insert(parts.end(), n - 2, 1);
    const Partition lambda(parts);
    for (auto _ : state) {
        benchmark::DoNotOptimize(genexp_A(lambda, n));
    }
}
BENCHMARK(bm_genexp_a_adjoint)->Arg(3)->Arg(4)->Arg(5);

void bm_genexp_c_rectangle(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Partition lambda({2, 2});
    for (auto _ : state) {
        benchmark::DoNotOptimize(genexp_C(lambda, n));
    }
}
BENCHMARK(bm_genexp_c_rectangle)->Arg(2)->Arg(3)->Arg(4);

void bm_oracle_zero_weight(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Partition lambda({2, 2});
    for (auto _ : state) {
        benchmark::DoNotOptimize(lusztig_t_analogue_zero(LieType::C, n, lambda));
    }
}
BENCHMARK(bm_oracle_zero_weight)->Arg(2)->Arg(3);

void bm_stable_series(benchmark::State& state) {
    const int cutoff = static_cast<int>(state.range(0));
    const Partition lambda({2, 2});
    for (auto _ : state) {
        benchmark::DoNotOptimize(stable_C(lambda, cutoff));
    }
}
BENCHMARK(bm_stable_series)->Arg(4)->Arg(6);

void bm_branching_count(benchmark::State& state) {
    const Partition lambda({2, 1, 1});
    const Partition nu({5, 4, 3, 3, 3, 2});
    for (auto _ : state) {
        benchmark::DoNotOptimize(branching_sp(lambda, nu, 3));
    }
}
BENCHMARK(bm_branching_count);

void bm_minimal_filling(benchmark::State& state) {
    const Partition lambda({7, 6, 5, 3, 1});
    for (auto _ : state) {
        benchmark::DoNotOptimize(sigma_min(lambda, 5));
    }
}
BENCHMARK(bm_minimal_filling);

}  // namespace

BENCHMARK_MAIN();
