#include <benchmark/benchmark.h>

#include "regjump/families.hpp"
#include "regjump/quotients.hpp"

using namespace regjump;

namespace {

void BM_PowerJump(benchmark::State& state) {
    MonomialIdeal j = family_J(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        MonomialIdeal p = power(j, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_PowerJump)->Arg(2)->Arg(3)->Arg(4);

void BM_LcmLatticeJumpCube(benchmark::State& state) {
    MonomialIdeal cube = power(family_J(3), 3);
    for (auto _ : state) {
        LcmLattice lattice = lcm_lattice(cube);
        benchmark::DoNotOptimize(lattice);
    }
}
BENCHMARK(BM_LcmLatticeJumpCube);

void BM_HilbertNumeratorTerai(benchmark::State& state) {
    MonomialIdeal terai = example_terai();
    for (auto _ : state) {
        auto coeffs = hilbert_numerator(terai);
        benchmark::DoNotOptimize(coeffs);
    }
}
BENCHMARK(BM_HilbertNumeratorTerai);

void BM_SearchTerai(benchmark::State& state) {
    MonomialIdeal terai = example_terai();
    for (auto _ : state) {
        SearchResult result = search_linear_quotients(terai, 1000000);
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(BM_SearchTerai);

void BM_BlockOrderJump(benchmark::State& state) {
    for (auto _ : state) {
        OrderedGenerators og = family_J_block_order(3, 2);
        benchmark::DoNotOptimize(og);
    }
}
BENCHMARK(BM_BlockOrderJump);

} // namespace
