#include <benchmark/benchmark.h>

#include "regjump/families.hpp"
#include "regjump/rees.hpp"
#include "regjump/taylor.hpp"

using namespace regjump;

namespace {

void BM_BettiTerai(benchmark::State& state) {
    MonomialIdeal terai = example_terai();
    FieldSpec field = state.range(0) == 0 ? FieldSpec::rationals() : FieldSpec::prime_field(2);
    for (auto _ : state) {
        BettiTable table = betti_table(terai, field, 1);
        benchmark::DoNotOptimize(table);
    }
}
BENCHMARK(BM_BettiTerai)->Arg(0)->Arg(2);

void BM_BettiTeraiSquare(benchmark::State& state) {
    MonomialIdeal square = power(example_terai(), 2);
    for (auto _ : state) {
        BettiTable table = betti_table(square, FieldSpec::rationals(), 1);
        benchmark::DoNotOptimize(table);
    }
}
BENCHMARK(BM_BettiTeraiSquare);

void BM_BettiJumpCube(benchmark::State& state) {
    MonomialIdeal cube = power(family_J(3), 3);
    for (auto _ : state) {
        BettiTable table = betti_table(cube, FieldSpec::rationals(), 1);
        benchmark::DoNotOptimize(table);
    }
}
BENCHMARK(BM_BettiJumpCube);

void BM_TaylorOracleTerai(benchmark::State& state) {
    MonomialIdeal terai = example_terai();
    for (auto _ : state) {
        BettiTable table = taylor_betti_oracle(terai, FieldSpec::prime_field(2));
        benchmark::DoNotOptimize(table);
    }
}
BENCHMARK(BM_TaylorOracleTerai);

void BM_PseudoLinearOrder3(benchmark::State& state) {
    for (auto _ : state) {
        PseudoLinearVerdict verdict = verify_pseudo_linear(jump_instance(4, 3));
        benchmark::DoNotOptimize(verdict);
    }
}
BENCHMARK(BM_PseudoLinearOrder3);

} // namespace
