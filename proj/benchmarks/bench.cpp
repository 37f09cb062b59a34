#include <benchmark/benchmark.h>

#include "aperylab/bernoulli.hpp"
#include "aperylab/combinatorics.hpp"
#include "aperylab/congruence.hpp"
#include "aperylab/sequences.hpp"

using namespace aperylab;

namespace {

// Fresh caches per iteration where the cost being measured is the fill
// itself; the shared caches would otherwise absorb all the work.

void BM_binomial_row(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    for (auto _ : state) {
        BinomialCache cache;
        Integer acc = 0;
        for (std::int64_t k = 0; k <= n; ++k)
            acc += cache.binomial(n, k);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_binomial_row)->Arg(100)->Arg(400)->Arg(1600);

void BM_bernoulli_table(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        BernoulliTable table;
        benchmark::DoNotOptimize(table.number(n));
    }
}
BENCHMARK(BM_bernoulli_table)->Arg(60)->Arg(196);

void BM_term(benchmark::State& state, SequenceFamily family) {
    const std::int64_t n = state.range(0);
    for (auto _ : state) {
        TermCache cache;
        benchmark::DoNotOptimize(cache.term(family, n));
    }
}
BENCHMARK_CAPTURE(BM_term, apery_a, SequenceFamily::apery_a())->Arg(100)->Arg(485);
BENCHMARK_CAPTURE(BM_term, domb, SequenceFamily::domb())->Arg(100)->Arg(485);
BENCHMARK_CAPTURE(BM_term, zeta, SequenceFamily::zeta())->Arg(100)->Arg(472);

void BM_verify_theorem1(benchmark::State& state) {
    const std::int64_t p = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_theorem1(p, 2, 2, 1).holds);
}
BENCHMARK(BM_verify_theorem1)->Arg(5)->Arg(23)->Arg(47);

void BM_verify_harmonic(benchmark::State& state) {
    const std::int64_t p = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_harmonic(p).front().holds);
}
BENCHMARK(BM_verify_harmonic)->Arg(53)->Arg(199);

} // namespace

BENCHMARK_MAIN();
