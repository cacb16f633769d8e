#include <benchmark/benchmark.h>

#include "redei/approx.hpp"
#include "redei/arith.hpp"
#include "redei/redei.hpp"

using namespace redei;

// Q_{2^e}(2, 1): e sequential Newton steps on reduced rationals.
static void BM_NewtonSequential(benchmark::State& state) {
    const auto e = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(newton_sqrt(2, 1, e).back());
}
BENCHMARK(BM_NewtonSequential)->DenseRange(8, 18, 2)->Unit(benchmark::kMicrosecond);

// Same value from e squarings in Z[sqrt d] and one final reduction.
static void BM_NewtonDirect(benchmark::State& state) {
    const auto e = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(newton_direct(2, 1, e));
}
BENCHMARK(BM_NewtonDirect)->DenseRange(8, 18, 2)->Unit(benchmark::kMicrosecond);

static void BM_RedeiMatrixPow(benchmark::State& state) {
    const RedeiParams params(26, 22, static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(redei_matrix_pow(params));
}
BENCHMARK(BM_RedeiMatrixPow)->RangeMultiplier(4)->Range(16, 1 << 14);

static void BM_RedeiRecurrence(benchmark::State& state) {
    const auto count = static_cast<std::size_t>(state.range(0)) + 1;
    for (auto _ : state) benchmark::DoNotOptimize(redei_sequence(26, 22, count).back());
}
BENCHMARK(BM_RedeiRecurrence)->RangeMultiplier(4)->Range(16, 1 << 14);

static void BM_RedeiBinomial(benchmark::State& state) {
    const RedeiParams params(26, 22, static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(redei_binomial(params));
}
BENCHMARK(BM_RedeiBinomial)->RangeMultiplier(4)->Range(16, 1 << 12);

static void BM_HenselLinear(benchmark::State& state) {
    const auto prec = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(hensel_digits(26, 229, 22, prec).truncation(prec - 1));
}
BENCHMARK(BM_HenselLinear)->RangeMultiplier(4)->Range(16, 4096);

static void BM_HenselQuadratic(benchmark::State& state) {
    const auto prec = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(hensel_lift_quadratic(26, 229, 22, prec));
}
BENCHMARK(BM_HenselQuadratic)->RangeMultiplier(4)->Range(16, 4096);

static void BM_SqrtModP(benchmark::State& state) {
    const Integer p("18446744069414584321");
    for (auto _ : state) benchmark::DoNotOptimize(sqrt_mod_p(7, p));
}
BENCHMARK(BM_SqrtModP);

BENCHMARK_MAIN();
