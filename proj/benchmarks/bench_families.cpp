#include <benchmark/benchmark.h>

#include "multizero/families.hpp"

using namespace multizero;

namespace {

void BM_KernelFullRange(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    FamilySpec fam = FamilySpec::krawtchouk(n, Rational(2));
    for (auto _ : state) {
        Rational v = kernel(fam, 0, n / 2, 0, n);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_KernelFullRange)->Arg(8)->Arg(16)->Arg(32);

void BM_ChebyshevTail(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    FamilySpec fam = FamilySpec::discrete_chebyshev(n);
    for (auto _ : state) {
        Rational v = tail_sum(fam, 0, n / 2).exact();
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_ChebyshevTail)->Arg(16)->Arg(64)->Arg(128);

void BM_DualOrthogonalityRow(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    FamilySpec fam = FamilySpec::hahn(n, Rational(1, 2), Rational(2));
    for (auto _ : state) {
        for (long y = 0; y <= n; ++y)
            benchmark::DoNotOptimize(dual_orthogonality_check(fam, 0, y));
    }
}
BENCHMARK(BM_DualOrthogonalityRow)->Arg(6)->Arg(12);

}  // namespace
