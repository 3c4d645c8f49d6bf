#include <benchmark/benchmark.h>

#include "multizero/extremal.hpp"

using namespace multizero;

namespace {

std::vector<Rational> ternary() { return {Rational(-1), Rational(0), Rational(1)}; }

void BM_SearchPruned(benchmark::State& state) {
    SearchProblem problem{static_cast<int>(state.range(0)), ternary(), true};
    for (auto _ : state) {
        SearchResult r = search_max_multiplicity(problem);
        benchmark::DoNotOptimize(r.mu_max);
    }
}
BENCHMARK(BM_SearchPruned)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_SearchUnpruned(benchmark::State& state) {
    SearchProblem problem{static_cast<int>(state.range(0)), ternary(), true};
    SearchOptions options;
    options.prune = false;
    for (auto _ : state) {
        SearchResult r = search_max_multiplicity(problem, options);
        benchmark::DoNotOptimize(r.mu_max);
    }
}
BENCHMARK(BM_SearchUnpruned)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_SearchThreads(benchmark::State& state) {
    SearchProblem problem{12, ternary(), true};
    SearchOptions options;
    options.threads = static_cast<int>(state.range(0));
    for (auto _ : state) {
        SearchResult r = search_max_multiplicity(problem, options);
        benchmark::DoNotOptimize(r.mu_max);
    }
}
BENCHMARK(BM_SearchThreads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
