#include <benchmark/benchmark.h>

#include "multizero/polynomial.hpp"

using namespace multizero;

namespace {

void BM_NewtonInterpolate(benchmark::State& state) {
    const long count = state.range(0);
    std::vector<std::pair<long, Rational>> points;
    for (long x = 0; x < count; ++x)
        points.emplace_back(x, Rational((x * 7919) % 23 - 11, (x % 5) + 1));
    for (auto _ : state) {
        Polynomial p = newton_interpolate(points);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_NewtonInterpolate)->Arg(16)->Arg(32)->Arg(64);

void BM_BinomialPower(benchmark::State& state) {
    Polynomial one_minus_x(std::vector<Rational>{Rational(1), Rational(-1)});
    const unsigned e = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        Polynomial p = one_minus_x.pow(e);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_BinomialPower)->Arg(16)->Arg(64)->Arg(256);

void BM_MultiplicityDetection(benchmark::State& state) {
    const unsigned mu = static_cast<unsigned>(state.range(0));
    Polynomial one_minus_x(std::vector<Rational>{Rational(1), Rational(-1)});
    Polynomial rest(std::vector<Rational>{Rational(3), Rational(1, 2), Rational(-2)});
    Polynomial p = one_minus_x.pow(mu) * rest;
    for (auto _ : state)
        benchmark::DoNotOptimize(multiplicity_at(p, Rational(1)));
}
BENCHMARK(BM_MultiplicityDetection)->Arg(4)->Arg(16)->Arg(64);

}  // namespace
