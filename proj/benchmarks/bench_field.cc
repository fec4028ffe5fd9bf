#include <benchmark/benchmark.h>

#include "zeff/polynomial.hpp"
#include "zeff/rational_function.hpp"
#include "zeff/rng.hpp"

using namespace zeff;

namespace {

Polynomial random_poly(Rng& rng, int degree) {
    std::vector<Rational> c;
    for (int i = 0; i <= degree; ++i) c.push_back(Rational(rng.uniform_int(-9, 9)));
    c.push_back(Rational(1));
    return Polynomial(std::move(c));
}

void BM_PolyMul(benchmark::State& state) {
    Rng rng(1);
    Polynomial a = random_poly(rng, static_cast<int>(state.range(0)));
    Polynomial b = random_poly(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMul)->Arg(4)->Arg(8)->Arg(16);

void BM_PolyGcd(benchmark::State& state) {
    Rng rng(2);
    Polynomial g = random_poly(rng, static_cast<int>(state.range(0)));
    Polynomial a = random_poly(rng, 3) * g;
    Polynomial b = random_poly(rng, 3) * g;
    for (auto _ : state) benchmark::DoNotOptimize(poly_gcd(a, b));
}
BENCHMARK(BM_PolyGcd)->Arg(2)->Arg(6)->Arg(10);

void BM_RatFuncAdd(benchmark::State& state) {
    Rng rng(3);
    RationalFunction f(random_poly(rng, 3), random_poly(rng, static_cast<int>(state.range(0))));
    RationalFunction g(random_poly(rng, 3), random_poly(rng, static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(f + g);
}
BENCHMARK(BM_RatFuncAdd)->Arg(2)->Arg(6)->Arg(12);

void BM_RatFuncMul(benchmark::State& state) {
    Rng rng(4);
    RationalFunction f(random_poly(rng, 4), random_poly(rng, 4));
    RationalFunction g(random_poly(rng, 4), random_poly(rng, 4));
    for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_RatFuncMul);

} // namespace
