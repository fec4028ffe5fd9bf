#include <benchmark/benchmark.h>

#include "zeff/rng.hpp"
#include "zeff/roots.hpp"

using namespace zeff;

namespace {

Polynomial random_monic(Rng& rng, int degree) {
    std::vector<Rational> c;
    for (int i = 0; i < degree; ++i) c.push_back(Rational(rng.uniform_int(-9, 9)));
    c.push_back(Rational(1));
    return Polynomial(std::move(c));
}

void BM_Roots(benchmark::State& state) {
    Rng rng(11);
    Polynomial p = random_monic(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(poly_roots(p));
}
BENCHMARK(BM_Roots)->Arg(4)->Arg(8)->Arg(16);

void BM_RootsWithMultiplicity(benchmark::State& state) {
    // (x^2+1)^2 (x^2+2): exercises the square-free split
    Polynomial p = Polynomial{1, 0, 1} * Polynomial{1, 0, 1} * Polynomial{2, 0, 1};
    for (auto _ : state) benchmark::DoNotOptimize(poly_roots(p));
}
BENCHMARK(BM_RootsWithMultiplicity);

} // namespace
