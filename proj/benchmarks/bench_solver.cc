#include <benchmark/benchmark.h>

#include "zeff/impedance.hpp"
#include "zeff/solver.hpp"

#include <string>
#include <vector>

using namespace zeff;

namespace {

// Ladder of n rungs: series RL on the rails, capacitors on the rungs.
Network ladder(int rungs) {
    std::vector<std::string> names{"a0", "a1"};
    std::vector<EdgeSpec> edges;
    std::string top = "a0", bottom = "a1";
    for (int i = 0; i < rungs; ++i) {
        std::string t = "t" + std::to_string(i);
        std::string b = "b" + std::to_string(i);
        names.push_back(t);
        names.push_back(b);
        edges.push_back({top, t, EdgeParams::rlc(1, 1, 0)});
        edges.push_back({bottom, b, EdgeParams::rlc(1, 0, 0)});
        edges.push_back({t, b, EdgeParams::rlc(0, 0, 1)});
        top = t;
        bottom = b;
    }
    edges.push_back({top, bottom, EdgeParams::rlc(1, 0, 0)});
    return build_network(std::move(names), edges, "a0", "a1", NetworkMode::Strict);
}

void BM_SolveSymbolic(benchmark::State& state) {
    Network net = ladder(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(solve_symbolic(net));
}
BENCHMARK(BM_SolveSymbolic)->Arg(1)->Arg(2)->Arg(3);

void BM_SolveComplex(benchmark::State& state) {
    Network net = ladder(static_cast<int>(state.range(0)));
    Complex lambda(0.0, 1.25);
    for (auto _ : state) benchmark::DoNotOptimize(solve_complex(net, lambda));
}
BENCHMARK(BM_SolveComplex)->Arg(2)->Arg(4)->Arg(8);

void BM_DeterminantSymbolic(benchmark::State& state) {
    Network net = ladder(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(determinant_symbolic(net));
}
BENCHMARK(BM_DeterminantSymbolic)->Arg(1)->Arg(2)->Arg(3);

void BM_EnergySymbolic(benchmark::State& state) {
    Network net = ladder(static_cast<int>(state.range(0)));
    SymbolicSolution v = solve_symbolic(net);
    for (auto _ : state) benchmark::DoNotOptimize(energy_symbolic(net, v.values));
}
BENCHMARK(BM_EnergySymbolic)->Arg(1)->Arg(2)->Arg(3);

void BM_Sweep(benchmark::State& state) {
    Network net = ladder(3);
    for (auto _ : state) benchmark::DoNotOptimize(sweep(net, 0.5, 5.0, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Sweep)->Arg(16)->Arg(64);

} // namespace
