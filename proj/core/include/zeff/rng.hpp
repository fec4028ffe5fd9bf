#pragma once

#include <cstdint>
#include <random>

namespace zeff {

/// Seeded random source used by the randomized checks. The helpers map the
/// raw engine output themselves so that a given seed produces the same
/// sequence on every standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [lo, hi], inclusive.
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// Uniform double in [lo, hi).
    double uniform_real(double lo, double hi) {
        double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
        return lo + u * (hi - lo);
    }

    bool coin(double p = 0.5) { return uniform_real(0.0, 1.0) < p; }

    /// Child generator with a seed derived from this one; keeps sub-checks
    /// reproducible independently of how many draws earlier checks made.
    Rng fork() { return Rng(next() ^ 0x9e3779b97f4a7c15ull); }

private:
    std::mt19937_64 engine_;
};

} // namespace zeff
