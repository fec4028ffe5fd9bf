#pragma once

#include "zeff/impedance.hpp"
#include "zeff/rng.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace zeff {

enum class CheckStatus { Pass, Fail, Skipped };

/// One verdict of the randomized theorem suite. Deterministic for a given
/// seed; a failure always carries the offending values in `witness`.
struct CheckReport {
    std::string name;
    std::string instance;
    CheckStatus status = CheckStatus::Pass;
    std::string witness;
    std::uint64_t seed = 0;
};

/// Green's identity on a vertex subset: Σ_Ω Δf·g equals the gradient form
/// plus the boundary term. Exact in the rational-function instance.
CheckReport check_green_symbolic(const Network& net, const VertexFunction<RationalFunction>& f,
                                 const VertexFunction<RationalFunction>& g, const std::vector<int>& omega);

/// Complex instance at a fixed lambda; the residual must stay below
/// tol * (largest summand magnitude).
CheckReport check_green_complex(const Network& net, const VertexFunction<Complex>& f,
                                const VertexFunction<Complex>& g, const std::vector<int>& omega, Complex lambda,
                                double tol = 1e-9);

/// Maximum/minimum principle over the ordered field: a function
/// subharmonic outside B attains its maximum on B, a superharmonic one its
/// minimum. Reports Skipped when u is neither on V \ B.
CheckReport check_max_principle(const Network& net, const VertexFunction<RationalFunction>& u,
                                const std::vector<int>& boundary);

/// Energy minimality of the exact Dirichlet solution: every competitor
/// with the same boundary values has at least its energy, with equality
/// only for the solution itself.
CheckReport check_thomson(const Network& net, int trials, std::uint64_t seed);

/// Sign structure of the impedance at physical frequencies: Re Z >= 0, and
/// Im Z <= 0 / >= 0 for inductor-free / capacitor-free networks. Strict
/// networks only.
CheckReport check_signs(const Network& net, const std::vector<double>& omega_samples);

struct VerifyOptions {
    int thomson_trials = 100;
    int green_instances = 3;     // proper random subsets, plus Omega = V and a singleton
    int conservation_lambdas = 5;
    int cramer_lambdas = 20;
    int sign_samples = 5;
    int invariance_combinations = 3;
};

/// Runs the whole suite with derived sub-seeds. Checks whose theory does
/// not apply to the given weighting (non-positive weights, raw mode) come
/// back Skipped, never Fail.
std::vector<CheckReport> run_all(const Network& net, std::uint64_t seed, const VerifyOptions& options = {});

/// Random connected network with two terminals: a spanning tree plus a few
/// extra edges on 4-8 vertices, RLC values from a small exact pool. Some
/// draws are inductor-free or capacitor-free so the sign checks see both.
Network random_strict_network(Rng& rng, int min_vertices = 4, int max_vertices = 8);

} // namespace zeff
