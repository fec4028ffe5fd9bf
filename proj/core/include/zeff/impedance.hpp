#pragma once

#include "zeff/solver.hpp"

#include <vector>

namespace zeff {

/// Complex value extended with a single point at infinity; used for the
/// no-solution convention (P = ∞) and for a vanishing effective admittance
/// (Z = ∞).
struct ExtComplex {
    Complex value{};
    bool infinite = false;

    static ExtComplex inf() { return {Complex{}, true}; }
    static ExtComplex of(Complex v) { return {v, false}; }
};

/// Effective impedance of the network at a fixed lambda.
///
/// With a solution v (unique or not), P = Σ_{x ~ a0} v(x) ρ_{x a0}(λ) and
/// Z = 1/P; P = 0 is reported as an infinite Z. Without a solution the
/// convention is Z = 0, P = ∞.
struct ComplexImpedanceResult {
    Complex lambda{};
    SolutionClass cls = SolutionClass::Unique;
    ExtComplex Z;
    ExtComplex P;
};

ComplexImpedanceResult effective_complex(const Network& net, Complex lambda,
                                         double tol = defaults::rank_tolerance);

/// Exact effective impedance over the ordered field. Requires positive
/// weights; then P is positive (the solution is nonconstant), so Z = 1/P
/// always exists.
struct SymbolicImpedanceResult {
    RationalFunction Z;
    RationalFunction P;
};

SymbolicImpedanceResult effective_symbolic(const Network& net);

/// The complex power ½ Σ_{x,y} |∇_xy v|² ρ_xy(λ): the gradient enters with
/// its squared magnitude, the admittance unconjugated. Equals P for any
/// solution of the Dirichlet problem.
Complex energy_complex(const Network& net, const VertexFunction<Complex>& v, Complex lambda,
                       double tol = defaults::zero_tolerance);

/// The exact energy form ½ Σ_{x,y} (∇_xy v)² ρ_xy (plain squares).
RationalFunction energy_symbolic(const Network& net, const VertexFunction<RationalFunction>& v);

enum class CompareNote { Generic, SingularMultiple, SingularNone, Pole };

/// Side-by-side evaluation of the two impedance definitions at one lambda.
/// `agree` is |Z1 - Z2| <= tol * max(1, |Z2|) where both are finite; an
/// infinite Z1 agrees only with a pole of Z2. No equality is claimed at
/// singular lambdas; the note records which case was hit.
struct ComparisonReport {
    Complex lambda{};
    ExtComplex Z1;
    ExtComplex Z2;      // the exact impedance evaluated at lambda
    bool z2_pole = false;
    bool agree = false;
    CompareNote note = CompareNote::Generic;
};

ComparisonReport compare_impedances(const Network& net, Complex lambda,
                                    double tol = defaults::comparison_tolerance);

enum class SweepRowStatus { Ok, Pole };

struct SweepRow {
    double omega = 0.0;
    SweepRowStatus status = SweepRowStatus::Ok;
    ComplexImpedanceResult result;
};

/// Evaluates the impedance on a frequency grid, λ = iω. Per-point failures
/// (an admittance pole at the grid point) become Pole rows; the sweep
/// itself never fails.
std::vector<SweepRow> sweep(const Network& net, double omega_min, double omega_max, int points,
                            bool log_spacing = false, double tol = defaults::rank_tolerance);

} // namespace zeff
