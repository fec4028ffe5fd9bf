#pragma once

#include "zeff/elimination.hpp"
#include "zeff/network.hpp"

#include <vector>

namespace zeff {

/// Linear system of the interior Dirichlet problem: one row per interior
/// vertex x encoding
///     Σ_{y interior} ρ_xy v(y) - ρ(x) v(x) = -ρ_{x a1},
/// i.e. harmonicity at x with the boundary data v(a0) = 0, v(a1) = 1
/// folded into the right-hand side. Unknowns keep the input vertex order.
template <FieldInstance F>
struct DirichletSystem {
    F field;
    std::vector<int> unknowns;
    std::vector<std::vector<typename F::Value>> matrix;
    std::vector<typename F::Value> rhs;
};

DirichletSystem<SymbolicField> assemble_symbolic(const Network& net);

/// Complex instance at a fixed lambda; entries are the admittances
/// evaluated there. The field's zero test is made relative to the largest
/// initial magnitude in the augmented matrix. Throws PoleError if some
/// admittance has a pole at lambda.
DirichletSystem<ComplexField> assemble_complex(const Network& net, Complex lambda,
                                               double tol = defaults::rank_tolerance);

/// Row reduction of the assembled system; see LinearSolution for the
/// meaning of the pieces.
template <FieldInstance F>
LinearSolution<F> gauss_solve(const DirichletSystem<F>& sys) {
    return solve_linear(sys.field, sys.matrix, sys.rhs);
}

enum class SolutionClass { Unique, Multiple, None };

/// Classified complex Dirichlet problem at a fixed lambda. All stored
/// functions are total on V: the particular solution carries the boundary
/// values 0 and 1 at the terminals, homogeneous basis vectors carry 0 at
/// both.
struct DirichletOutcome {
    SolutionClass cls = SolutionClass::Unique;
    Complex lambda{};
    VertexFunction<Complex> particular;                  // empty when cls == None
    std::vector<VertexFunction<Complex>> nullspace;      // empty unless cls == Multiple
};

DirichletOutcome solve_complex(const Network& net, Complex lambda, double tol = defaults::rank_tolerance);

/// The unique exact solution over the ordered field; requires every edge
/// weight to be positive in that order (always true in strict mode).
struct SymbolicSolution {
    VertexFunction<RationalFunction> values;
};

SymbolicSolution solve_symbolic(const Network& net);

/// Determinant of the interior system over the rational functions.
/// Identically zero only for degenerate raw-mode weightings.
RationalFunction determinant_symbolic(const Network& net);

struct SingularFrequency {
    Complex location;
    int multiplicity = 1;
    /// Purely imaginary with positive imaginary part, i.e. reachable as
    /// λ = iω for a physical frequency ω > 0.
    bool physical = false;
};

/// Zeros of the determinant's numerator, excluding points where some edge
/// admittance has a pole; sorted by (re, im). `tol` controls the
/// pure-imaginary and pole-coincidence classification. Throws
/// ValidationError when the determinant is identically zero and
/// ConvergenceError if the root iteration fails.
std::vector<SingularFrequency> singular_frequencies(const Network& net,
                                                    double tol = defaults::comparison_tolerance);

} // namespace zeff
