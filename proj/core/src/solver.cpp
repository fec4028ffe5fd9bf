#include "zeff/solver.hpp"

#include "zeff/errors.hpp"
#include "zeff/roots.hpp"

#include <algorithm>
#include <cmath>

namespace zeff {

namespace {

// Positions of the interior vertices in the unknown vector, -1 for the
// terminals.
std::vector<int> unknown_positions(const Network& net, const std::vector<int>& interior) {
    std::vector<int> pos(static_cast<std::size_t>(net.vertex_count()), -1);
    for (std::size_t i = 0; i < interior.size(); ++i) pos[static_cast<std::size_t>(interior[i])] = static_cast<int>(i);
    return pos;
}

} // namespace

DirichletSystem<SymbolicField> assemble_symbolic(const Network& net) {
    DirichletSystem<SymbolicField> sys;
    sys.unknowns = net.interior_vertices();
    const auto pos = unknown_positions(net, sys.unknowns);
    const std::size_t n = sys.unknowns.size();

    sys.matrix.assign(n, std::vector<RationalFunction>(n));
    sys.rhs.assign(n, RationalFunction{});
    for (std::size_t i = 0; i < n; ++i) {
        int x = sys.unknowns[i];
        sys.matrix[i][i] = -net.vertex_weight(x);
        for (const auto& nb : net.neighbors(x)) {
            const RationalFunction& rho = net.merged_edges()[static_cast<std::size_t>(nb.merged_edge)].admittance;
            if (nb.vertex == net.a1()) {
                sys.rhs[i] -= rho;
            } else if (nb.vertex != net.a0()) {
                sys.matrix[i][static_cast<std::size_t>(pos[static_cast<std::size_t>(nb.vertex)])] = rho;
            }
        }
    }
    return sys;
}

DirichletSystem<ComplexField> assemble_complex(const Network& net, Complex lambda, double tol) {
    DirichletSystem<ComplexField> sys;
    sys.unknowns = net.interior_vertices();
    const auto pos = unknown_positions(net, sys.unknowns);
    const std::size_t n = sys.unknowns.size();

    std::vector<Complex> rho = net.admittances_at(lambda, tol); // throws PoleError at a pole

    sys.matrix.assign(n, std::vector<Complex>(n, Complex{}));
    sys.rhs.assign(n, Complex{});
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        int x = sys.unknowns[i];
        Complex weight{};
        for (const auto& nb : net.neighbors(x)) {
            Complex r = rho[static_cast<std::size_t>(nb.merged_edge)];
            weight += r;
            if (nb.vertex == net.a1()) {
                sys.rhs[i] -= r;
            } else if (nb.vertex != net.a0()) {
                sys.matrix[i][static_cast<std::size_t>(pos[static_cast<std::size_t>(nb.vertex)])] = r;
            }
        }
        sys.matrix[i][i] = -weight;
        for (const auto& entry : sys.matrix[i]) scale = std::max(scale, std::abs(entry));
        scale = std::max(scale, std::abs(sys.rhs[i]));
    }
    sys.field.tolerance = tol;
    sys.field.scale = scale;
    return sys;
}

DirichletOutcome solve_complex(const Network& net, Complex lambda, double tol) {
    auto sys = assemble_complex(net, lambda, tol);
    auto reduced = gauss_solve(sys);

    DirichletOutcome out;
    out.lambda = lambda;
    if (!reduced.consistent) {
        out.cls = SolutionClass::None;
        return out;
    }
    out.cls = reduced.nullspace.empty() ? SolutionClass::Unique : SolutionClass::Multiple;

    const std::size_t n = static_cast<std::size_t>(net.vertex_count());
    out.particular.assign(n, Complex{});
    out.particular[static_cast<std::size_t>(net.a1())] = 1.0;
    for (std::size_t i = 0; i < sys.unknowns.size(); ++i)
        out.particular[static_cast<std::size_t>(sys.unknowns[i])] = reduced.particular[i];

    for (const auto& basis : reduced.nullspace) {
        VertexFunction<Complex> full(n, Complex{});
        for (std::size_t i = 0; i < sys.unknowns.size(); ++i)
            full[static_cast<std::size_t>(sys.unknowns[i])] = basis[i];
        out.nullspace.push_back(std::move(full));
    }
    return out;
}

SymbolicSolution solve_symbolic(const Network& net) {
    if (!net.all_weights_positive())
        throw ValidationError("the exact Dirichlet problem needs positive edge weights; "
                              "this weighting is outside the ordered-field theory");

    auto sys = assemble_symbolic(net);
    auto reduced = gauss_solve(sys);
    if (!reduced.unique())
        throw ValidationError("interior system unexpectedly singular despite positive weights");

    SymbolicSolution out;
    out.values.assign(static_cast<std::size_t>(net.vertex_count()), RationalFunction{});
    out.values[static_cast<std::size_t>(net.a1())] = RationalFunction::one();
    for (std::size_t i = 0; i < sys.unknowns.size(); ++i)
        out.values[static_cast<std::size_t>(sys.unknowns[i])] = reduced.particular[i];
    return out;
}

RationalFunction determinant_symbolic(const Network& net) {
    auto sys = assemble_symbolic(net);
    return determinant(sys.field, sys.matrix);
}

std::vector<SingularFrequency> singular_frequencies(const Network& net, double tol) {
    RationalFunction det = determinant_symbolic(net);
    if (det.is_zero())
        throw ValidationError("determinant is identically zero; every frequency is singular");
    if (det.num().degree() < 1) return {};

    // Where some edge admittance blows up the assembled system does not
    // exist, so zeros of the determinant there are not frequencies of the
    // network.
    auto at_pole = [&](Complex location) { return net.has_pole_at(location, tol); };

    std::vector<SingularFrequency> out;
    for (const auto& [factor, multiplicity] : square_free_decomposition(det.num())) {
        for (Complex root : poly_roots(factor)) {
            if (at_pole(root)) continue;
            SingularFrequency f;
            f.location = root;
            f.multiplicity = multiplicity;
            f.physical = std::abs(root.real()) <= tol * std::max(1.0, std::abs(root)) &&
                         root.imag() > tol * std::max(1.0, std::abs(root));
            out.push_back(f);
        }
    }
    std::sort(out.begin(), out.end(), [](const SingularFrequency& a, const SingularFrequency& b) {
        if (a.location.real() != b.location.real()) return a.location.real() < b.location.real();
        return a.location.imag() < b.location.imag();
    });
    return out;
}

} // namespace zeff
