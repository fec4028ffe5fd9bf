#include "zeff/impedance.hpp"

#include "zeff/errors.hpp"

#include <cmath>
#include <map>
#include <utility>
#include <vector>

namespace zeff {

namespace {

// P = Σ_{x ~ a0} v(x) ρ_{x a0}(λ); the a0 term of v never enters (v(a0)=0
// for solutions, and a0 is not its own neighbor).
Complex admittance_sum_at_source(const Network& net, const VertexFunction<Complex>& v,
                                 const std::vector<Complex>& rho, double& term_scale) {
    Complex p{};
    term_scale = 0.0;
    for (const auto& nb : net.neighbors(net.a0())) {
        Complex term = v[static_cast<std::size_t>(nb.vertex)] * rho[static_cast<std::size_t>(nb.merged_edge)];
        term_scale = std::max(term_scale, std::abs(term));
        p += term;
    }
    return p;
}

} // namespace

ComplexImpedanceResult effective_complex(const Network& net, Complex lambda, double tol) {
    DirichletOutcome outcome = solve_complex(net, lambda, tol);

    ComplexImpedanceResult out;
    out.lambda = lambda;
    out.cls = outcome.cls;
    if (outcome.cls == SolutionClass::None) {
        out.Z = ExtComplex::of(Complex{});
        out.P = ExtComplex::inf();
        return out;
    }

    std::vector<Complex> rho = net.admittances_at(lambda, tol);
    double term_scale = 0.0;
    Complex p = admittance_sum_at_source(net, outcome.particular, rho, term_scale);
    out.P = ExtComplex::of(p);
    if (std::abs(p) <= tol * std::max(term_scale, 1e-300)) {
        // The admittance cancels exactly at this lambda; a finite impedance
        // does not exist even though the voltage does.
        out.Z = ExtComplex::inf();
    } else {
        out.Z = ExtComplex::of(1.0 / p);
    }
    return out;
}

SymbolicImpedanceResult effective_symbolic(const Network& net) {
    SymbolicSolution v = solve_symbolic(net);

    RationalFunction p;
    for (const auto& nb : net.neighbors(net.a0()))
        p += v.values[static_cast<std::size_t>(nb.vertex)] *
             net.merged_edges()[static_cast<std::size_t>(nb.merged_edge)].admittance;

    SymbolicImpedanceResult out;
    out.P = p;
    out.Z = p.reciprocal(); // p > 0: the solution is nonconstant on a connected graph
    return out;
}

Complex energy_complex(const Network& net, const VertexFunction<Complex>& v, Complex lambda, double tol) {
    std::vector<Complex> rho = net.admittances_at(lambda, tol);
    Complex total{};
    const auto& merged = net.merged_edges();
    for (std::size_t i = 0; i < merged.size(); ++i) {
        Complex grad = v[static_cast<std::size_t>(merged[i].v)] - v[static_cast<std::size_t>(merged[i].u)];
        total += std::norm(grad) * rho[i];
    }
    return total;
}

RationalFunction energy_symbolic(const Network& net, const VertexFunction<RationalFunction>& v) {
    // Terms with the same denominator are summed as plain polynomials
    // first; only the handful of distinct denominators go through the
    // reducing rational-function addition.
    std::map<std::vector<Rational>, Polynomial> buckets;
    for (const auto& e : net.merged_edges()) {
        RationalFunction grad = v[static_cast<std::size_t>(e.v)] - v[static_cast<std::size_t>(e.u)];
        if (grad.is_zero()) continue;
        RationalFunction square = grad * grad;
        buckets[(square.den() * e.admittance.den()).coeffs()] += square.num() * e.admittance.num();
    }

    RationalFunction total;
    for (const auto& [den_coeffs, bucket_num] : buckets) {
        if (bucket_num.is_zero()) continue;
        std::vector<Rational> coeffs = den_coeffs;
        total += RationalFunction(bucket_num, Polynomial(std::move(coeffs)));
    }
    return total;
}

ComparisonReport compare_impedances(const Network& net, Complex lambda, double tol) {
    if (!net.all_weights_positive())
        throw ValidationError("comparison needs positive edge weights; the exact impedance is undefined here");

    ComplexImpedanceResult numeric = effective_complex(net, lambda);
    SymbolicImpedanceResult exact = effective_symbolic(net);

    ComparisonReport report;
    report.lambda = lambda;
    report.Z1 = numeric.Z;
    switch (numeric.cls) {
        case SolutionClass::Unique: report.note = CompareNote::Generic; break;
        case SolutionClass::Multiple: report.note = CompareNote::SingularMultiple; break;
        case SolutionClass::None: report.note = CompareNote::SingularNone; break;
    }

    try {
        report.Z2 = ExtComplex::of(exact.Z.eval(lambda));
    } catch (const PoleError&) {
        report.z2_pole = true;
        report.note = CompareNote::Pole;
        report.agree = numeric.Z.infinite;
        return report;
    }

    if (numeric.Z.infinite) {
        report.agree = false;
    } else {
        report.agree = std::abs(numeric.Z.value - report.Z2.value) <= tol * std::max(1.0, std::abs(report.Z2.value));
    }
    return report;
}

std::vector<SweepRow> sweep(const Network& net, double omega_min, double omega_max, int points,
                            bool log_spacing, double tol) {
    if (!(omega_min > 0.0) || omega_max < omega_min || points < 1)
        throw ValidationError("sweep needs 0 < omega_min <= omega_max and points >= 1");

    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(points));
    for (int k = 0; k < points; ++k) {
        double t = points == 1 ? 0.0 : static_cast<double>(k) / (points - 1);
        double omega = log_spacing ? omega_min * std::pow(omega_max / omega_min, t)
                                   : omega_min + (omega_max - omega_min) * t;
        SweepRow row;
        row.omega = omega;
        try {
            row.result = effective_complex(net, Complex(0.0, omega), tol);
        } catch (const PoleError&) {
            row.status = SweepRowStatus::Pole;
            row.result.lambda = Complex(0.0, omega);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace zeff
