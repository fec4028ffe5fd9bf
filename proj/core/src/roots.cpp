#include "zeff/roots.hpp"

#include "zeff/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zeff {

namespace {

Complex eval_monic(const std::vector<Complex>& low_coeffs, Complex x) {
    Complex acc = 1.0; // leading coefficient
    for (std::size_t i = low_coeffs.size(); i-- > 0;) acc = acc * x + low_coeffs[i];
    return acc;
}

double magnitude_monic(const std::vector<Complex>& low_coeffs, Complex x) {
    double ax = std::abs(x);
    double acc = 1.0;
    for (std::size_t i = low_coeffs.size(); i-- > 0;) acc = acc * ax + std::abs(low_coeffs[i]);
    return acc;
}

bool residuals_ok(const std::vector<Complex>& low_coeffs, const std::vector<Complex>& roots, double tol) {
    for (const Complex& r : roots) {
        if (std::abs(eval_monic(low_coeffs, r)) > tol * magnitude_monic(low_coeffs, r)) return false;
    }
    return true;
}

} // namespace

std::vector<Complex> durand_kerner(const std::vector<Complex>& monic_ascending, double tol, int max_iter) {
    const int n = static_cast<int>(monic_ascending.size());
    if (n == 0) return {};

    double radius = 0.0;
    for (const Complex& c : monic_ascending) radius = std::max(radius, std::abs(c));
    radius += 1.0;

    // Irrational rotation of the start circle; a symmetric start can make
    // the iteration stall on symmetric root sets.
    constexpr double offset = std::numbers::sqrt2 / 2.0;
    std::vector<Complex> roots(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        double angle = 2.0 * std::numbers::pi * k / n + offset;
        roots[static_cast<std::size_t>(k)] = radius * Complex(std::cos(angle), std::sin(angle));
    }

    for (int iter = 0; iter < max_iter; ++iter) {
        double max_step = 0.0;
        for (int i = 0; i < n; ++i) {
            Complex xi = roots[static_cast<std::size_t>(i)];
            Complex denom = 1.0;
            for (int j = 0; j < n; ++j) {
                if (j != i) denom *= xi - roots[static_cast<std::size_t>(j)];
            }
            if (denom == Complex(0.0)) continue; // coincident iterates; let the others move first
            Complex step = eval_monic(monic_ascending, xi) / denom;
            roots[static_cast<std::size_t>(i)] = xi - step;
            max_step = std::max(max_step, std::abs(step));
        }
        // Run to stagnation rather than stopping at the residual target;
        // the extra sweeps are cheap and leave headroom for the acceptance
        // test below.
        if (max_step <= 1e-15 * radius) break;
    }

    if (!residuals_ok(monic_ascending, roots, tol)) {
        double worst = 0.0;
        for (const Complex& r : roots)
            worst = std::max(worst, std::abs(eval_monic(monic_ascending, r)) / magnitude_monic(monic_ascending, r));
        throw ConvergenceError("root iteration did not reach the residual target", roots, worst);
    }
    return roots;
}

std::vector<Complex> poly_roots(const Polynomial& p, double tol, int max_iter) {
    if (p.degree() < 1) throw std::invalid_argument("root finding needs degree >= 1");

    // Deflate roots at the origin exactly; near zero the relative residual
    // scale collapses and the iteration could never certify them.
    std::vector<Complex> all;
    std::size_t zero_multiplicity = 0;
    while (zero_multiplicity < p.coeffs().size() && p.coeffs()[zero_multiplicity] == 0) ++zero_multiplicity;
    Polynomial reduced = p;
    if (zero_multiplicity > 0) {
        all.assign(zero_multiplicity, Complex{});
        reduced = Polynomial(
            std::vector<Rational>(p.coeffs().begin() + static_cast<std::ptrdiff_t>(zero_multiplicity),
                                  p.coeffs().end()));
    }
    if (reduced.degree() < 1) return all;

    for (const auto& [factor, multiplicity] : square_free_decomposition(reduced)) {
        Polynomial monic = poly_monic(factor);
        std::vector<Complex> coeffs;
        coeffs.reserve(static_cast<std::size_t>(monic.degree()));
        for (int k = 0; k < monic.degree(); ++k)
            coeffs.emplace_back(static_cast<double>(monic.coeff(k)), 0.0);
        std::vector<Complex> roots = durand_kerner(coeffs, tol, max_iter);
        for (const Complex& r : roots) {
            for (int m = 0; m < multiplicity; ++m) all.push_back(r);
        }
    }

    // The decomposition is exact, so the residual guarantee should carry
    // over to p itself; verify where the coefficients fit into doubles.
    for (const Complex& r : all) {
        double mag = p.magnitude_at(r);
        double value = std::abs(p.eval(r));
        if (!std::isfinite(mag) || !std::isfinite(value)) continue;
        if (value > tol * std::max(mag, 1e-300))
            throw ConvergenceError("refined roots fail the residual test on the full polynomial", all,
                                   value / mag);
    }

    std::sort(all.begin(), all.end(), [](const Complex& a, const Complex& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return all;
}

} // namespace zeff
