#include "zeff/roots.hpp"

#include "zeff/errors.hpp"
#include "zeff/rng.hpp"
#include "support/fixtures.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace zeff;
using zeff::tests::poly;

namespace {

// Back-substitution oracle: Horner evaluation written independently of
// Polynomial::eval.
Complex horner(const std::vector<double>& ascending, Complex x) {
    Complex acc = 0.0;
    for (std::size_t i = ascending.size(); i-- > 0;) acc = acc * x + ascending[i];
    return acc;
}

bool contains_root(const std::vector<Complex>& roots, Complex expected, double tol) {
    return std::any_of(roots.begin(), roots.end(),
                       [&](Complex r) { return std::abs(r - expected) <= tol; });
}

double hausdorff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    double worst = 0.0;
    for (Complex x : a) {
        double best = 1e300;
        for (Complex y : b) best = std::min(best, std::abs(x - y));
        worst = std::max(worst, best);
    }
    for (Complex y : b) {
        double best = 1e300;
        for (Complex x : a) best = std::min(best, std::abs(x - y));
        worst = std::max(worst, best);
    }
    return worst;
}

} // namespace

TEST_CASE("simple quadratics") {
    auto roots = poly_roots(poly({1, 0, 1}));
    REQUIRE(roots.size() == 2);
    CHECK(contains_root(roots, Complex(0, 1), 1e-12));
    CHECK(contains_root(roots, Complex(0, -1), 1e-12));
}

TEST_CASE("product of two resonances") {
    // (3x^2+1)(x^2+2) = 3x^4 + 7x^2 + 2
    auto roots = poly_roots(poly({2, 0, 7, 0, 3}));
    REQUIRE(roots.size() == 4);
    CHECK(contains_root(roots, Complex(0, std::sqrt(2.0)), 1e-10));
    CHECK(contains_root(roots, Complex(0, -std::sqrt(2.0)), 1e-10));
    CHECK(contains_root(roots, Complex(0, 1.0 / std::sqrt(3.0)), 1e-10));
    CHECK(contains_root(roots, Complex(0, -1.0 / std::sqrt(3.0)), 1e-10));
}

TEST_CASE("cubic with one negative real root, residuals checked independently") {
    Polynomial p = poly({1, 3, 1, 1});
    auto roots = poly_roots(p);
    REQUIRE(roots.size() == 3);
    int real_count = 0;
    for (Complex r : roots) {
        if (std::abs(r.imag()) < 1e-8) {
            ++real_count;
            CHECK(r.real() < 0);
        }
        CHECK(std::abs(horner({1, 3, 1, 1}, r)) < 1e-10);
    }
    CHECK(real_count == 1);
}

TEST_CASE("multiple roots keep their multiplicity") {
    // (x^2+1)^2
    auto roots = poly_roots(poly({1, 0, 2, 0, 1}));
    REQUIRE(roots.size() == 4);
    CHECK(std::count_if(roots.begin(), roots.end(),
                        [](Complex r) { return std::abs(r - Complex(0, 1)) < 1e-9; }) == 2);
}

TEST_CASE("preconditions and failure reporting") {
    CHECK_THROWS_AS(poly_roots(poly({3})), std::invalid_argument);
    CHECK_THROWS_AS(poly_roots(Polynomial{}), std::invalid_argument);
    try {
        poly_roots(poly({1, 0, 1}), 0.0, 3); // unreachable residual target
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(e.best_iterate().size() == 2);
        CHECK(e.residual() > 0.0);
    }
}

TEST_CASE("expanding a known root set and re-solving recovers it") {
    Rng rng(313);
    const Rational grid[] = {Rational(-3, 4), Rational(-1, 2), Rational(-1, 4), Rational(1, 4),
                             Rational(1, 2),  Rational(3, 4),  Rational(1, 8),  Rational(-5, 8)};
    int instances = 0;
    while (instances < 25) {
        // conjugate-closed set: real roots and conjugate pairs with rational
        // data, so the expanded polynomial has rational coefficients
        std::vector<Complex> expected;
        Polynomial p{1};
        int pairs = rng.uniform_int(0, 3);
        int reals = rng.uniform_int(pairs == 0 ? 1 : 0, 2);
        for (int k = 0; k < pairs; ++k) {
            Rational re = grid[rng.uniform_int(0, 7)];
            Rational im = grid[rng.uniform_int(0, 7)];
            // x^2 - 2 re x + (re^2 + im^2)
            p *= Polynomial{re * re + im * im, Rational(-2) * re, Rational(1)};
            double red = static_cast<double>(re), imd = std::abs(static_cast<double>(im));
            expected.emplace_back(red, imd);
            expected.emplace_back(red, -imd);
        }
        for (int k = 0; k < reals; ++k) {
            Rational r = grid[rng.uniform_int(0, 7)];
            p *= Polynomial{-r, Rational(1)};
            expected.emplace_back(static_cast<double>(r), 0.0);
        }
        if (expected.size() > 6) continue;
        bool separated = true;
        for (std::size_t i = 0; i < expected.size() && separated; ++i) {
            for (std::size_t j = i + 1; j < expected.size(); ++j) {
                if (std::abs(expected[i] - expected[j]) < 0.1) {
                    separated = false;
                    break;
                }
            }
        }
        if (!separated) continue;
        ++instances;

        auto found = poly_roots(p);
        REQUIRE(found.size() == expected.size());
        CHECK(hausdorff(found, expected) < 1e-6);
    }
}
