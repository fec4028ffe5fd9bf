#pragma once

#include "zeff/polynomial.hpp"

#include <compare>
#include <string>

namespace zeff {

/// Element of the field of real rational functions of the frequency
/// variable, kept in a canonical form:
///   - numerator and denominator are coprime polynomials,
///   - both have coprime integer coefficients (no common rational content),
///   - the denominator's leading coefficient is positive,
///   - zero is 0/1.
///
/// The canonical form makes operator== mathematical equality and makes the
/// sign of the numerator's leading coefficient well-defined, which is what
/// the total order below reads: f > 0 iff the ratio of the leading
/// coefficients of numerator and denominator is positive. The order is
/// non-Archimedean; the variable itself exceeds every constant.
class RationalFunction {
public:
    RationalFunction() : num_{}, den_{Rational(1)} {}
    RationalFunction(Polynomial num, Polynomial den);
    explicit RationalFunction(Polynomial num) : RationalFunction(std::move(num), Polynomial::constant(1)) {}
    explicit RationalFunction(Rational c) : RationalFunction(Polynomial::constant(std::move(c))) {}

    /// The function λ.
    static RationalFunction variable();
    static RationalFunction one() { return RationalFunction(Rational(1)); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    /// -1, 0, +1 in the leading-coefficient order.
    int sign() const;
    bool is_positive() const { return sign() > 0; }

    RationalFunction operator-() const;
    RationalFunction reciprocal() const;

    RationalFunction& operator+=(const RationalFunction& rhs);
    RationalFunction& operator-=(const RationalFunction& rhs);
    RationalFunction& operator*=(const RationalFunction& rhs);
    RationalFunction& operator/=(const RationalFunction& rhs);

    friend RationalFunction operator+(RationalFunction lhs, const RationalFunction& rhs) { return lhs += rhs; }
    friend RationalFunction operator-(RationalFunction lhs, const RationalFunction& rhs) { return lhs -= rhs; }
    friend RationalFunction operator*(RationalFunction lhs, const RationalFunction& rhs) { return lhs *= rhs; }
    friend RationalFunction operator/(RationalFunction lhs, const RationalFunction& rhs) { return lhs /= rhs; }

    bool operator==(const RationalFunction& rhs) const = default;

    /// Total order: f <=> g by the sign of f - g.
    std::strong_ordering operator<=>(const RationalFunction& rhs) const;

    /// num(x)/den(x) in double-precision complex arithmetic. Throws
    /// PoleError when den(x) vanishes relative to its magnitude at x.
    Complex eval(Complex x, double tol) const;
    Complex eval(Complex x) const;

    /// Whether x is (numerically) a zero of the denominator.
    bool has_pole_at(Complex x, double tol) const;

    std::string to_string(std::string_view var = "lambda") const;

private:
    Polynomial num_;
    Polynomial den_;
};

} // namespace zeff
