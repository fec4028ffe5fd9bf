#include "zeff/rational_function.hpp"

#include "zeff/defaults.hpp"
#include "zeff/errors.hpp"

#include <cmath>
#include <utility>

namespace zeff {

namespace {

// Rescales the pair in place to coprime integer coefficients with a
// positive-leading denominator. Assumes num/den are already coprime as
// polynomials and den is nonzero.
void canonicalize_pair(Polynomial& num, Polynomial& den) {
    if (num.is_zero()) {
        den = Polynomial::constant(1);
        return;
    }
    Integer den_lcm = 1;
    for (const auto& c : num.coeffs()) den_lcm = lcm(den_lcm, denominator(c));
    for (const auto& c : den.coeffs()) den_lcm = lcm(den_lcm, denominator(c));
    Integer num_gcd = 0;
    for (const auto& c : num.coeffs()) num_gcd = gcd(num_gcd, numerator(c) * (den_lcm / denominator(c)));
    for (const auto& c : den.coeffs()) num_gcd = gcd(num_gcd, numerator(c) * (den_lcm / denominator(c)));
    Rational factor(den_lcm, num_gcd);
    if (den.leading() < 0) factor = -factor;
    num *= factor;
    den *= factor;
}

} // namespace

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
    if (den.is_zero()) throw ValidationError("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = Polynomial{};
        den_ = Polynomial::constant(1);
        return;
    }
    Polynomial g = poly_gcd(num, den);
    if (g.degree() > 0) {
        num = poly_div_exact(num, g);
        den = poly_div_exact(den, g);
    }
    canonicalize_pair(num, den);
    num_ = std::move(num);
    den_ = std::move(den);
}

RationalFunction RationalFunction::variable() { return RationalFunction(Polynomial::variable()); }

int RationalFunction::sign() const {
    if (num_.is_zero()) return 0;
    return num_.leading() > 0 ? 1 : -1; // den leading is positive by construction
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction out = *this;
    out.num_ = -out.num_;
    return out;
}

RationalFunction RationalFunction::reciprocal() const {
    if (is_zero()) throw ValidationError("reciprocal of the zero rational function");
    RationalFunction out;
    out.num_ = den_;
    out.den_ = num_;
    if (out.den_.leading() < 0) {
        out.num_ *= Rational(-1);
        out.den_ *= Rational(-1);
    }
    return out;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) return *this = rhs;
    // Combine over gcd(d1, d2) so the final reduction only has to look at
    // the shared part (Henrici's scheme); with coprime denominators the
    // result is already reduced.
    Polynomial g = poly_gcd(den_, rhs.den_);
    if (g.degree() == 0) {
        Polynomial num = num_ * rhs.den_ + rhs.num_ * den_;
        Polynomial den = den_ * rhs.den_;
        if (num.is_zero()) return *this = RationalFunction{};
        canonicalize_pair(num, den);
        num_ = std::move(num);
        den_ = std::move(den);
        return *this;
    }
    Polynomial d1 = poly_div_exact(den_, g);
    Polynomial d2 = poly_div_exact(rhs.den_, g);
    Polynomial num = num_ * d2 + rhs.num_ * d1;
    if (num.is_zero()) return *this = RationalFunction{};
    Polynomial g2 = poly_gcd(num, g);
    Polynomial den = d1 * d2;
    if (g2.degree() > 0) {
        num = poly_div_exact(num, g2);
        den *= poly_div_exact(g, g2);
    } else {
        den *= g;
    }
    canonicalize_pair(num, den);
    num_ = std::move(num);
    den_ = std::move(den);
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) { return *this += -rhs; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
    if (is_zero() || rhs.is_zero()) return *this = RationalFunction{};
    // Cross-cancel before multiplying; the product of the reduced parts is
    // reduced, so no full-size gcd is ever taken.
    Polynomial g1 = poly_gcd(num_, rhs.den_);
    Polynomial g2 = poly_gcd(rhs.num_, den_);
    Polynomial n1 = g1.degree() > 0 ? poly_div_exact(num_, g1) : num_;
    Polynomial d2 = g1.degree() > 0 ? poly_div_exact(rhs.den_, g1) : rhs.den_;
    Polynomial n2 = g2.degree() > 0 ? poly_div_exact(rhs.num_, g2) : rhs.num_;
    Polynomial d1 = g2.degree() > 0 ? poly_div_exact(den_, g2) : den_;
    Polynomial num = n1 * n2;
    Polynomial den = d1 * d2;
    canonicalize_pair(num, den);
    num_ = std::move(num);
    den_ = std::move(den);
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
    if (rhs.is_zero()) throw ValidationError("division by the zero rational function");
    return *this *= rhs.reciprocal();
}

std::strong_ordering RationalFunction::operator<=>(const RationalFunction& rhs) const {
    if (*this == rhs) return std::strong_ordering::equal;
    int s = (*this - rhs).sign();
    return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

bool RationalFunction::has_pole_at(Complex x, double tol) const {
    return std::abs(den_.eval(x)) <= tol * den_.magnitude_at(x);
}

Complex RationalFunction::eval(Complex x, double tol) const {
    Complex d = den_.eval(x);
    if (std::abs(d) <= tol * den_.magnitude_at(x))
        throw PoleError("evaluation at a pole of " + to_string());
    return num_.eval(x) / d;
}

Complex RationalFunction::eval(Complex x) const { return eval(x, defaults::zero_tolerance); }

std::string RationalFunction::to_string(std::string_view var) const {
    if (den_ == Polynomial::constant(1)) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

} // namespace zeff
