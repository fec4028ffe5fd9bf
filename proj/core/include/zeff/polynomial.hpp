#pragma once

#include "zeff/rational.hpp"

#include <complex>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace zeff {

using Complex = std::complex<double>;

/// Dense univariate polynomial in the frequency variable with exact rational
/// coefficients, stored by ascending power. The zero polynomial is the empty
/// coefficient vector and reports the sentinel degree below.
class Polynomial {
public:
    /// degree() of the zero polynomial; never confuse it with degree 0.
    static constexpr int kZeroDegree = -1;

    Polynomial() = default;
    Polynomial(std::initializer_list<Rational> ascending) : coeffs_(ascending) { trim(); }
    explicit Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

    static Polynomial constant(Rational c);
    /// The monomial λ.
    static Polynomial variable();
    /// Expands c * λ^k.
    static Polynomial monomial(Rational c, int k);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    /// Coefficient of λ^k; zero beyond the degree.
    const Rational& coeff(int k) const;
    const Rational& leading() const; // requires a nonzero polynomial

    bool is_constant() const { return coeffs_.size() <= 1; }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& scalar);

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    friend Polynomial operator*(Polynomial lhs, const Rational& scalar) { return lhs *= scalar; }
    friend Polynomial operator*(const Rational& scalar, Polynomial rhs) { return rhs *= scalar; }

    bool operator==(const Polynomial& rhs) const = default;

    Polynomial derivative() const;

    /// Horner evaluation after converting coefficients to doubles.
    Complex eval(Complex x) const;
    /// Exact evaluation at a rational point.
    Rational eval(const Rational& x) const;

    /// Sum of |c_k| |x|^k: the natural magnitude scale for residual tests
    /// at the point x.
    double magnitude_at(Complex x) const;

    /// Debug rendering such as "3*x^2 - 1/2".
    std::string to_string(std::string_view var = "lambda") const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// Quotient and remainder of exact division; the divisor must be nonzero.
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b);

/// Division known to be exact; throws if a remainder appears.
Polynomial poly_div_exact(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor via a content-normalized Euclidean
/// remainder sequence. Rejects the (0, 0) input.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

/// Scales so that all coefficients are coprime integers and the leading one
/// is positive. Zero stays zero.
Polynomial poly_primitive(const Polynomial& p);

/// p / leading coefficient.
Polynomial poly_monic(const Polynomial& p);

/// Factors p into pairwise coprime square-free parts: p = c * prod f_i^{m_i}
/// with strictly increasing multiplicities m_i. Returned as (f_i, m_i).
std::vector<std::pair<Polynomial, int>> square_free_decomposition(const Polynomial& p);

} // namespace zeff
