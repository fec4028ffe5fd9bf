#include "zeff/polynomial.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace zeff {

namespace {
const Rational kZero = 0;
}

Polynomial Polynomial::constant(Rational c) {
    Polynomial p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

Polynomial Polynomial::variable() { return Polynomial{0, 1}; }

Polynomial Polynomial::monomial(Rational c, int k) {
    Polynomial p;
    if (c != 0) {
        p.coeffs_.assign(static_cast<std::size_t>(k) + 1, kZero);
        p.coeffs_.back() = std::move(c);
    }
    return p;
}

const Rational& Polynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& Polynomial::leading() const {
    if (is_zero()) throw std::logic_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), kZero);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), kZero);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return Polynomial{};
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, kZero);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial{};
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * Rational(static_cast<int>(k));
    return Polynomial(std::move(out));
}

Complex Polynomial::eval(Complex x) const {
    Complex acc = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + static_cast<double>(coeffs_[i]);
    return acc;
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

double Polynomial::magnitude_at(Complex x) const {
    double ax = std::abs(x);
    double acc = 0.0;
    double power = 1.0;
    for (const auto& c : coeffs_) {
        acc += std::abs(static_cast<double>(c)) * power;
        power *= ax;
    }
    return acc;
}

std::string Polynomial::to_string(std::string_view var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeff(k);
        if (c == 0) continue;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        Rational mag = abs(c);
        if (mag != 1 || k == 0) out << format_rational(mag) << (k > 0 ? "*" : "");
        if (k > 0) {
            out << var;
            if (k > 1) out << "^" << k;
        }
        first = false;
    }
    return out.str();
}

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial{}, a};

    std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, 0);
    const auto& d = b.coeffs();
    const Rational& lead = b.leading();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Rational q = rem[static_cast<std::size_t>(k + b.degree())] / lead;
        quo[static_cast<std::size_t>(k)] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j < d.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= q * d[j];
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial poly_div_exact(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("polynomial division expected to be exact");
    return q;
}

Polynomial poly_primitive(const Polynomial& p) {
    if (p.is_zero()) return p;
    Integer den_lcm = 1;
    for (const auto& c : p.coeffs()) den_lcm = lcm(den_lcm, denominator(c));
    Integer num_gcd = 0;
    for (const auto& c : p.coeffs()) {
        Integer scaled = numerator(c) * (den_lcm / denominator(c));
        num_gcd = gcd(num_gcd, scaled);
    }
    Rational factor(den_lcm, num_gcd); // num_gcd > 0 since p != 0
    Polynomial out = p;
    out *= p.leading() < 0 ? Rational(-factor) : factor;
    return out;
}

Polynomial poly_monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    Polynomial out = p;
    out *= Rational(1) / p.leading();
    return out;
}

namespace {

// Integer-coefficient workhorses for the gcd: the remainder sequence runs
// entirely on integers (pseudo-division), with the content stripped after
// every step to keep the coefficients small.

std::vector<Integer> integer_primitive(std::vector<Integer> c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    if (c.empty()) return c;
    Integer content = 0;
    for (const Integer& x : c) content = gcd(content, x);
    if (c.back() < 0) content = -content;
    for (Integer& x : c) x /= content;
    return c;
}

std::vector<Integer> to_integer_primitive(const Polynomial& p) {
    Integer den_lcm = 1;
    for (const auto& c : p.coeffs()) den_lcm = lcm(den_lcm, denominator(c));
    std::vector<Integer> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(numerator(c) * (den_lcm / denominator(c)));
    return integer_primitive(std::move(out));
}

std::vector<Integer> pseudo_remainder(std::vector<Integer> r, const std::vector<Integer>& b) {
    const std::size_t db = b.size() - 1;
    const Integer& lead_b = b.back();
    while (r.size() > db) {
        Integer lead_r = r.back();
        r.pop_back();
        std::size_t shift = r.size() - db;
        for (std::size_t i = 0; i < r.size(); ++i) {
            r[i] *= lead_b;
            if (i >= shift) r[i] -= lead_r * b[i - shift];
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        if (r.size() <= db) break;
    }
    return r;
}

} // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd(0, 0) is undefined");
    if (a.is_zero()) return poly_monic(b);
    if (b.is_zero()) return poly_monic(a);

    std::vector<Integer> big = to_integer_primitive(a);
    std::vector<Integer> small = to_integer_primitive(b);
    if (big.size() < small.size()) std::swap(big, small);
    while (!small.empty()) {
        std::vector<Integer> rem = pseudo_remainder(big, small);
        big = std::move(small);
        small = integer_primitive(std::move(rem));
    }

    std::vector<Rational> out;
    out.reserve(big.size());
    for (Integer& x : big) out.emplace_back(std::move(x));
    return poly_monic(Polynomial(std::move(out)));
}

std::vector<std::pair<Polynomial, int>> square_free_decomposition(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("square-free decomposition of zero");
    std::vector<std::pair<Polynomial, int>> parts;
    if (p.degree() < 1) return parts;

    // Yun's algorithm over characteristic zero.
    Polynomial d = p.derivative();
    Polynomial a = poly_gcd(p, d);
    Polynomial b = poly_div_exact(p, a);
    Polynomial c = poly_div_exact(d, a);
    int multiplicity = 1;
    while (b.degree() >= 1) {
        Polynomial step = c - b.derivative();
        Polynomial factor = step.is_zero() ? poly_monic(b) : poly_gcd(b, step);
        if (factor.degree() >= 1) parts.emplace_back(factor, multiplicity);
        b = poly_div_exact(b, factor);
        c = step.is_zero() ? Polynomial{} : poly_div_exact(step, factor);
        ++multiplicity;
    }
    return parts;
}

} // namespace zeff
