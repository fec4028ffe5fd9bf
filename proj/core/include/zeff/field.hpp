#pragma once

#include "zeff/defaults.hpp"
#include "zeff/rational_function.hpp"

#include <cmath>
#include <concepts>

namespace zeff {

/// The capability the elimination code needs from a coefficient domain.
/// Instantiated twice: double-precision complex numbers with a tolerance
/// relative to a caller-supplied scale, and exact rational functions.
template <typename F>
concept FieldInstance = requires(const F f, const typename F::Value v) {
    typename F::Value;
    { F::zero() } -> std::same_as<typename F::Value>;
    { F::one() } -> std::same_as<typename F::Value>;
    { F::add(v, v) } -> std::same_as<typename F::Value>;
    { F::sub(v, v) } -> std::same_as<typename F::Value>;
    { F::mul(v, v) } -> std::same_as<typename F::Value>;
    { F::div(v, v) } -> std::same_as<typename F::Value>;
    { F::neg(v) } -> std::same_as<typename F::Value>;
    { f.is_zero(v) } -> std::convertible_to<bool>;
    { F::pivot_merit(v) } -> std::convertible_to<double>;
};

/// Complex numbers with an approximate zero test: x ~ 0 iff
/// |x| <= tolerance * scale. The scale is set by whoever owns the data
/// (for a linear system, the largest initial entry) so rank decisions do
/// not depend on the overall scaling of the problem.
struct ComplexField {
    using Value = Complex;

    double tolerance = defaults::zero_tolerance;
    double scale = 1.0;

    static Value zero() { return {}; }
    static Value one() { return {1.0, 0.0}; }
    static Value add(const Value& a, const Value& b) { return a + b; }
    static Value sub(const Value& a, const Value& b) { return a - b; }
    static Value mul(const Value& a, const Value& b) { return a * b; }
    static Value div(const Value& a, const Value& b) { return a / b; }
    static Value neg(const Value& a) { return -a; }

    bool is_zero(const Value& v) const { return std::abs(v) <= tolerance * scale; }

    // Partial pivoting by magnitude.
    static double pivot_merit(const Value& v) { return std::abs(v); }
};

/// Exact rational functions; zero tests and comparisons are exact.
struct SymbolicField {
    using Value = RationalFunction;

    static Value zero() { return RationalFunction{}; }
    static Value one() { return RationalFunction::one(); }
    static Value add(const Value& a, const Value& b) { return a + b; }
    static Value sub(const Value& a, const Value& b) { return a - b; }
    static Value mul(const Value& a, const Value& b) { return a * b; }
    static Value div(const Value& a, const Value& b) { return a / b; }
    static Value neg(const Value& a) { return -a; }

    bool is_zero(const Value& v) const { return v.is_zero(); }

    // Prefer low-degree pivots; they keep the degrees of the remaining
    // entries from growing.
    static double pivot_merit(const Value& v) {
        return -static_cast<double>(v.num().degree() + v.den().degree());
    }
};

static_assert(FieldInstance<ComplexField>);
static_assert(FieldInstance<SymbolicField>);

} // namespace zeff
