#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace zeff {

// Exact coefficient domain: GMP integers/rationals behind the
// boost::multiprecision value interface. The wrapper keeps rationals
// canonical (reduced, positive denominator, zero as 0/1), which is exactly
// the invariant the rest of the library relies on.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Parses "p/q", a decimal string ("0.5", ".25", "3."), or a plain integer,
/// exactly; decimals never go through binary floating point. Throws
/// std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// Renders as "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& value);

inline int sign(const Rational& value) { return value.sign(); }

} // namespace zeff
