#pragma once

// Shared builders for the worked example networks and a few convenience
// constructors used across the test suites.

#include "zeff/zeff.hpp"

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zeff::tests {

inline Polynomial poly(std::initializer_list<Rational> ascending) { return Polynomial(ascending); }

inline RationalFunction rf(std::initializer_list<Rational> num, std::initializer_list<Rational> den = {1}) {
    return RationalFunction(Polynomial(num), Polynomial(den));
}

inline const RationalFunction kLambda = RationalFunction::variable();

inline int vertex(const Network& net, std::string_view name) {
    auto idx = net.vertex_index(name);
    if (!idx) throw std::out_of_range("no vertex " + std::string(name));
    return *idx;
}

inline EdgeParams resistor(Rational r) { return EdgeParams::rlc(std::move(r), 0, 0); }
inline EdgeParams inductor(Rational l) { return EdgeParams::rlc(0, std::move(l), 0); }
/// A capacitor with capacitance c carries elastance 1/c.
inline EdgeParams capacitor(Rational c) { return EdgeParams::rlc(0, 0, Rational(1) / c); }

/// a0 -- x -- a1 with two unit resistors.
Network resistor_path();

/// The five-vertex RLC network with a multiple-solution frequency at
/// sqrt(2/LC) and an unsolvable one at sqrt(1/(3LC)).
Network solutions_network(const Rational& r = 1, const Rational& l = 1, const Rational& c = 1);

/// The four-vertex bridge with admittances lambda, 1/lambda and
/// 1/(lambda+1); singular exactly at lambda = i.
Network nontrivial_network();

/// Same graph as nontrivial_network but with the middle edge written as a
/// raw weight in raw mode.
Network nontrivial_network_raw();

/// The sign-flipped weighting (+-lambda) whose determinant vanishes
/// identically; not an electrical network.
Network minus_lambda_network();

/// Positive raw weights, one of which is not of single-edge RLC form; the
/// two impedance definitions disagree at lambda = i.
Network non_pos_w_network();

/// The five-vertex network whose impedance definitions agree at lambda = i
/// but differ at lambda = -1.
Network complex_omega_network();

} // namespace zeff::tests
