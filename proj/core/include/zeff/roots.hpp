#pragma once

#include "zeff/defaults.hpp"
#include "zeff/polynomial.hpp"

#include <vector>

namespace zeff {

/// All complex roots of p, with multiplicity, sorted by (re, im).
///
/// The polynomial is first split into exact square-free parts, then each
/// part is solved by simultaneous (Durand-Kerner) iteration started on a
/// circle of radius 1 + max|c_i/c_n|, rotated by a fixed irrational angle
/// so the start never sits symmetrically on the root set. Every returned
/// root satisfies |p(root)| <= tol * (sum_k |c_k| |root|^k).
///
/// Requires degree >= 1. Throws ConvergenceError with the best iterate if
/// some part fails to converge within max_iter sweeps.
std::vector<Complex> poly_roots(const Polynomial& p, double tol = defaults::root_tolerance,
                                int max_iter = defaults::root_max_iterations);

/// The raw simultaneous iteration on a monic polynomial given by ascending
/// complex coefficients (the constant term first, the leading coefficient
/// of 1 omitted). Exposed for tests and callers that already have
/// floating-point coefficients.
std::vector<Complex> durand_kerner(const std::vector<Complex>& monic_ascending, double tol, int max_iter);

} // namespace zeff
