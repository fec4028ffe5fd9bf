#pragma once

namespace zeff::defaults {

// All complex-side zero tests are relative: a value x counts as zero when
// |x| <= tolerance * scale, with the scale supplied by the surrounding
// computation (matrix magnitude, polynomial magnitude at the point, ...).
inline constexpr double zero_tolerance = 1e-10;

// Pivot threshold for rank decisions in the complex elimination.
inline constexpr double rank_tolerance = 1e-10;

// Relative tolerance when comparing the two impedance definitions.
inline constexpr double comparison_tolerance = 1e-8;

// Residual target and iteration cap for the simultaneous root iteration.
inline constexpr double root_tolerance = 1e-10;
inline constexpr int root_max_iterations = 400;

} // namespace zeff::defaults
