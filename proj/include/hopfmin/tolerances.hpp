#pragma once

namespace hopfmin::tol {

/// Unit-norm / exact-identity checks on quaternions and vectors.
inline constexpr double unit = 1e-9;

/// Matching group elements during closures and membership tests.
inline constexpr double group = 1e-7;

/// Holonomy and lift-displacement comparisons against enclosed areas.
inline constexpr double holonomy = 1e-8;

/// Welding distance for boundary vertices when assembling closed surfaces.
inline constexpr double weld = 1e-6;

/// Edge-length / corner-angle agreement with the classified quadrilateral data.
inline constexpr double quad_table = 1e-9;

/// Acceptable orthogonality defect for common-perpendicular constructions.
inline constexpr double perpendicular = 1e-9;

/// Default convergence threshold for the area minimizer (max projected
/// gradient norm over free vertices).
inline constexpr double gradient = 1e-8;

/// Distance from the projection pole below which stereographic projection
/// refuses to evaluate.
inline constexpr double pole = 1e-6;

} // namespace hopfmin::tol
