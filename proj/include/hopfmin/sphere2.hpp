#pragma once

#include <vector>

#include "hopfmin/errors.hpp"
#include "hopfmin/quaternion.hpp"
#include "hopfmin/tolerances.hpp"

namespace hopfmin {

/// True when q is a point of the unit two-sphere: pure imaginary, norm 1.
[[nodiscard]] inline bool is_s2_point(const quat& q, double eps = tol::unit) {
  return std::abs(q.t) <= eps && std::abs(q.norm() - 1.0) <= eps;
}

/// acos clamped to [-1, 1] so roundoff at the endpoints cannot produce NaN.
[[nodiscard]] inline double clamped_acos(double c) {
  if (c > 1.0) c = 1.0;
  if (c < -1.0) c = -1.0;
  return std::acos(c);
}

/// Unit-speed geodesic arc on the unit two-sphere:
/// p(s) = start·cos s + tangent·sin s for s ∈ [0, length].
struct arc2 {
  quat start;   ///< pure unit point
  quat tangent; ///< pure unit direction, orthogonal to start
  double length = 0.0;

  /// @throws error{errc::not_tangent} when start/tangent fail unit or
  /// orthogonality checks.
  arc2(const quat& start_, const quat& tangent_, double length_);

  [[nodiscard]] quat point_at(double s) const {
    return start * std::cos(s) + tangent * std::sin(s);
  }
  [[nodiscard]] quat tangent_at(double s) const {
    return start * -std::sin(s) + tangent * std::cos(s);
  }
  [[nodiscard]] quat end() const { return point_at(length); }
  [[nodiscard]] quat end_tangent() const { return tangent_at(length); }

  /// Arc of the given length leaving a in the direction of b (great circle
  /// through a and b).  @throws error{errc::not_tangent} if a, b are equal or
  /// antipodal so the direction is undefined.
  [[nodiscard]] static arc2 toward(const quat& a, const quat& b, double length);

  /// The shorter arc joining a to b.
  [[nodiscard]] static arc2 between(const quat& a, const quat& b);
};

/// Closed chain of geodesic arcs: arc i ends where arc i+1 (cyclically)
/// starts.  Traversal order is meaningful; the enclosed region "on the left"
/// is the one the traversal keeps to its left seen from outside the sphere.
class polygon2 {
public:
  /// @throws error{errc::degenerate_polygon} when the chain does not close
  /// or consecutive arcs are broken.
  explicit polygon2(std::vector<arc2> arcs);

  [[nodiscard]] const std::vector<arc2>& arcs() const { return arcs_; }
  [[nodiscard]] std::size_t size() const { return arcs_.size(); }

private:
  std::vector<arc2> arcs_;
};

enum class region_side { left, right };

/// Parallel transport of the tangent vector v along the arc (closed form:
/// the component along the moving tangent rotates with the frame, the
/// binormal component is constant).
/// @throws error{errc::not_tangent} when v is not tangent at arc.start.
[[nodiscard]] quat parallel_transport(const quat& v, const arc2& arc);

/// Area of the region to the LEFT of the traversal: Σ(interior angles on the
/// left) − (n−2)π.  The region on the other side has area 4π − result.
/// @throws error{errc::degenerate_polygon} when consecutive arcs double back
/// (turn angle ±π), leaving the interior angle undefined.
[[nodiscard]] double polygon_area(const polygon2& poly);

/// Rotation angle Θ ∈ (0, 2π] picked up by parallel transport around the
/// polygon, measured for the region on the given side: transporting v around
/// a region of area A on the left returns the right-hand rotation of v by A
/// about the outward normal (and a left-hand rotation for the right region).
/// Equals the enclosed area mod 2π, with a full-circle holonomy reported
/// as 2π.
[[nodiscard]] double holonomy_angle(const polygon2& poly, region_side side);

/// Distinguished directions of the regular spherical tessellations, with the
/// constants entering the icosahedral vertex coordinates.
namespace special {
/// cos of the icosahedral edge i–v_ico: (√5+1)/(2√3).
inline const double mu = (std::sqrt(5.0) + 1.0) / (2.0 * std::sqrt(3.0));
/// sin companion of mu: (√5−1)/(2√3).
inline const double sigma = (std::sqrt(5.0) - 1.0) / (2.0 * std::sqrt(3.0));
/// cos of the icosahedral edge i–v_ico_adj: √(10+2√5)/(2√5).
inline const double nu = std::sqrt(10.0 + 2.0 * std::sqrt(5.0)) / (2.0 * std::sqrt(5.0));
/// sin companion of nu: √(10−2√5)/(2√5).
inline const double kappa = std::sqrt(10.0 - 2.0 * std::sqrt(5.0)) / (2.0 * std::sqrt(5.0));

/// Tetrahedral vertex direction (i+j+k)/√3.
inline const quat v_tet = quat{0, 1, 1, 1} / std::sqrt(3.0);
/// Adjacent tetrahedral vertex direction (i+j−k)/√3.
inline const quat v_tet_adj = quat{0, 1, 1, -1} / std::sqrt(3.0);
/// Octahedral edge-midpoint direction (i+j)/√2.
inline const quat v_oct = quat{0, 1, 1, 0} / std::sqrt(2.0);
/// Icosahedral vertex direction μi + σj.
inline const quat v_ico = quat{0, mu, sigma, 0};
/// Adjacent icosahedral vertex direction νi − κk.
inline const quat v_ico_adj = quat{0, nu, 0, -kappa};
} // namespace special

} // namespace hopfmin
