#pragma once

#include <utility>
#include <vector>

#include "hopfmin/rotation.hpp"
#include "hopfmin/sphere2.hpp"

namespace hopfmin {

/// True when r lies on the radius-2 three-sphere.
[[nodiscard]] inline bool is_s3_point(const quat& r, double eps = tol::unit) {
  return std::abs(r.norm() - 2.0) <= eps;
}

/// Geodesic distance on the radius-2 three-sphere via the half-chord asin
/// formula (well-conditioned for nearby points, unlike acos of the inner
/// product).
[[nodiscard]] inline double geodesic_distance3(const quat& a, const quat& b) {
  const double half_chord = distance(a, b) / 4.0;
  return 4.0 * std::asin(half_chord > 1.0 ? 1.0 : half_chord);
}

/// Projection of the radius-2 three-sphere onto the unit two-sphere,
/// P(r) = r̄ i r / 4.  Fibres P⁻¹(u) = {e^{iθ/2} r₀} are great circles of
/// length 4π; the map multiplies horizontal lengths by 1.
[[nodiscard]] quat hopf_project(const quat& r);

/// A deterministic point on the fibre over u: rotates i to u about the axis
/// u×i (u = ±i handled specially).  Satisfies P(fiber_through(u)) = u and
/// |result| = 2.
[[nodiscard]] quat fiber_through(const quat& u);

/// Unit-speed great-circle arc on the radius-2 three-sphere:
/// r(s) = start·cos(s/2) + 2·tangent·sin(s/2) for s ∈ [0, length].
/// tangent is the unit initial velocity; one full circle has length 4π.
struct arc3 {
  quat start;   ///< point of norm 2
  quat tangent; ///< unit vector orthogonal to start
  double length = 0.0;

  /// @throws error{errc::not_tangent} on norm/orthogonality violations.
  arc3(const quat& start_, const quat& tangent_, double length_);

  [[nodiscard]] quat point_at(double s) const {
    return start * std::cos(s / 2) + tangent * (2.0 * std::sin(s / 2));
  }
  [[nodiscard]] quat tangent_at(double s) const {
    return start * (-0.5 * std::sin(s / 2)) + tangent * std::cos(s / 2);
  }
  [[nodiscard]] quat end() const { return point_at(length); }
  [[nodiscard]] quat end_tangent() const { return tangent_at(length); }
  [[nodiscard]] quat midpoint() const { return point_at(length / 2); }

  /// Arc of given length leaving a toward b.
  /// @throws error{errc::not_tangent} when a, b are parallel or antipodal.
  [[nodiscard]] static arc3 toward(const quat& a, const quat& b, double length);

  /// The shorter geodesic joining a to b.
  [[nodiscard]] static arc3 between(const quat& a, const quat& b);
};

/// The fibre over u as an arc covering the whole great circle (length 4π),
/// starting at fiber_through(u) with tangent i·r₀/2.
[[nodiscard]] arc3 fiber_circle(const quat& u);

/// Unit tangent upstairs at r projecting to the unit base tangent w at
/// P(r): the horizontal lift direction.
[[nodiscard]] quat horizontal_lift_direction(const quat& r, const quat& w);

/// Horizontal lift of a chain of base arcs starting at r_start.  Lengths,
/// chaining and corner angles are preserved.
/// @throws error{errc::base_point_mismatch} when P(r_start) is not the first
/// arc's start or the base arcs do not chain.
[[nodiscard]] std::vector<arc3> lift_path(const std::vector<arc2>& base, const quat& r_start);

/// Phase θ ∈ (−2π, 2π] with r = e^{iθ/2} r₀ for two points on one fibre.
/// @throws error{errc::base_point_mismatch} when the points sit on
/// different fibres.
[[nodiscard]] double fiber_phase(const quat& r, const quat& r0);

/// Displacement of the horizontal lift of a closed base loop: the lift ends
/// at e^{iθ/2}·start.  |θ| equals the area enclosed by the loop (mod 4π);
/// the sign is negative when the measured region lies on the LEFT of the
/// traversal.  Returned branch: (−2π, 2π].
/// @throws error{errc::lift_not_closed} when the lifted endpoint leaves the
/// start fibre (numerically impossible for a valid closed base loop).
[[nodiscard]] double lift_displacement(const polygon2& loop, const quat& r_start);

/// Identification of the rotation group of the two-sphere with the unit
/// tangent bundle: [p] ↦ (point, unit tangent) = (p⁻¹ i p, p⁻¹ j p).
[[nodiscard]] std::pair<quat, quat> uts2_identify(const rotation3& g);

/// Translation by arc length τ along every fibre (θ-decreasing direction);
/// induces the identity on the base.
[[nodiscard]] rotation4 fiber_translation(double tau);

/// The fibration-preserving rotation inducing [q] on the base; on the fibre
/// over a fixed point of [q] it translates by the rotation angle
/// (θ-increasing).
[[nodiscard]] rotation4 base_rotation(const quat& q);

/// Half turn about the fibre over u (an involution fixing it pointwise);
/// induces the half turn [u] on the base.
[[nodiscard]] rotation4 fiber_half_turn(const quat& u);

/// True when the rotation maps fibres to fibres: its first component is of
/// the form e^{iτ} or e^{iτ}j.
[[nodiscard]] bool preserves_fibration(const rotation4& g, double eps = tol::group);

/// Isometry of the base two-sphere induced by a fibration-preserving
/// rotation [p, q]: [q] when p = e^{iτ}, antipodal∘[q] when p = e^{iτ}j.
/// @throws error{errc::base_point_mismatch} when g does not preserve the
/// fibration.
[[nodiscard]] signed_rotation3 induced_base_isometry(const rotation4& g);

} // namespace hopfmin
