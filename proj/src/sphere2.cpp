#include "hopfmin/sphere2.hpp"

#include <cmath>

namespace hopfmin {

arc2::arc2(const quat& start_, const quat& tangent_, double length_)
    : start(start_), tangent(tangent_), length(length_) {
  if (!is_s2_point(start) || !is_s2_point(tangent) || std::abs(dot(start, tangent)) > tol::unit)
    throw error(errc::not_tangent, "arc2: start/tangent must be orthonormal pure quaternions");
  if (!(length > 0.0))
    throw error(errc::not_tangent, "arc2: length must be positive");
}

arc2 arc2::toward(const quat& a, const quat& b, double length) {
  const double c = dot(a, b);
  const quat w = b - a * c;
  const double wn = w.norm();
  if (wn <= tol::unit)
    throw error(errc::not_tangent, "arc2::toward: endpoints are equal or antipodal");
  return {a, w / wn, length};
}

arc2 arc2::between(const quat& a, const quat& b) {
  return toward(a, b, clamped_acos(dot(a, b)));
}

polygon2::polygon2(std::vector<arc2> arcs) : arcs_(std::move(arcs)) {
  if (arcs_.size() < 2)
    throw error(errc::degenerate_polygon, "polygon2: need at least two arcs");
  for (std::size_t t = 0; t < arcs_.size(); ++t) {
    const quat gap = arcs_[t].end() - arcs_[(t + 1) % arcs_.size()].start;
    if (gap.norm() > 1e-9)
      throw error(errc::degenerate_polygon, "polygon2: consecutive arcs do not chain");
  }
}

quat parallel_transport(const quat& v, const arc2& arc) {
  if (std::abs(v.t) > tol::unit * (1.0 + v.norm()) ||
      std::abs(dot(v, arc.start)) > tol::unit * (1.0 + v.norm()))
    throw error(errc::not_tangent, "parallel_transport: v is not tangent at the arc start");
  const quat binormal = cross(arc.start, arc.tangent);
  const double ct = dot(v, arc.tangent);
  const double cb = dot(v, binormal);
  return arc.end_tangent() * ct + binormal * cb;
}

namespace {

/// Interior angle on the left of the traversal at the junction of two arcs:
/// π − (signed turn from the incoming to the outgoing direction).
/// @throws error{errc::degenerate_polygon} when the turn is a half turn.
double interior_angle_left(const arc2& incoming, const arc2& outgoing) {
  const quat u = outgoing.start;
  const quat w_in = incoming.end_tangent();
  const quat w_out = outgoing.tangent;
  const double turn = std::atan2(dot(w_out, cross(u, w_in)), dot(w_out, w_in));
  if (M_PI - std::abs(turn) < 1e-9)
    throw error(errc::degenerate_polygon, "polygon corner doubles back (turn angle ±π)");
  return M_PI - turn;
}

} // namespace

double polygon_area(const polygon2& poly) {
  const auto& arcs = poly.arcs();
  const std::size_t n = arcs.size();
  double sum = 0.0;
  for (std::size_t t = 0; t < n; ++t) sum += interior_angle_left(arcs[t], arcs[(t + 1) % n]);
  return sum - double(n - 2) * M_PI;
}

double holonomy_angle(const polygon2& poly, region_side side) {
  const auto& arcs = poly.arcs();
  // Transport the first arc's tangent direction around the whole polygon.
  const quat v0 = arcs.front().tangent;
  quat v = v0;
  for (const arc2& a : arcs) {
    // Re-express v as a tangent vector at the arc start (it already is, up
    // to roundoff accumulated along the way), then transport across.
    const quat u = a.start;
    v = v - u * dot(v, u);
    v.t = 0.0;
    v = v.normalized();
    v = parallel_transport(v, a);
  }
  const quat u0 = arcs.front().start;
  v = v - u0 * dot(v, u0);
  const double raw = std::atan2(dot(v, cross(u0, v0)), dot(v, v0));
  // raw ≡ area(left region) mod 2π; flip the sign for the right region.
  double theta = (side == region_side::left) ? raw : -raw;
  if (theta <= 1e-12) theta += 2.0 * M_PI;
  return theta;
}

} // namespace hopfmin
