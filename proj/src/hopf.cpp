#include "hopfmin/hopf.hpp"

#include <cmath>

namespace hopfmin {

quat hopf_project(const quat& r) { return r.conj() * qi * r / 4.0; }

quat fiber_through(const quat& u) {
  if (!is_s2_point(u))
    throw error(errc::not_in_e3, "fiber_through: base point must lie on the unit two-sphere");
  // p with p⁻¹ i p = u: rotate about the axis (u × i)/|u × i|.
  if (distance(u, qi) < tol::unit) return one * 2.0;
  if (distance(u, -qi) < tol::unit) return qj * 2.0;
  const quat a = cross(u, qi).normalized();
  const double theta = angle_between(qi, u);
  return axis_form(a, theta / 2.0) * 2.0;
}

arc3::arc3(const quat& start_, const quat& tangent_, double length_)
    : start(start_), tangent(tangent_), length(length_) {
  if (!is_s3_point(start) || std::abs(tangent.norm() - 1.0) > tol::unit ||
      std::abs(dot(start, tangent)) > 4.0 * tol::unit)
    throw error(errc::not_tangent, "arc3: start must have norm 2 with a unit orthogonal tangent");
  if (!(length > 0.0)) throw error(errc::not_tangent, "arc3: length must be positive");
}

arc3 arc3::toward(const quat& a, const quat& b, double length) {
  const quat w = b - a * (dot(a, b) / 4.0);
  const double wn = w.norm();
  if (wn <= tol::unit)
    throw error(errc::not_tangent, "arc3::toward: endpoints are parallel or antipodal");
  return {a, w / wn, length};
}

arc3 arc3::between(const quat& a, const quat& b) {
  return toward(a, b, 2.0 * clamped_acos(dot(a, b) / 4.0));
}

arc3 fiber_circle(const quat& u) {
  const quat r0 = fiber_through(u);
  return {r0, qi * r0 * 0.5, 4.0 * M_PI};
}

quat horizontal_lift_direction(const quat& r, const quat& w) {
  if (!is_s3_point(r)) throw error(errc::not_tangent, "horizontal_lift_direction: |r| must be 2");
  if (std::abs(w.norm() - 1.0) > tol::unit || std::abs(dot(w, hopf_project(r))) > tol::unit ||
      std::abs(w.t) > tol::unit)
    throw error(errc::not_tangent, "horizontal_lift_direction: w is not a unit base tangent");
  // Transport w into the standard frame at r: x = r w r̄ / 4 lands in
  // span{j, k}; the matching horizontal direction is (a·j + b·k)·r/2 for
  // x = a·k − b·j.
  const quat x = r * w * r.conj() / 4.0;
  const double a = x.z, b = -x.y;
  return (qj * a + qk * b) * r * 0.5;
}

std::vector<arc3> lift_path(const std::vector<arc2>& base, const quat& r_start) {
  if (base.empty()) return {};
  if (distance(hopf_project(r_start), base.front().start) > 1e-9)
    throw error(errc::base_point_mismatch, "lift_path: r_start does not sit over the path start");
  std::vector<arc3> lifted;
  lifted.reserve(base.size());
  quat r = r_start;
  for (std::size_t t = 0; t < base.size(); ++t) {
    if (t > 0 && distance(base[t - 1].end(), base[t].start) > 1e-9)
      throw error(errc::base_point_mismatch, "lift_path: base arcs do not chain");
    const quat dir = horizontal_lift_direction(r, base[t].tangent);
    lifted.emplace_back(r, dir, base[t].length);
    r = lifted.back().end();
    r = r * (2.0 / r.norm()); // keep roundoff off the sphere radius
  }
  return lifted;
}

double fiber_phase(const quat& r, const quat& r0) {
  const quat z = r * r0.conj() / 4.0;
  if (std::hypot(z.y, z.z) > 1e-7)
    throw error(errc::base_point_mismatch, "fiber_phase: points lie on different fibres");
  return 2.0 * std::atan2(z.x, z.t);
}

double lift_displacement(const polygon2& loop, const quat& r_start) {
  const std::vector<arc3> lifted = lift_path(loop.arcs(), r_start);
  const quat r_end = lifted.back().end();
  const quat z = r_end * r_start.conj() / 4.0;
  if (std::hypot(z.y, z.z) > 1e-7)
    throw error(errc::lift_not_closed, "lift_displacement: lift left the start fibre");
  return 2.0 * std::atan2(z.x, z.t);
}

std::pair<quat, quat> uts2_identify(const rotation3& g) {
  return {g.apply(qi), g.apply(qj)};
}

rotation4 fiber_translation(double tau) { return {exp_i(tau / 2.0), one}; }

rotation4 base_rotation(const quat& q) { return {one, q}; }

rotation4 fiber_half_turn(const quat& u) {
  if (!is_s2_point(u))
    throw error(errc::not_in_e3, "fiber_half_turn: axis must lie on the unit two-sphere");
  return {qi, u};
}

bool preserves_fibration(const rotation4& g, double eps) {
  const bool complex_part = std::hypot(g.p.y, g.p.z) <= eps;
  const bool j_part = std::hypot(g.p.t, g.p.x) <= eps;
  return complex_part || j_part;
}

signed_rotation3 induced_base_isometry(const rotation4& g) {
  if (!preserves_fibration(g))
    throw error(errc::base_point_mismatch, "induced_base_isometry: rotation moves fibres off fibres");
  const bool direct = std::hypot(g.p.y, g.p.z) <= tol::group;
  return {rotation3{g.q}, direct ? +1 : -1};
}

} // namespace hopfmin
