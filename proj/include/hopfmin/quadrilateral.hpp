#pragma once

#include <array>
#include <vector>

#include "hopfmin/group_spec.hpp"
#include "hopfmin/hopf.hpp"
#include "hopfmin/sphere2.hpp"

namespace hopfmin {

/// Closed piecewise geodesic on the base two-sphere: the boundary of two
/// tessellation pieces meeting with opposite angles at a shared vertex,
/// traversed going straight at the self-intersections.
struct base_route {
  polygon2 path;             ///< closed route passing through i
  bool starts_mid_edge;      ///< start point i sits inside edge NK, not at K
  bool has_crossing;         ///< route crosses itself away from the corners
  quat crossing;             ///< the self-intersection point (unit)

  base_route(polygon2 path_, bool mid, bool crossed, const quat& u)
      : path(std::move(path_)), starts_mid_edge(mid), has_crossing(crossed), crossing(u) {}
};

/// The defining route of the spec's fundamental quadrilateral.
[[nodiscard]] base_route route(const group_spec& spec);

/// Geodesic quadrilateral on the three-sphere: vertices K, L, M, N of norm
/// 2 joined by horizontal geodesic edges KL, LM, MN, NK.  The labels (m, n)
/// name the interior angles: π/m at K and M, π/n at L and N.
struct quadrilateral {
  std::array<quat, 4> vertex;   ///< K, L, M, N
  std::array<arc3, 4> edge;     ///< KL, LM, MN, NK
  std::pair<int, int> labels{2, 2};
};

/// Quadrilateral with the given corners joined by minimizing geodesics.
/// @throws error{errc::not_tangent} when consecutive corners are antipodal.
[[nodiscard]] quadrilateral quad_from_vertices(const std::array<quat, 4>& vertex,
                                               std::pair<int, int> labels);

/// Horizontal lift of the route from the point 2 over i.
/// @throws error{errc::lift_not_closed} when the lift fails to close or the
/// two half-edges of a mid-edge route do not line up (tolerance 1e−7).
[[nodiscard]] quadrilateral fundamental_quadrilateral(const group_spec& spec);

/// Edge lengths (KL, LM, MN, NK) and interior corner angles (at K, L, M, N).
struct quad_metrics {
  std::array<double, 4> edge_length;
  std::array<double, 4> corner_angle;
};

[[nodiscard]] quad_metrics measure(const quadrilateral& q);

/// Closed-form table values: ψ(t) = arccos t of the family constants.
[[nodiscard]] quad_metrics reference_metrics(const group_spec& spec);

/// Order-two symmetries of the quadrilateral beyond the lifted group: the
/// half turn about the fibre over the route crossing (D(l,π/2), O(π/2),
/// O(π/4), I(π/2)); the half turn about the great circle through the
/// diagonal midpoints (C(m,n), T(π/3), O(π/3), I(π/3), I(π/5)); and for
/// C(m,n) additionally a hyperplane-type reflection, plus — when m = n —
/// the half turn exchanging the two congruent halves.
[[nodiscard]] std::vector<o4_element> quad_symmetries(const group_spec& spec,
                                                      const quadrilateral& q);

} // namespace hopfmin
