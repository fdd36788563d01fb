#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "hopfmin/quadrilateral.hpp"
#include "hopfmin/rotation.hpp"

namespace hopfmin {

/// Great circle on the three-sphere of radius 2, parametrized with period
/// 4π as c(s) = 2(cos(s/2)·through/2 + sin(s/2)·tangent).
struct great_circle {
  quat through; ///< a point of the circle, norm 2
  quat tangent; ///< unit direction at `through`, orthogonal to through/2

  [[nodiscard]] quat point_at(double s) const noexcept {
    return through * std::cos(s / 2) + tangent * (2.0 * std::sin(s / 2));
  }
  [[nodiscard]] quat tangent_at(double s) const noexcept {
    return through * (-std::sin(s / 2) / 2) + tangent * std::cos(s / 2);
  }

  /// Projector onto the spanning 2-plane, a basis-independent fingerprint.
  [[nodiscard]] std::array<double, 16> plane_projector() const noexcept;

  /// Equality as unoriented circles: projectors agree entrywise within eps.
  [[nodiscard]] bool same_circle(const great_circle& o, double eps = tol::group) const noexcept;
};

/// The full circle containing a geodesic arc.
[[nodiscard]] great_circle circle_through(const arc3& a) noexcept;

/// Union of great circles swept out by the symmetry-group orbit of the
/// fundamental quadrilateral's edges.
struct skeleton {
  group_spec spec;
  std::vector<great_circle> circles;
};

[[nodiscard]] skeleton build_skeleton(const group_spec& spec);

/// Number of points in which the skeleton meets a generic fibre.  Sampled at
/// 20 random points on the base graph away from the vertices; the count must
/// agree at every sample.
/// @throws error{errc::not_invariant} when the samples disagree.
[[nodiscard]] std::size_t fibre_intersection_count(const skeleton& sk, std::uint64_t seed = 7);

/// Orbit of the fundamental quadrilateral under the lifted group: exactly
/// one quadrilateral per group element (the stabilizer is trivial).
/// @throws error{errc::degenerate_spec} when both angle labels are 1 (the
/// quadrilateral collapses onto a single great circle).
[[nodiscard]] std::vector<quadrilateral> quad_orbit(const group_spec& spec);

/// Vertex/edge/face counts of the closed surface tiled by the orbit,
/// obtained by geometric deduplication of the orbit's corners and edges.
struct cell_counts {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
};

/// @throws error{errc::degenerate_spec} when an angle label is below 2;
/// @throws error{errc::non_manifold} when some edge is not shared by
/// exactly two faces.
[[nodiscard]] cell_counts complex_counts(const group_spec& spec);

/// Genus from the Euler characteristic: 1 − (V − E + F)/2.
[[nodiscard]] long combinatorial_genus(const cell_counts& c) noexcept;

enum class hull_kind {
  tetrahedron, ///< labels m, n ≥ 2: geodesic tetrahedron on the corners
  bigon,       ///< exactly one label is 1: hull spanned by an antipodal pair
  circle,      ///< both labels 1: the quadrilateral itself is a great circle
};

/// Spherical convex hull of the quadrilateral.
struct convex_hull_cell {
  hull_kind kind = hull_kind::tetrahedron;
  std::array<quat, 4> vertex;
  /// Inward unit normals of the four face hyperplanes (tetrahedron only;
  /// face f is spanned by the vertices other than f).
  std::array<quat, 4> face_normal;
  /// Unit 4-vector with ⟨pole, v⟩ > 0 for every vertex (tetrahedron only):
  /// witness that the hull sits in an open hemisphere.
  quat hemisphere_pole;
  /// Some two vertices sit at geodesic distance π (the hemisphere bound is
  /// attained on the boundary); reported for every quadrilateral with a
  /// length-π edge, i.e. the whole doubly cyclic and dihedral families.
  bool boundary_contact = false;

  /// Every face hyperplane sees r on its inner side with margin.
  [[nodiscard]] bool contains(const quat& r, double margin = 0.0) const noexcept;
};

[[nodiscard]] convex_hull_cell convex_hull(const quadrilateral& q);

/// Per-vertex boundedness report: which of the two great 2-spheres through
/// the vertex's perpendicular geodesic keeps the whole quadrilateral on one
/// side.
struct vertex_properness {
  bool bounded_by_incoming = false; ///< sphere through the incoming edge
  bool bounded_by_outgoing = false; ///< sphere through the outgoing edge
  [[nodiscard]] bool proper() const noexcept { return bounded_by_incoming || bounded_by_outgoing; }
};

[[nodiscard]] std::array<vertex_properness, 4> check_proper(const quadrilateral& q,
                                                            std::size_t samples_per_edge = 64);

/// Common perpendicular o₁o₂ of the diagonals KM and LN.
struct perpendicular_segment {
  arc3 segment;    ///< from o₁ on KM to o₂ on LN
  double residual; ///< max |cosine| against the diagonals at the feet
};

/// Midpoint construction for most specs; for D(l,π/2), O(π/2), O(π/4) and
/// I(π/2) the segment runs through the fibre over the route's
/// self-intersection, which meets the quadrilateral orthogonally.
/// @throws error{errc::no_perpendicular} when the residual exceeds 1e−6;
/// @throws error{errc::degenerate_spec} when an angle label is 1.
[[nodiscard]] perpendicular_segment common_perpendicular(const group_spec& spec,
                                                         const quadrilateral& q);

/// Fibration-preserving rotation taking the chosen corner to 2, the longer
/// of its two edges onto the geodesic 2(cos(s/2) + j sin(s/2)), and the
/// other edge onto 2(cos(s/2) + e^{iα} j sin(s/2)) with α the corner angle.
[[nodiscard]] rotation4 normalize_position(const quadrilateral& q, std::size_t vertex_index);

} // namespace hopfmin
