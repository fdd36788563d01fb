#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hopfmin/errors.hpp"
#include "hopfmin/quaternion.hpp"
#include "hopfmin/tolerances.hpp"

namespace hopfmin {

/// Where a mesh vertex sits relative to the quadrilateral it spans:
/// strictly inside, on one of the four boundary edges, or at a corner.
struct vertex_tag {
  enum class kind : std::uint8_t { interior, edge, corner };

  kind where = kind::interior;
  std::int8_t index = -1; ///< edge index 0..3, corner index 0..3, −1 inside

  [[nodiscard]] constexpr bool boundary() const noexcept { return where != kind::interior; }

  [[nodiscard]] static constexpr vertex_tag interior() noexcept { return {}; }
  [[nodiscard]] static constexpr vertex_tag on_edge(int e) noexcept {
    return {kind::edge, static_cast<std::int8_t>(e)};
  }
  [[nodiscard]] static constexpr vertex_tag at_corner(int t) noexcept {
    return {kind::corner, static_cast<std::int8_t>(t)};
  }

  constexpr bool operator==(const vertex_tag&) const = default;
};

/// Triangle mesh with vertices on the radius-2 three-sphere.  Faces are
/// oriented vertex-index triples; `tags` records boundary membership and has
/// one entry per vertex.
struct surface_mesh {
  std::vector<quat> vertices;
  std::vector<std::array<int, 3>> faces;
  std::vector<vertex_tag> tags;

  [[nodiscard]] std::size_t vertex_count() const noexcept { return vertices.size(); }
  [[nodiscard]] std::size_t face_count() const noexcept { return faces.size(); }
};

/// Undirected edge census of a triangle mesh.
struct edge_census {
  std::size_t edges = 0;         ///< distinct undirected edges
  std::size_t boundary = 0;      ///< edges used by exactly one face
  std::size_t overused = 0;      ///< edges used by three or more faces
  bool consistently_oriented = true; ///< every interior edge traversed once per direction
};

[[nodiscard]] edge_census count_edges(const surface_mesh& m);

/// V − E + F.
[[nodiscard]] long long euler_characteristic(const surface_mesh& m);

/// True when every edge lies in exactly two faces with opposite orientations.
[[nodiscard]] bool is_closed_oriented(const surface_mesh& m);

/// Handle count 1 − χ/2 of a closed oriented mesh.
/// @throws error{errc::non_manifold} when the mesh has boundary or overused
///         edges.
[[nodiscard]] long long mesh_genus(const surface_mesh& m);

/// Flat (chordal) area of one triangle in 4-space.
[[nodiscard]] double face_area(const surface_mesh& m, std::size_t f);

/// Sum of flat triangle areas, accumulated in face order.
[[nodiscard]] double total_area(const surface_mesh& m);

/// Largest deviation of any vertex from the radius-2 sphere.
[[nodiscard]] double max_radius_error(const surface_mesh& m);

} // namespace hopfmin
