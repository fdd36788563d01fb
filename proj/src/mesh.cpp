#include "hopfmin/mesh.hpp"

#include <algorithm>
#include <cmath>

namespace hopfmin {

namespace {

struct edge_use {
  std::uint64_t key; ///< packed (min index, max index)
  bool forward;      ///< true when the face traverses min → max
};

std::vector<edge_use> collect_edge_uses(const surface_mesh& m) {
  std::vector<edge_use> uses;
  uses.reserve(3 * m.faces.size());
  for (const auto& f : m.faces)
    for (int e = 0; e < 3; ++e) {
      const auto a = static_cast<std::uint32_t>(f[e]);
      const auto b = static_cast<std::uint32_t>(f[(e + 1) % 3]);
      const std::uint64_t lo = std::min(a, b), hi = std::max(a, b);
      uses.push_back({(lo << 32) | hi, a < b});
    }
  std::sort(uses.begin(), uses.end(),
            [](const edge_use& u, const edge_use& v) { return u.key < v.key; });
  return uses;
}

} // namespace

edge_census count_edges(const surface_mesh& m) {
  const std::vector<edge_use> uses = collect_edge_uses(m);
  edge_census census;
  for (std::size_t at = 0; at < uses.size();) {
    std::size_t end = at;
    while (end < uses.size() && uses[end].key == uses[at].key) ++end;
    const std::size_t multiplicity = end - at;
    ++census.edges;
    if (multiplicity == 1) {
      ++census.boundary;
    } else if (multiplicity == 2) {
      if (uses[at].forward == uses[at + 1].forward) census.consistently_oriented = false;
    } else {
      ++census.overused;
      census.consistently_oriented = false;
    }
    at = end;
  }
  return census;
}

long long euler_characteristic(const surface_mesh& m) {
  const edge_census census = count_edges(m);
  return static_cast<long long>(m.vertices.size()) - static_cast<long long>(census.edges) +
         static_cast<long long>(m.faces.size());
}

bool is_closed_oriented(const surface_mesh& m) {
  const edge_census census = count_edges(m);
  return census.boundary == 0 && census.overused == 0 && census.consistently_oriented;
}

long long mesh_genus(const surface_mesh& m) {
  if (!is_closed_oriented(m))
    throw error(errc::non_manifold, "mesh_genus: mesh is not a closed oriented manifold");
  return 1 - euler_characteristic(m) / 2;
}

double face_area(const surface_mesh& m, std::size_t f) {
  const auto& [i0, i1, i2] = m.faces[f];
  const quat u = m.vertices[static_cast<std::size_t>(i1)] - m.vertices[static_cast<std::size_t>(i0)];
  const quat v = m.vertices[static_cast<std::size_t>(i2)] - m.vertices[static_cast<std::size_t>(i0)];
  const double g = u.norm2() * v.norm2() - dot(u, v) * dot(u, v);
  return g > 0.0 ? 0.5 * std::sqrt(g) : 0.0;
}

double total_area(const surface_mesh& m) {
  double area = 0.0;
  for (std::size_t f = 0; f < m.faces.size(); ++f) area += face_area(m, f);
  return area;
}

double max_radius_error(const surface_mesh& m) {
  double worst = 0.0;
  for (const quat& v : m.vertices) worst = std::max(worst, std::abs(v.norm() - 2.0));
  return worst;
}

} // namespace hopfmin
