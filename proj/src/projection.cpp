#include "hopfmin/projection.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "hopfmin/errors.hpp"

namespace hopfmin {

namespace {

/// Reoriented point with the singularity guard shared by all exporters.
quat reorient_checked(const quat& r, const projection_frame& frame) {
  const quat moved = frame.orientation.apply(r);
  if (distance(moved, frame.pole) <= 1e-6)
    throw error(errc::pole_singularity, "stereographic: point too close to the projection pole");
  return moved;
}

std::array<double, 3> project(const quat& moved) {
  const double w = moved.t + 2.0;
  return {moved.x / w, moved.y / w, moved.z / w};
}

} // namespace

std::array<double, 3> stereographic(const quat& r, const projection_frame& frame) {
  return project(reorient_checked(r, frame));
}

projection_frame frame_avoiding_mesh(const surface_mesh& m, double margin) {
  // Fixed candidate rotations [w, 1]: each sends the former point −2w̄ to the
  // pole −2, so the search looks for a direction the surface misses.
  std::vector<quat> candidates = {one, qi, qj, qk, -one, -qi, -qj, -qk};
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  for (int k = 1; k <= 48; ++k) {
    // low-discrepancy sweep over the 3-sphere in Hopf-style coordinates
    const double a = 2.0 * M_PI * std::fmod(g * k, 1.0);
    const double b = 2.0 * M_PI * std::fmod(g * g * k, 1.0);
    const double c = std::acos(1.0 - 2.0 * (k - 0.5) / 48.0) / 2.0;
    candidates.push_back(quat{std::cos(a) * std::cos(c), std::sin(a) * std::cos(c),
                              std::cos(b) * std::sin(c), std::sin(b) * std::sin(c)});
  }

  projection_frame best;
  double best_clearance = -1.0;
  for (const quat& w : candidates) {
    const rotation4 rot{w, one};
    double clearance = 16.0;
    for (const quat& v : m.vertices) {
      clearance = std::min(clearance, distance(rot.apply(v), best.pole));
      if (clearance <= best_clearance) break;
    }
    if (clearance > best_clearance) {
      best_clearance = clearance;
      best.orientation = rot;
    }
  }
  if (best_clearance < margin)
    throw error(errc::pole_singularity,
                "frame_avoiding_mesh: no candidate rotation clears the pole margin");
  return best;
}

void export_mesh(const surface_mesh& m, const projection_frame& frame, const std::string& path) {
  std::string body;
  body.reserve(m.vertex_count() * 48 + m.face_count() * 24);
  char line[96];
  for (const quat& v : m.vertices) {
    const std::array<double, 3> p = stereographic(v, frame);
    std::snprintf(line, sizeof line, "v %.9g %.9g %.9g\n", p[0], p[1], p[2]);
    body += line;
  }
  for (const auto& f : m.faces) {
    std::snprintf(line, sizeof line, "f %d %d %d\n", f[0] + 1, f[1] + 1, f[2] + 1);
    body += line;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << body) || !out.flush())
    throw error(errc::io_error, "export_mesh: cannot write " + path);
}

void export_mesh_json(const surface_mesh& m, const projection_frame& frame,
                      const std::string& path) {
  nlohmann::json doc;
  auto& projected = doc["projected"] = nlohmann::json::array();
  auto& sphere = doc["sphere"] = nlohmann::json::array();
  auto& faces = doc["faces"] = nlohmann::json::array();
  for (const quat& v : m.vertices) {
    const std::array<double, 3> p = stereographic(v, frame);
    projected.push_back({p[0], p[1], p[2]});
    sphere.push_back({v.t, v.x, v.y, v.z});
  }
  for (const auto& f : m.faces) faces.push_back({f[0], f[1], f[2]});
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << doc.dump(1) << '\n') || !out.flush())
    throw error(errc::io_error, "export_mesh_json: cannot write " + path);
}

surface_mesh import_mesh(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error(errc::io_error, "import_mesh: cannot read " + path);
  surface_mesh m;
  std::string text;
  std::size_t line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    std::istringstream line(text);
    std::string head;
    if (!(line >> head) || head[0] == '#') continue;
    if (head == "v") {
      double x = 0, y = 0, z = 0;
      if (!(line >> x >> y >> z))
        throw error(errc::io_error, "import_mesh: bad vertex record at line " +
                                        std::to_string(line_no));
      m.vertices.push_back(quat{0.0, x, y, z});
    } else if (head == "f") {
      long a = 0, b = 0, c = 0;
      if (!(line >> a >> b >> c) || a < 1 || b < 1 || c < 1)
        throw error(errc::io_error,
                    "import_mesh: bad face record at line " + std::to_string(line_no));
      m.faces.push_back({static_cast<int>(a - 1), static_cast<int>(b - 1),
                         static_cast<int>(c - 1)});
    }
  }
  for (const auto& f : m.faces)
    for (int idx : f)
      if (static_cast<std::size_t>(idx) >= m.vertices.size())
        throw error(errc::io_error, "import_mesh: face index out of range");
  m.tags.assign(m.vertices.size(), vertex_tag::interior());
  return m;
}

} // namespace hopfmin
