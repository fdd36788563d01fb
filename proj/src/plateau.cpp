#include "hopfmin/plateau.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <unordered_map>
#include <utility>

#include "hopfmin/skeleton.hpp"
#include "hopfmin/symmetry_group.hpp"

namespace hopfmin {

namespace {

/// Hash grid over points in 4-space: near-duplicate lookup in O(1).
class point_index {
public:
  explicit point_index(double cell) : cell_(cell) {}

  void insert(const quat& p, int id) { buckets_[key_of(p, 0, 0, 0, 0)].push_back(id); }

  /// Identifier of a stored point within eps of p, or −1.
  [[nodiscard]] int find(const quat& p, const std::vector<quat>& points, double eps) const {
    int best = -1;
    double best_d = eps;
    for (int dt = -1; dt <= 1; ++dt)
      for (int dx = -1; dx <= 1; ++dx)
        for (int dy = -1; dy <= 1; ++dy)
          for (int dz = -1; dz <= 1; ++dz) {
            const auto bucket = buckets_.find(key_of(p, dt, dx, dy, dz));
            if (bucket == buckets_.end()) continue;
            for (int id : bucket->second) {
              const double d = distance(points[static_cast<std::size_t>(id)], p);
              if (d <= best_d) {
                best_d = d;
                best = id;
              }
            }
          }
    return best;
  }

private:
  [[nodiscard]] std::uint64_t key_of(const quat& p, int dt, int dx, int dy, int dz) const {
    const auto cell = [this](double c, int off) {
      return static_cast<std::uint64_t>(static_cast<std::int64_t>(std::floor(c / cell_)) + off);
    };
    std::uint64_t h = cell(p.t, dt) * 0x9E3779B97F4A7C15ull;
    h ^= cell(p.x, dx) * 0xC2B2AE3D27D4EB4Full + (h << 6);
    h ^= cell(p.y, dy) * 0x165667B19E3779F9ull + (h >> 3);
    h ^= cell(p.z, dz) * 0x27D4EB2F165667C5ull + (h << 9);
    return h;
  }

  double cell_;
  std::unordered_map<std::uint64_t, std::vector<int>> buckets_;
};

/// Component of g tangent to the radius-2 sphere at v.
[[nodiscard]] quat tangential(const quat& g, const quat& v) { return g - v * (dot(g, v) / 4.0); }

/// Orthonormal basis of the sphere's tangent space at x: the coordinate
/// axis most aligned with x is dropped, the rest are Gram–Schmidt'ed.
struct tangent_frame {
  quat t[3];
};

[[nodiscard]] tangent_frame frame_at(const quat& x) {
  const quat n = x * (1.0 / x.norm());
  const quat axes[4] = {quat{1, 0, 0, 0}, quat{0, 1, 0, 0}, quat{0, 0, 1, 0}, quat{0, 0, 0, 1}};
  int skip = 0;
  double best = -1.0;
  for (int k = 0; k < 4; ++k) {
    const double align = std::abs(dot(axes[k], n));
    if (align <= best) continue;
    best = align;
    skip = k;
  }
  tangent_frame f;
  int w = 0;
  for (int k = 0; k < 4; ++k) {
    if (k == skip) continue;
    quat v = axes[k] - n * dot(axes[k], n);
    for (int b = 0; b < w; ++b) v = v - f.t[b] * dot(v, f.t[b]);
    f.t[w++] = v * (1.0 / v.norm());
  }
  return f;
}

/// Solve A·x = b in place by LU with partial pivoting; false when singular.
bool dense_solve(std::vector<double>& a, std::vector<double>& b, std::size_t n) {
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r * n + c]) > std::abs(a[p * n + c])) p = r;
    if (std::abs(a[p * n + c]) < 1e-20) return false;
    if (p != c) {
      for (std::size_t cc = 0; cc < n; ++cc) std::swap(a[p * n + cc], a[c * n + cc]);
      std::swap(b[p], b[c]);
    }
    const double inv = 1.0 / a[c * n + c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = a[r * n + c] * inv;
      if (f == 0.0) continue;
      a[r * n + c] = 0.0;
      for (std::size_t cc = c + 1; cc < n; ++cc) a[r * n + cc] -= f * a[c * n + cc];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t c = n; c-- > 0;) {
    double v = b[c];
    for (std::size_t cc = c + 1; cc < n; ++cc) v -= a[c * n + cc] * b[cc];
    b[c] = v / a[c * n + c];
  }
  return true;
}

/// Vertex correspondence induced by an isometry that permutes the mesh
/// vertex set: sigma(vertices[i]) == vertices[map[i]].
std::vector<int> vertex_map_under(const surface_mesh& m, const o4_element& sigma) {
  point_index index(1e-3);
  for (std::size_t i = 0; i < m.vertices.size(); ++i)
    index.insert(m.vertices[i], static_cast<int>(i));
  std::vector<int> map(m.vertices.size(), -1);
  std::vector<char> hit(m.vertices.size(), 0);
  for (std::size_t i = 0; i < m.vertices.size(); ++i) {
    const int j = index.find(sigma.apply(m.vertices[i]), m.vertices, tol::weld);
    if (j < 0 || hit[static_cast<std::size_t>(j)])
      throw error(errc::not_invariant,
                  "minimize_area: a symmetry does not permute the mesh vertices");
    map[i] = j;
    hit[static_cast<std::size_t>(j)] = 1;
  }
  return map;
}

/// Worst vertex mismatch of the mesh under the listed isometries.
double symmetry_mismatch(const surface_mesh& m, const std::vector<o4_element>& symmetries,
                         const std::vector<std::vector<int>>& maps) {
  double worst = 0.0;
  for (std::size_t s = 0; s < symmetries.size(); ++s)
    for (std::size_t i = 0; i < m.vertices.size(); ++i)
      worst = std::max(worst, distance(symmetries[s].apply(m.vertices[i]),
                                       m.vertices[static_cast<std::size_t>(maps[s][i])]));
  return worst;
}

/// Union-find with parity: tracks whether two faces need opposite flips.
class parity_forest {
public:
  explicit parity_forest(std::size_t n) : parent_(n), parity_(n, 0) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<int>(i);
  }

  /// Root of i and the parity of i relative to it.
  std::pair<int, int> find(int i) {
    if (parent_[static_cast<std::size_t>(i)] == i) return {i, 0};
    auto [root, par] = find(parent_[static_cast<std::size_t>(i)]);
    parent_[static_cast<std::size_t>(i)] = root;
    parity_[static_cast<std::size_t>(i)] =
        static_cast<char>((parity_[static_cast<std::size_t>(i)] + par) % 2);
    return {root, parity_[static_cast<std::size_t>(i)]};
  }

  /// Join with the constraint parity(a) + parity(b) ≡ want (mod 2).
  /// Returns false on contradiction.
  bool join(int a, int b, int want) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa + pb) % 2 == want;
    parent_[static_cast<std::size_t>(rb)] = ra;
    parity_[static_cast<std::size_t>(rb)] = static_cast<char>((pa + pb + want) % 2);
    return true;
  }

  int parity_of(int i) { return find(i).second; }

private:
  std::vector<int> parent_;
  std::vector<char> parity_;
};

/// Crossing test of two flat triangles in 4-space with strictly interior
/// barycentric coordinates.
bool triangles_cross(const quat& x0, const quat& x1, const quat& x2, const quat& y0,
                     const quat& y1, const quat& y2) {
  const quat cols[4] = {x1 - x0, x2 - x0, y0 - y1, y0 - y2};
  const quat rhs = y0 - x0;
  double a[4][5];
  for (int r = 0; r < 4; ++r) {
    const double* row[5] = {&cols[0].t, &cols[1].t, &cols[2].t, &cols[3].t, &rhs.t};
    for (int c = 0; c < 5; ++c) a[r][c] = row[c][r];
  }
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    if (std::abs(a[pivot][col]) < 1e-12) return false; // parallel planes: no transverse crossing
    if (pivot != col)
      for (int c = 0; c < 5; ++c) std::swap(a[pivot][c], a[col][c]);
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      for (int c = col; c < 5; ++c) a[r][c] -= f * a[col][c];
    }
  }
  const double s = a[0][4] / a[0][0], t = a[1][4] / a[1][1];
  const double u = a[2][4] / a[2][2], v = a[3][4] / a[3][3];
  const double eps = 1e-9;
  return s > eps && t > eps && s + t < 1.0 - eps && u > eps && v > eps && u + v < 1.0 - eps;
}

} // namespace

surface_mesh init_disk(const quadrilateral& q, int refinement) {
  if (refinement < 1)
    throw error(errc::degenerate_spec, "init_disk: refinement must be at least 1");
  const int r = refinement;
  const auto at = [r](int a, int b) { return static_cast<std::size_t>(b * (r + 1) + a); };

  surface_mesh m;
  m.vertices.resize(static_cast<std::size_t>((r + 1) * (r + 1)));
  m.tags.assign(m.vertices.size(), vertex_tag::interior());

  for (int a = 0; a <= r; ++a) {
    const double f = static_cast<double>(a) / r;
    m.vertices[at(a, 0)] = q.edge[0].point_at(q.edge[0].length * f);
    m.vertices[at(r, a)] = q.edge[1].point_at(q.edge[1].length * f);
    m.vertices[at(r - a, r)] = q.edge[2].point_at(q.edge[2].length * f);
    m.vertices[at(0, r - a)] = q.edge[3].point_at(q.edge[3].length * f);
  }
  for (int t = 0; t < 4; ++t) {
    const int corner_a = (t == 1 || t == 2) ? r : 0;
    const int corner_b = (t == 2 || t == 3) ? r : 0;
    m.vertices[at(corner_a, corner_b)] = q.vertex[static_cast<std::size_t>(t)];
    m.tags[at(corner_a, corner_b)] = vertex_tag::at_corner(t);
  }
  for (int a = 1; a < r; ++a) {
    m.tags[at(a, 0)] = vertex_tag::on_edge(0);
    m.tags[at(r, a)] = vertex_tag::on_edge(1);
    m.tags[at(a, r)] = vertex_tag::on_edge(2);
    m.tags[at(0, a)] = vertex_tag::on_edge(3);
  }

  // Interior: bilinear spherical blend — the two matched-fraction
  // great-circle rulings between opposite boundary curves, averaged and
  // pulled back onto the sphere.  On a doubly ruled piece both rulings
  // coincide and the blend samples the surface exactly.
  const auto ruled = [](const quat& x, const quat& y, double f) {
    const double ang = angle_between(x, y);
    if (ang < 1e-12) return x;
    const double s = std::sin(ang);
    const quat p = x * (std::sin((1.0 - f) * ang) / s) + y * (std::sin(f * ang) / s);
    return p * (2.0 / p.norm());
  };
  for (int b = 1; b < r; ++b)
    for (int a = 1; a < r; ++a) {
      const quat upward = ruled(m.vertices[at(a, 0)], m.vertices[at(a, r)],
                                static_cast<double>(b) / r);
      const quat across = ruled(m.vertices[at(0, b)], m.vertices[at(r, b)],
                                static_cast<double>(a) / r);
      const quat blend = (upward + across) * 0.5;
      const double len = blend.norm();
      if (len < 1e-9)
        throw error(errc::degenerate_spec, "init_disk: blended interior point degenerated");
      m.vertices[at(a, b)] = blend * (2.0 / len);
    }

  for (int b = 0; b < r; ++b)
    for (int a = 0; a < r; ++a) {
      const int v00 = static_cast<int>(at(a, b)), v10 = static_cast<int>(at(a + 1, b));
      const int v11 = static_cast<int>(at(a + 1, b + 1)), v01 = static_cast<int>(at(a, b + 1));
      const double d_main = distance(m.vertices[static_cast<std::size_t>(v00)],
                                     m.vertices[static_cast<std::size_t>(v11)]);
      const double d_anti = distance(m.vertices[static_cast<std::size_t>(v10)],
                                     m.vertices[static_cast<std::size_t>(v01)]);
      // Near-ties alternate by cell parity so the split pattern keeps the
      // grid's point symmetries; otherwise the shorter diagonal wins.
      const bool split_main = std::abs(d_main - d_anti) <= 1e-9 * std::max(d_main, d_anti)
                                  ? (a + b) % 2 == 0
                                  : d_main < d_anti;
      if (split_main) {
        m.faces.push_back({v00, v10, v11});
        m.faces.push_back({v00, v11, v01});
      } else {
        m.faces.push_back({v00, v10, v01});
        m.faces.push_back({v10, v11, v01});
      }
    }
  return m;
}

std::pair<double, std::vector<quat>> area_and_gradient(const surface_mesh& m) {
  double area = 0.0;
  std::vector<quat> grad(m.vertices.size());
  for (const auto& f : m.faces) {
    const quat& x = m.vertices[static_cast<std::size_t>(f[0])];
    const quat u = m.vertices[static_cast<std::size_t>(f[1])] - x;
    const quat v = m.vertices[static_cast<std::size_t>(f[2])] - x;
    const double uu = u.norm2(), vv = v.norm2(), uv = dot(u, v);
    const double gram = uu * vv - uv * uv;
    if (gram <= 0.0) continue;
    const double a = 0.5 * std::sqrt(gram);
    area += a;
    const quat du = (u * vv - v * uv) / (4.0 * a);
    const quat dv = (v * uu - u * uv) / (4.0 * a);
    grad[static_cast<std::size_t>(f[0])] = grad[static_cast<std::size_t>(f[0])] - du - dv;
    grad[static_cast<std::size_t>(f[1])] = grad[static_cast<std::size_t>(f[1])] + du;
    grad[static_cast<std::size_t>(f[2])] = grad[static_cast<std::size_t>(f[2])] + dv;
  }
  return {area, std::move(grad)};
}

plateau_result minimize_area(surface_mesh mesh, const quadrilateral& q,
                             const solver_options& opts,
                             const std::vector<o4_element>& symmetries) {
  if (opts.gradient_tol <= 0.0 || opts.armijo <= 0.0 || opts.armijo >= 1.0)
    throw error(errc::degenerate_spec, "minimize_area: invalid solver options");

  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < mesh.vertices.size(); ++i)
    if (!mesh.tags[i].boundary()) free.push_back(i);

  std::vector<std::vector<int>> maps;
  maps.reserve(symmetries.size());
  for (const o4_element& sigma : symmetries) maps.push_back(vertex_map_under(mesh, sigma));

  const auto average_with_images = [&](surface_mesh& m) {
    if (!opts.symmetrize || symmetries.empty()) return;
    // One blending pass only contracts toward the invariant subspace, so
    // iterate until the vertices stop moving and the mesh is exactly fixed.
    for (int round = 0; round < 8; ++round) {
      std::vector<quat> sum = m.vertices;
      for (std::size_t s = 0; s < symmetries.size(); ++s)
        for (std::size_t i = 0; i < m.vertices.size(); ++i) {
          const auto j = static_cast<std::size_t>(maps[s][i]);
          sum[j] = sum[j] + symmetries[s].apply(m.vertices[i]);
        }
      const double scale = 1.0 / (1.0 + static_cast<double>(symmetries.size()));
      double moved = 0.0;
      for (std::size_t i : free) {
        const quat blended = sum[i] * scale;
        const quat next = blended * (2.0 / blended.norm());
        moved = std::max(moved, distance(next, m.vertices[i]));
        m.vertices[i] = next;
      }
      if (moved < 1e-13) break;
    }
  };

  const auto projected_gradient = [&](const surface_mesh& m) {
    auto [area, grad] = area_and_gradient(m);
    double gmax = 0.0, g2 = 0.0;
    for (std::size_t i : free) {
      grad[i] = tangential(grad[i], m.vertices[i]);
      gmax = std::max(gmax, grad[i].norm());
      g2 += grad[i].norm2();
    }
    return std::tuple<double, std::vector<quat>, double, double>{area, std::move(grad), gmax, g2};
  };

  auto [area, grad, gmax, g2] = projected_gradient(mesh);
  plateau_result out;
  out.area_trace.push_back(area);
  std::size_t iter = 0;

  // Phase A — root solve of the first-order conditions.  In per-vertex
  // tangent coordinates, drive the projected gradient to zero by damped
  // Gauss–Newton (finite-difference Jacobian, Levenberg damping, step
  // acceptance on ‖residual‖ decrease).  Descent alone cannot reach the
  // balanced configuration: it is a saddle of the inscribed area.
  const std::size_t dofs = 3 * free.size();
  if (opts.newton_refine && !free.empty() && dofs <= 1200) {
    std::vector<tangent_frame> frames(free.size());
    std::vector<double> res(dofs), res_trial(dofs), jac(dofs * dofs);
    std::vector<double> normal(dofs * dofs), rhs(dofs), delta(dofs);
    surface_mesh trial = mesh;
    double lambda = 0.0;

    const auto residual_at = [&](const surface_mesh& m, std::vector<double>& r) {
      const auto [a, g] = area_and_gradient(m);
      static_cast<void>(a);
      double worst = 0.0;
      for (std::size_t k = 0; k < free.size(); ++k) {
        const quat t = tangential(g[free[k]], m.vertices[free[k]]);
        worst = std::max(worst, t.norm());
        for (int c = 0; c < 3; ++c) r[3 * k + static_cast<std::size_t>(c)] = dot(t, frames[k].t[c]);
      }
      return worst;
    };

    for (std::size_t outer = 0; outer < 60 && iter < opts.max_iterations; ++outer, ++iter) {
      for (std::size_t k = 0; k < free.size(); ++k) frames[k] = frame_at(mesh.vertices[free[k]]);
      const double res_max = residual_at(mesh, res);
      if (res_max <= 0.25 * opts.gradient_tol) break;
      double res2 = 0.0;
      for (double v : res) res2 += v * v;

      const double h = 1e-6;
      for (std::size_t col = 0; col < dofs; ++col) {
        const std::size_t i = free[col / 3];
        trial.vertices = mesh.vertices;
        const quat moved = mesh.vertices[i] + frames[col / 3].t[col % 3] * h;
        trial.vertices[i] = moved * (2.0 / moved.norm());
        residual_at(trial, res_trial);
        for (std::size_t row = 0; row < dofs; ++row)
          jac[row * dofs + col] = (res_trial[row] - res[row]) / h;
      }
      std::vector<double> jtj(dofs * dofs), jtr(dofs);
      for (std::size_t a = 0; a < dofs; ++a) {
        for (std::size_t b = a; b < dofs; ++b) {
          double v = 0.0;
          for (std::size_t row = 0; row < dofs; ++row) v += jac[row * dofs + a] * jac[row * dofs + b];
          jtj[a * dofs + b] = jtj[b * dofs + a] = v;
        }
        double v = 0.0;
        for (std::size_t row = 0; row < dofs; ++row) v += jac[row * dofs + a] * res[row];
        jtr[a] = v;
      }

      bool accepted = false;
      for (int tries = 0; tries < 40 && !accepted; ++tries) {
        normal = jtj;
        for (std::size_t d = 0; d < dofs; ++d)
          normal[d * dofs + d] += lambda * std::max(jtj[d * dofs + d], 1e-12);
        rhs = jtr;
        if (!dense_solve(normal, rhs, dofs)) {
          lambda = lambda == 0.0 ? 1e-8 : lambda * 10.0;
          continue;
        }
        double step_max = 0.0;
        for (std::size_t d = 0; d < dofs; ++d) {
          delta[d] = -rhs[d];
          step_max = std::max(step_max, std::abs(delta[d]));
        }
        if (step_max > 0.25) { // keep the update local to the linearization
          lambda = lambda == 0.0 ? 1e-8 : lambda * 10.0;
          continue;
        }
        trial.vertices = mesh.vertices;
        for (std::size_t k = 0; k < free.size(); ++k) {
          const quat moved = mesh.vertices[free[k]] + frames[k].t[0] * delta[3 * k] +
                             frames[k].t[1] * delta[3 * k + 1] + frames[k].t[2] * delta[3 * k + 2];
          trial.vertices[free[k]] = moved * (2.0 / moved.norm());
        }
        average_with_images(trial);
        residual_at(trial, res_trial);
        double trial2 = 0.0;
        for (double v : res_trial) trial2 += v * v;
        if (trial2 < res2) {
          std::swap(mesh.vertices, trial.vertices);
          lambda = lambda < 4e-14 ? 0.0 : lambda * 0.25;
          accepted = true;
        } else {
          lambda = lambda == 0.0 ? 1e-8 : lambda * 10.0;
        }
      }
      if (!accepted) break;
      std::tie(area, grad, gmax, g2) = projected_gradient(mesh);
      out.area_trace.push_back(area);
    }
    std::tie(area, grad, gmax, g2) = projected_gradient(mesh);
  }

  // Phase B — projected-gradient descent with backtracking: certifies the
  // termination criterion and handles meshes the smoothing cannot improve.
  double step = 0.25;
  surface_mesh trial = mesh;
  for (; iter < opts.max_iterations; ++iter) {
    if (gmax <= opts.gradient_tol) {
      out.converged = true;
      break;
    }
    step = std::min(step * 2.0, 64.0);
    bool accepted = false;
    while (step > 1e-16) {
      for (std::size_t i : free) {
        const quat moved = mesh.vertices[i] - grad[i] * step;
        trial.vertices[i] = moved * (2.0 / moved.norm());
      }
      average_with_images(trial);
      if (area_and_gradient(trial).first <= area - opts.armijo * step * g2) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break; // stalled: report the best iterate reached
    std::swap(mesh.vertices, trial.vertices);
    std::tie(area, grad, gmax, g2) = projected_gradient(mesh);
    out.area_trace.push_back(area);
  }
  out.converged = gmax <= opts.gradient_tol;

  out.mesh = std::move(mesh);
  out.iterations = iter;
  out.area = area;
  out.max_gradient = gmax;
  if (!maps.empty()) out.symmetry_deviation = symmetry_mismatch(out.mesh, symmetries, maps);

  const convex_hull_cell hull = convex_hull(q);
  if (hull.kind == hull_kind::tetrahedron) {
    double violation = 0.0;
    for (std::size_t i : free)
      for (const quat& normal : hull.face_normal)
        violation = std::max(violation, -dot(normal, out.mesh.vertices[i]));
    out.hull_violation = violation;
  }
  return out;
}

double mean_curvature_residual(const surface_mesh& m) {
  const auto [area, grad] = area_and_gradient(m);
  static_cast<void>(area);
  std::vector<double> dual(m.vertices.size(), 0.0);
  for (std::size_t f = 0; f < m.faces.size(); ++f) {
    const double third = face_area(m, f) / 3.0;
    for (int c = 0; c < 3; ++c) dual[static_cast<std::size_t>(m.faces[f][c])] += third;
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < m.vertices.size(); ++i) {
    if (m.tags[i].boundary() || dual[i] <= 0.0) continue;
    worst = std::max(worst, tangential(grad[i], m.vertices[i]).norm() / dual[i]);
  }
  return worst;
}

surface_mesh extend_by_group(const surface_mesh& disk, const std::vector<rotation4>& group) {
  if (group.empty() || disk.faces.empty())
    throw error(errc::degenerate_spec, "extend_by_group: empty group or disk");

  surface_mesh out;
  point_index index(4.0 * tol::weld);
  std::vector<int> map(disk.vertices.size());
  for (const rotation4& g : group) {
    for (std::size_t i = 0; i < disk.vertices.size(); ++i) {
      const quat w = g.apply(disk.vertices[i]);
      if (disk.tags[i].boundary()) {
        const int found = index.find(w, out.vertices, tol::weld);
        if (found >= 0) {
          map[i] = found;
          continue;
        }
        map[i] = static_cast<int>(out.vertices.size());
        index.insert(w, map[i]);
      } else {
        map[i] = static_cast<int>(out.vertices.size());
      }
      out.vertices.push_back(w);
    }
    for (const auto& f : disk.faces) {
      const std::array<int, 3> t{map[static_cast<std::size_t>(f[0])],
                                 map[static_cast<std::size_t>(f[1])],
                                 map[static_cast<std::size_t>(f[2])]};
      if (t[0] == t[1] || t[1] == t[2] || t[2] == t[0])
        throw error(errc::weld_failure, "extend_by_group: welding collapsed a face");
      out.faces.push_back(t);
    }
  }

  // Edge census: every edge must end up in exactly two faces.
  struct edge_slot {
    std::uint64_t key;
    int face;
    bool forward;
  };
  std::vector<edge_slot> slots;
  slots.reserve(3 * out.faces.size());
  for (std::size_t f = 0; f < out.faces.size(); ++f)
    for (int e = 0; e < 3; ++e) {
      const auto a = static_cast<std::uint32_t>(out.faces[f][e]);
      const auto b = static_cast<std::uint32_t>(out.faces[f][(e + 1) % 3]);
      const std::uint64_t lo = std::min(a, b), hi = std::max(a, b);
      slots.push_back({(lo << 32) | hi, static_cast<int>(f), a < b});
    }
  std::sort(slots.begin(), slots.end(),
            [](const edge_slot& u, const edge_slot& v) { return u.key < v.key; });

  parity_forest forest(out.faces.size());
  for (std::size_t at = 0; at < slots.size();) {
    std::size_t end = at;
    while (end < slots.size() && slots[end].key == slots[at].key) ++end;
    if (end - at == 1)
      throw error(errc::weld_failure, "extend_by_group: a boundary seam failed to close");
    if (end - at > 2)
      throw error(errc::non_manifold, "extend_by_group: an edge is shared by three or more faces");
    // Faces already traversing the edge oppositely keep equal parity.
    const int want = slots[at].forward == slots[at + 1].forward ? 1 : 0;
    if (!forest.join(slots[at].face, slots[at + 1].face, want))
      throw error(errc::non_manifold, "extend_by_group: welded surface is not orientable");
    at = end;
  }
  for (std::size_t f = 0; f < out.faces.size(); ++f)
    if (forest.parity_of(static_cast<int>(f)) == 1) std::swap(out.faces[f][1], out.faces[f][2]);

  out.tags.assign(out.vertices.size(), vertex_tag::interior());
  return out;
}

long long quotient_genus(const group_spec& spec, const std::vector<rotation4>& subgroup) {
  if (subgroup.empty())
    throw error(errc::degenerate_spec, "quotient_genus: empty subgroup");
  if (!acts_freely(subgroup))
    throw error(errc::not_free, "quotient_genus: subgroup does not act freely on the sphere");

  const std::vector<quadrilateral> orbit = quad_orbit(spec);
  std::vector<quat> corners;
  point_index index(1e-4);
  const auto corner_id = [&](const quat& p, bool may_insert) {
    const int found = index.find(p, corners, tol::weld);
    if (found >= 0 || !may_insert) return found;
    const int id = static_cast<int>(corners.size());
    index.insert(p, id);
    corners.push_back(p);
    return id;
  };

  std::set<std::array<int, 4>> keys;
  std::vector<std::array<int, 4>> quad_keys;
  quad_keys.reserve(orbit.size());
  for (const quadrilateral& qd : orbit) {
    std::array<int, 4> key{};
    for (std::size_t t = 0; t < 4; ++t) key[t] = corner_id(qd.vertex[t], true);
    std::sort(key.begin(), key.end());
    keys.insert(key);
    quad_keys.push_back(key);
  }

  for (const rotation4& h : subgroup) {
    if (h.is_identity()) continue;
    std::vector<int> perm(corners.size());
    for (std::size_t c = 0; c < corners.size(); ++c) {
      const int image = corner_id(h.apply(corners[c]), false);
      if (image < 0)
        throw error(errc::not_invariant,
                    "quotient_genus: subgroup moves a skeleton vertex off the orbit");
      perm[c] = image;
    }
    for (const auto& key : quad_keys) {
      std::array<int, 4> mapped{perm[static_cast<std::size_t>(key[0])],
                                perm[static_cast<std::size_t>(key[1])],
                                perm[static_cast<std::size_t>(key[2])],
                                perm[static_cast<std::size_t>(key[3])]};
      std::sort(mapped.begin(), mapped.end());
      if (!keys.contains(mapped))
        throw error(errc::not_invariant,
                    "quotient_genus: subgroup does not permute the quadrilateral orbit");
      if (mapped == key)
        throw error(errc::not_free, "quotient_genus: subgroup stabilizes a quadrilateral");
    }
  }

  const cell_counts cells = complex_counts(spec);
  const long long chi = static_cast<long long>(cells.vertices) -
                        static_cast<long long>(cells.edges) +
                        static_cast<long long>(cells.faces);
  const long long denom = 2LL * static_cast<long long>(subgroup.size());
  if (chi % denom != 0)
    throw error(errc::not_invariant,
                "quotient_genus: Euler characteristic is not divisible by the subgroup order");
  return 1 - chi / denom;
}

std::size_t embedded_spot_check(const surface_mesh& m, std::uint64_t seed,
                                std::size_t max_samples) {
  const std::size_t faces = m.faces.size();
  if (faces < 2) return 0;
  const double all_pairs = 0.5 * static_cast<double>(faces) * static_cast<double>(faces - 1);
  const auto samples =
      static_cast<std::size_t>(std::min(static_cast<double>(max_samples), std::ceil(0.01 * all_pairs)));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, faces - 1);
  std::size_t crossings = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto& f = m.faces[pick(rng)];
    const auto& g = m.faces[pick(rng)];
    bool adjacent = false;
    for (int a = 0; a < 3 && !adjacent; ++a)
      for (int b = 0; b < 3; ++b)
        if (f[a] == g[b]) {
          adjacent = true;
          break;
        }
    if (adjacent) continue;
    if (triangles_cross(m.vertices[static_cast<std::size_t>(f[0])],
                        m.vertices[static_cast<std::size_t>(f[1])],
                        m.vertices[static_cast<std::size_t>(f[2])],
                        m.vertices[static_cast<std::size_t>(g[0])],
                        m.vertices[static_cast<std::size_t>(g[1])],
                        m.vertices[static_cast<std::size_t>(g[2])]))
      ++crossings;
  }
  return crossings;
}

spec_solution solve_spec(const group_spec& spec, solver_options opts,
                         std::size_t triangle_budget) {
  const std::vector<rotation4> group = group_elements(spec);

  spec_solution out;
  int r = std::max(2, opts.refinement);
  while (r > 2 &&
         2.0 * static_cast<double>(group.size()) * r * r > static_cast<double>(triangle_budget))
    --r;
  out.degraded = r != opts.refinement;
  out.refinement = r;
  opts.refinement = r;

  const quadrilateral q = fundamental_quadrilateral(spec);
  std::vector<o4_element> symmetries;
  try {
    symmetries = quad_symmetries(spec, q);
  } catch (const error&) {
    symmetries.clear(); // degenerate member without usable extra symmetry
  }

  // Solve inside the invariant subspace whenever extra symmetries exist:
  // unconstrained runs can settle on asymmetric critical points, while a
  // converged symmetric disk inherits the quadrilateral's own isometries.
  opts.symmetrize = opts.symmetrize || !symmetries.empty();

  out.disk = minimize_area(init_disk(q, r), q, opts, symmetries);
  out.residual = mean_curvature_residual(out.disk.mesh);
  out.closed = extend_by_group(out.disk.mesh, group);
  out.euler = euler_characteristic(out.closed);
  out.genus = mesh_genus(out.closed);
  out.area = total_area(out.closed);
  return out;
}

} // namespace hopfmin
