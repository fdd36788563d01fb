#include "hopfmin/skeleton.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "hopfmin/errors.hpp"
#include "hopfmin/hopf.hpp"
#include "hopfmin/symmetry_group.hpp"

namespace hopfmin {

namespace {

constexpr double pi = 3.14159265358979323846;
constexpr double two_pi = 2 * pi;

/// Ids for geometric points compared within eps (linear scan: the registries
/// here stay small and the copies of one point agree to machine precision).
class point_registry {
 public:
  explicit point_registry(double eps) : eps_(eps) {}

  int id_of(const quat& p) {
    for (std::size_t k = 0; k < points_.size(); ++k)
      if (distance(points_[k], p) <= eps_) return static_cast<int>(k);
    points_.push_back(p);
    return static_cast<int>(points_.size() - 1);
  }

  [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }

 private:
  double eps_;
  std::vector<quat> points_;
};

struct plane_basis {
  quat a; ///< unit
  quat b; ///< unit, orthogonal to a
};

/// Principal angles between two 2-planes through the origin: cosines in
/// decreasing order with the matching unit directions in each plane.
struct principal_pairs {
  double cos0, cos1;
  quat a0, a1; ///< directions in the first plane
  quat b0, b1; ///< directions in the second plane (undefined when cos ≈ 0)
};

principal_pairs principal_angles(const plane_basis& A, const plane_basis& B) {
  const double g11 = dot(A.a, B.a), g12 = dot(A.a, B.b);
  const double g21 = dot(A.b, B.a), g22 = dot(A.b, B.b);
  // Eigen-decomposition of G·Gᵀ fixes the directions in the first plane.
  const double p = g11 * g11 + g12 * g12;
  const double r = g21 * g21 + g22 * g22;
  const double q = g11 * g21 + g12 * g22;
  const double theta = 0.5 * std::atan2(2 * q, p - r);
  const double c = std::cos(theta), s = std::sin(theta);
  const double lam0 = p * c * c + 2 * q * c * s + r * s * s;
  const double lam1 = p * s * s - 2 * q * c * s + r * c * c;

  principal_pairs out{};
  const bool swap = lam1 > lam0;
  const double c0 = swap ? -s : c, s0 = swap ? c : s;
  const double c1 = swap ? c : -s, s1 = swap ? s : c;
  out.a0 = A.a * c0 + A.b * s0;
  out.a1 = A.a * c1 + A.b * s1;
  const auto image = [&](double x, double y) {
    return B.a * (g11 * x + g21 * y) + B.b * (g12 * x + g22 * y);
  };
  const quat i0 = image(c0, s0), i1 = image(c1, s1);
  out.cos0 = i0.norm();
  out.cos1 = i1.norm();
  out.b0 = out.cos0 > 1e-12 ? i0 / out.cos0 : B.a;
  out.b1 = out.cos1 > 1e-12 ? i1 / out.cos1 : B.b;
  return out;
}

plane_basis basis_of(const great_circle& c) { return {c.through / 2, c.tangent}; }

/// Parameter of a point on the circle (the point must lie on it).
double circle_parameter(const great_circle& c, const quat& p) {
  return std::atan2(dot(p, c.tangent) / 2, dot(p, c.through) / 4) * 2;
}

quat transport(const rotation4& g, const quat& v) { return g.apply(v); }

} // namespace

std::array<double, 16> great_circle::plane_projector() const noexcept {
  const quat a = through / 2;
  const quat b = tangent;
  const std::array<double, 4> av{a.t, a.x, a.y, a.z};
  const std::array<double, 4> bv{b.t, b.x, b.y, b.z};
  std::array<double, 16> out{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out[static_cast<std::size_t>(4 * r + c)] = av[static_cast<std::size_t>(r)] * av[static_cast<std::size_t>(c)] + bv[static_cast<std::size_t>(r)] * bv[static_cast<std::size_t>(c)];
  return out;
}

bool great_circle::same_circle(const great_circle& o, double eps) const noexcept {
  const std::array<double, 16> mine = plane_projector();
  const std::array<double, 16> theirs = o.plane_projector();
  for (std::size_t k = 0; k < 16; ++k)
    if (std::abs(mine[k] - theirs[k]) > eps) return false;
  return true;
}

great_circle circle_through(const arc3& a) noexcept { return {a.start, a.tangent}; }

skeleton build_skeleton(const group_spec& spec) {
  const quadrilateral q = fundamental_quadrilateral(spec);
  const std::vector<rotation4> group = group_elements(spec);

  skeleton sk{spec, {}};
  for (const rotation4& g : group)
    for (const arc3& e : q.edge) {
      const great_circle cand{transport(g, e.start), transport(g, e.tangent)};
      const bool seen = std::any_of(sk.circles.begin(), sk.circles.end(),
                                    [&](const great_circle& c) { return c.same_circle(cand); });
      if (!seen) sk.circles.push_back(cand);
    }
  return sk;
}

std::size_t fibre_intersection_count(const skeleton& sk, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 4 * pi);
  std::uniform_int_distribution<std::size_t> pick(0, sk.circles.size() - 1);

  std::size_t count = 0;
  for (int sample = 0; sample < 20; ++sample) {
    const quat base = hopf_project(sk.circles[pick(rng)].point_at(angle(rng)));
    const arc3 fibre_arc = fiber_circle(base);
    const plane_basis fibre{fibre_arc.start / 2, fibre_arc.tangent};
    std::size_t t = 0;
    for (const great_circle& c : sk.circles)
      if (principal_angles(basis_of(c), fibre).cos0 >= 1 - 1e-9) t += 2;
    if (sample == 0)
      count = t;
    else if (t != count)
      throw error(errc::not_invariant, "fibre_intersection_count: sample counts disagree");
  }
  return count;
}

std::vector<quadrilateral> quad_orbit(const group_spec& spec) {
  const auto [m, n] = spec.angle_labels();
  if (m * n == 1)
    throw error(errc::degenerate_spec, "quad_orbit: the (1,1) quadrilateral is a great circle");

  const quadrilateral q = fundamental_quadrilateral(spec);
  const std::vector<rotation4> group = group_elements(spec);

  std::vector<quadrilateral> orbit;
  orbit.reserve(group.size());
  point_registry corners(1e-6);
  std::set<std::array<int, 4>> seen;
  for (const rotation4& g : group) {
    quadrilateral image{
        {transport(g, q.vertex[0]), transport(g, q.vertex[1]), transport(g, q.vertex[2]),
         transport(g, q.vertex[3])},
        {arc3{transport(g, q.edge[0].start), transport(g, q.edge[0].tangent), q.edge[0].length},
         arc3{transport(g, q.edge[1].start), transport(g, q.edge[1].tangent), q.edge[1].length},
         arc3{transport(g, q.edge[2].start), transport(g, q.edge[2].tangent), q.edge[2].length},
         arc3{transport(g, q.edge[3].start), transport(g, q.edge[3].tangent), q.edge[3].length}},
        q.labels};
    std::array<int, 4> key{corners.id_of(image.vertex[0]), corners.id_of(image.vertex[1]),
                           corners.id_of(image.vertex[2]), corners.id_of(image.vertex[3])};
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second)
      throw error(errc::not_invariant, "quad_orbit: stabilizer of the quadrilateral not trivial");
    orbit.push_back(std::move(image));
  }
  return orbit;
}

cell_counts complex_counts(const group_spec& spec) {
  const auto [m, n] = spec.angle_labels();
  if (m < 2 || n < 2)
    throw error(errc::degenerate_spec, "complex_counts: needs both angle labels at least 2");

  const std::vector<quadrilateral> orbit = quad_orbit(spec);
  point_registry points(1e-6);
  std::map<std::array<int, 3>, int> edge_use;
  for (const quadrilateral& q : orbit)
    for (std::size_t e = 0; e < 4; ++e) {
      int a = points.id_of(q.vertex[e]);
      int b = points.id_of(q.vertex[(e + 1) % 4]);
      const int mid = points.id_of(q.edge[e].midpoint());
      if (a > b) std::swap(a, b);
      ++edge_use[{a, b, mid}];
    }

  cell_counts out;
  out.faces = orbit.size();
  out.edges = edge_use.size();
  for (const auto& [key, uses] : edge_use)
    if (uses != 2)
      throw error(errc::non_manifold, "complex_counts: an edge is not shared by two faces");
  // Midpoints entered the registry after all corners had been seen, so corner
  // ids form a prefix: count ids referenced as endpoints.
  std::set<int> corner_ids;
  for (const auto& [key, uses] : edge_use) {
    corner_ids.insert(key[0]);
    corner_ids.insert(key[1]);
  }
  out.vertices = corner_ids.size();
  return out;
}

long combinatorial_genus(const cell_counts& c) noexcept {
  const long chi = static_cast<long>(c.vertices) - static_cast<long>(c.edges) +
                   static_cast<long>(c.faces);
  return 1 - chi / 2;
}

bool convex_hull_cell::contains(const quat& r, double margin) const noexcept {
  if (kind != hull_kind::tetrahedron) return false;
  for (const quat& h : face_normal)
    if (dot(h, r) < margin) return false;
  return true;
}

convex_hull_cell convex_hull(const quadrilateral& q) {
  const auto [m, n] = q.labels;
  convex_hull_cell cell;
  cell.vertex = q.vertex;
  cell.face_normal = {quat{}, quat{}, quat{}, quat{}};
  cell.hemisphere_pole = quat{};

  double max_dist = 0;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a + 1; b < 4; ++b)
      max_dist = std::max(max_dist, geodesic_distance3(q.vertex[a], q.vertex[b]));
  cell.boundary_contact = max_dist >= pi - 1e-9;

  if (m * n == 1) {
    cell.kind = hull_kind::circle;
    return cell;
  }
  if (m == 1 || n == 1) {
    cell.kind = hull_kind::bigon;
    return cell;
  }

  cell.kind = hull_kind::tetrahedron;
  for (std::size_t f = 0; f < 4; ++f) {
    const quat& a = q.vertex[(f + 1) % 4];
    const quat& b = q.vertex[(f + 2) % 4];
    const quat& c = q.vertex[(f + 3) % 4];
    quat h = cross4(a / 2, b / 2, c / 2);
    const double len = h.norm();
    if (len < 1e-12)
      throw error(errc::degenerate_spec, "convex_hull: coplanar corners");
    h = h / len;
    if (dot(h, q.vertex[f]) < 0) h = -h;
    cell.face_normal[f] = h;
  }

  quat pole = (q.vertex[0] + q.vertex[1] + q.vertex[2] + q.vertex[3]) / 2;
  pole = pole / pole.norm();
  for (int iter = 0; iter < 256; ++iter) {
    double worst = 1e30;
    std::size_t worst_v = 0;
    for (std::size_t v = 0; v < 4; ++v) {
      const double d = dot(pole, q.vertex[v] / 2);
      if (d < worst) {
        worst = d;
        worst_v = v;
      }
    }
    if (worst > 1e-9) break;
    pole = pole + q.vertex[worst_v] / 2 * 0.5;
    pole = pole / pole.norm();
  }
  cell.hemisphere_pole = pole;
  return cell;
}

std::array<vertex_properness, 4> check_proper(const quadrilateral& q,
                                              std::size_t samples_per_edge) {
  std::vector<quat> samples;
  samples.reserve(4 + 4 * samples_per_edge);
  for (const quat& v : q.vertex) samples.push_back(v);
  for (const arc3& e : q.edge)
    for (std::size_t k = 1; k < samples_per_edge; ++k)
      samples.push_back(e.point_at(e.length * static_cast<double>(k) /
                                   static_cast<double>(samples_per_edge)));

  const auto bounded_by = [&](const quat& h) {
    double lo = 0, hi = 0;
    for (const quat& x : samples) {
      const double side = dot(x, h);
      lo = std::min(lo, side);
      hi = std::max(hi, side);
    }
    return lo >= -tol::unit || hi <= tol::unit;
  };

  std::array<vertex_properness, 4> out{};
  for (std::size_t t = 0; t < 4; ++t) {
    const quat v = q.vertex[t] / 2;
    const quat w_in = q.edge[(t + 3) % 4].end_tangent();
    const quat w_out = q.edge[t].tangent;
    quat axis = cross4(v, w_in, w_out);
    const double len = axis.norm();
    if (len < 1e-12) continue; // straight corner: no transversal direction
    axis = axis / len;
    const quat h_in = cross4(v, w_in, axis);
    const quat h_out = cross4(v, w_out, axis);
    out[t].bounded_by_incoming = bounded_by(h_in / h_in.norm());
    out[t].bounded_by_outgoing = bounded_by(h_out / h_out.norm());
  }
  return out;
}

perpendicular_segment common_perpendicular(const group_spec& spec, const quadrilateral& q) {
  const auto [m, n] = q.labels;
  if (m == 1 || n == 1)
    throw error(errc::degenerate_spec, "common_perpendicular: degenerate diagonal");

  const arc3 d1 = arc3::between(q.vertex[0], q.vertex[2]);
  const arc3 d2 = arc3::between(q.vertex[1], q.vertex[3]);
  const great_circle gc1 = circle_through(d1);
  const great_circle gc2 = circle_through(d2);

  const auto measure_residual = [&](const arc3& seg) {
    const double s1 = circle_parameter(gc1, seg.start);
    const double s2 = circle_parameter(gc2, seg.end());
    const double r1 = std::abs(dot(seg.tangent, gc1.tangent_at(s1)));
    const double r2 = std::abs(dot(seg.end_tangent(), gc2.tangent_at(s2)));
    return std::max(r1, r2);
  };

  const bool exceptional = spec.family == lifted_family::d_l_right ||
                           spec.family == lifted_family::o_half ||
                           spec.family == lifted_family::o_quarter ||
                           spec.family == lifted_family::i_half;

  arc3 best = d1;
  double best_residual = 1e30;
  bool found = false;

  if (!exceptional) {
    best = arc3::between(d1.midpoint(), d2.midpoint());
    best_residual = measure_residual(best);
    found = true;
  } else {
    // The fibre over the route's self-intersection meets the quadrilateral
    // orthogonally; the perpendicular from diagonal KM to that fibre,
    // doubled by the half turn about the fibre, joins KM to LN.
    const base_route br = route(spec);
    const arc3 fibre_arc = fiber_circle(br.crossing);
    const rotation4 half = fiber_half_turn(br.crossing);
    const principal_pairs pp =
        principal_angles(basis_of(gc1), {fibre_arc.start / 2, fibre_arc.tangent});

    const auto on_segment = [](const great_circle& gc, double length, const quat& pt) {
      double s = circle_parameter(gc, pt);
      if (s < 0) s += 4 * pi;
      return s > 1e-9 && s < length - 1e-9;
    };
    for (const quat& dir : {pp.a0, pp.a1, -pp.a0, -pp.a1}) {
      const quat o1 = dir * 2.0;
      if (!on_segment(gc1, d1.length, o1)) continue;
      const quat o2 = half.apply(o1);
      if (!on_segment(gc2, d2.length, o2)) continue;
      if (distance(o1, o2) < 1e-9) continue;
      const arc3 seg = arc3::between(o1, o2);
      const double res = measure_residual(seg);
      if (res < best_residual) {
        best_residual = res;
        best = seg;
        found = true;
      }
    }
  }

  if (!found || best_residual > 1e-6)
    throw error(errc::no_perpendicular, "common_perpendicular: no orthogonal segment found");
  return {best, best_residual};
}

rotation4 normalize_position(const quadrilateral& q, std::size_t vertex_index) {
  const std::size_t t = vertex_index % 4;
  const quat v = q.vertex[t];
  const quat away_out = q.edge[t].tangent;
  const quat away_in = -q.edge[(t + 3) % 4].end_tangent();
  const double len_out = q.edge[t].length;
  const double len_in = q.edge[(t + 3) % 4].length;

  const quat first = len_out >= len_in ? away_out : away_in;
  const quat second = len_out >= len_in ? away_in : away_out;

  // Solve p̄ v q = 2 with p = e^{iψ/2} and q forced to conj(v)p/2; the first
  // direction, horizontal at v, then lands on e^{i(ψ−2φ)}j, fixing φ.
  const quat c = first * v.conj() / 2;
  const double psi = std::atan2(c.z, c.y);
  const quat p = exp_i(psi / 2);
  rotation4 eta{p, v.conj() * p / 2};

  // Fibre-reversing flip when the second edge lands on the e^{−iα} side.
  if (dot(eta.apply(second), qk) < 0) eta = eta.then(rotation4{qj, qj});
  return eta;
}

} // namespace hopfmin
