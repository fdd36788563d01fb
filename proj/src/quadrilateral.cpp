#include "hopfmin/quadrilateral.hpp"

#include <cmath>
#include <utility>

namespace hopfmin {

namespace {

constexpr double pi = 3.14159265358979323846;
constexpr double close_tol = 1e-7;

using special::v_ico;
using special::v_ico_adj;
using special::v_oct;
using special::v_tet;
using special::v_tet_adj;

[[nodiscard]] double psi(double t) { return clamped_acos(t); }

/// The point reached from a, heading through b, after total length s.
[[nodiscard]] quat through(const quat& a, const quat& b, double s) {
  return arc2::toward(a, b, s).end();
}

[[nodiscard]] base_route corner_route(std::vector<arc2> arcs, bool crossed, const quat& u) {
  return base_route{polygon2{std::move(arcs)}, false, crossed, u};
}

[[nodiscard]] base_route mid_edge_route(std::vector<arc2> arcs, const quat& u) {
  return base_route{polygon2{std::move(arcs)}, true, true, u};
}

} // namespace

base_route route(const group_spec& spec) {
  const quat i = qi, j = qj, k = qk;
  switch (spec.family) {
    case lifted_family::c_mn: {
      // Four half great circles between the poles ±i; corners alternate
      // between the two poles.
      const double am = pi / spec.m, an = pi / spec.n;
      return corner_route({arc2{i, k, pi},
                           arc2{-i, exp_i(-an) * k, pi},
                           arc2{i, exp_i(-(am + an)) * k, pi},
                           arc2{-i, exp_i(-am) * k, pi}},
                          false, i);
    }
    case lifted_family::d_l: {
      const double al = pi / spec.l;
      const quat el = exp_i(-al) * k;
      return mid_edge_route({arc2{i, k, pi / 2},
                             arc2{k, j, al},
                             arc2::toward(el, i, pi),
                             arc2{-el, exp_i(-al) * j, al},
                             arc2{-k, i, pi / 2}},
                            i);
    }
    case lifted_family::d_l_right: {
      const double al = pi / spec.l;
      const quat em = exp_i(-2 * al) * k;
      return corner_route({arc2{i, k, pi / 2},
                           arc2{k, j, 2 * al},
                           arc2::toward(em, -i, pi / 2),
                           arc2{-i, exp_i(-al) * k, pi}},
                          true, exp_i(-al) * k);
    }
    case lifted_family::t_half: {
      const quat m = through(v_tet_adj, i, psi(-1.0 / 3));
      const quat n = through(v_tet, i, psi(-1.0 / 3));
      return mid_edge_route({arc2::between(i, v_tet),
                             arc2::between(v_tet, v_tet_adj),
                             arc2::toward(v_tet_adj, i, psi(-1.0 / 3)),
                             arc2::between(m, n),
                             arc2::between(n, i)},
                            i);
    }
    case lifted_family::t_third: {
      const quat n = through(i, v_tet_adj, psi(-1.0 / std::sqrt(3.0)));
      return corner_route({arc2::between(i, v_tet),
                           arc2::toward(v_tet, v_tet_adj, psi(-1.0 / std::sqrt(3.0))),
                           arc2::between(-k, n),
                           arc2::toward(n, v_tet_adj, psi(-1.0 / std::sqrt(3.0)))},
                          true, v_tet_adj);
    }
    case lifted_family::o_half: {
      const quat m = (i + j - k) * (1.0 / std::sqrt(3.0));
      return corner_route({arc2::toward(i, v_oct, pi / 2),
                           arc2::between(j, m),
                           arc2::toward(m, v_oct, psi(1.0 / 3)),
                           arc2::between(v_tet, i)},
                          true, v_oct);
    }
    case lifted_family::o_third: {
      const quat n = (j + k) * (1.0 / std::sqrt(2.0));
      return corner_route({arc2::between(i, v_oct),
                           arc2::toward(v_oct, v_tet, pi / 2),
                           arc2::between(k, n),
                           arc2::toward(n, v_tet, pi / 2)},
                          true, v_tet);
    }
    case lifted_family::o_quarter: {
      const quat m = through(v_tet, i, psi(-1.0 / 3));
      const quat n = (i - j) * (1.0 / std::sqrt(2.0));
      return mid_edge_route({arc2::between(i, v_oct),
                             arc2::between(v_oct, v_tet),
                             arc2::toward(v_tet, i, psi(-1.0 / 3)),
                             arc2::between(m, n),
                             arc2::between(n, i)},
                            i);
    }
    case lifted_family::i_half: {
      const quat m = through(v_ico_adj, i, psi(1.0 / std::sqrt(5.0)));
      const quat n = through(v_ico, i, psi(std::sqrt(5.0) / 3));
      return mid_edge_route({arc2::between(i, v_ico),
                             arc2::between(v_ico, v_ico_adj),
                             arc2::toward(v_ico_adj, i, psi(1.0 / std::sqrt(5.0))),
                             arc2::between(m, n),
                             arc2::between(n, i)},
                            i);
    }
    case lifted_family::i_third: {
      const double len = psi(special::kappa);
      const quat m = through(v_ico_adj, v_ico, len);
      return corner_route({arc2::toward(i, v_ico, len),
                           arc2::between(through(i, v_ico, len), m),
                           arc2::toward(m, v_ico, len),
                           arc2::between(v_ico_adj, i)},
                          true, v_ico);
    }
    case lifted_family::i_fifth: {
      const double len = psi(special::sigma);
      const quat m = through(v_ico, v_ico_adj, len);
      const quat n = through(i, v_ico_adj, len);
      return corner_route({arc2::between(i, v_ico),
                           arc2::toward(v_ico, v_ico_adj, len),
                           arc2::between(m, n),
                           arc2::toward(n, v_ico_adj, len)},
                          true, v_ico_adj);
    }
  }
  throw error(errc::degenerate_spec, "route: unknown family");
}

quadrilateral fundamental_quadrilateral(const group_spec& spec) {
  const base_route br = route(spec);
  const std::vector<arc2>& base = br.path.arcs();
  const quat r0 = fiber_through(base.front().start);
  const std::vector<arc3> lifted = lift_path(base, r0);

  if (distance(lifted.back().end(), r0) > close_tol)
    throw error(errc::lift_not_closed, "fundamental_quadrilateral: lift endpoint misses start");

  if (!br.starts_mid_edge)
    return {{lifted[0].start, lifted[1].start, lifted[2].start, lifted[3].start},
            {lifted[0], lifted[1], lifted[2], lifted[3]},
            spec.angle_labels()};

  // Mid-edge start: the final and first lifted arcs are the two halves of
  // edge NK, split at the start point over i.
  const arc3& tail = lifted[4];
  const arc3& head = lifted[0];
  if (distance(tail.end_tangent(), head.tangent) > close_tol)
    throw error(errc::lift_not_closed,
                "fundamental_quadrilateral: half-edges of NK are not collinear");
  const arc3 nk{tail.start, tail.tangent, tail.length + head.length};
  if (distance(nk.end(), head.end()) > close_tol)
    throw error(errc::lift_not_closed, "fundamental_quadrilateral: merged edge misses K");

  return {{head.end(), lifted[2].start, lifted[3].start, lifted[4].start},
          {lifted[1], lifted[2], lifted[3], nk},
          spec.angle_labels()};
}

quadrilateral quad_from_vertices(const std::array<quat, 4>& vertex, std::pair<int, int> labels) {
  for (const quat& v : vertex)
    if (std::abs(v.norm() - 2.0) > tol::unit)
      throw error(errc::degenerate_spec, "quad_from_vertices: corner off the sphere");
  return {vertex,
          {arc3::between(vertex[0], vertex[1]), arc3::between(vertex[1], vertex[2]),
           arc3::between(vertex[2], vertex[3]), arc3::between(vertex[3], vertex[0])},
          labels};
}

quad_metrics measure(const quadrilateral& q) {
  quad_metrics out{};
  for (std::size_t t = 0; t < 4; ++t) {
    out.edge_length[t] = q.edge[t].length;
    const arc3& in = q.edge[(t + 3) % 4];
    out.corner_angle[t] = angle_between(-in.end_tangent(), q.edge[t].tangent);
  }
  return out;
}

quad_metrics reference_metrics(const group_spec& spec) {
  const double s3 = 1.0 / std::sqrt(3.0), s5 = 1.0 / std::sqrt(5.0), s6 = 2.0 / std::sqrt(6.0);
  const double mu = special::mu, nu = special::nu, kp = special::kappa, sg = special::sigma;
  switch (spec.family) {
    case lifted_family::c_mn:
      return {{pi, pi, pi, pi}, {pi / spec.m, pi / spec.n, pi / spec.m, pi / spec.n}};
    case lifted_family::d_l:
      return {{pi / spec.l, pi, pi / spec.l, pi}, {pi / 2, pi / 2, pi / 2, pi / 2}};
    case lifted_family::d_l_right:
      return {{pi / 2, 2 * pi / spec.l, pi / 2, pi}, {pi / spec.l, pi / 2, pi / 2, pi / spec.l}};
    case lifted_family::t_half:
      return {{psi(1.0 / 3), psi(-1.0 / 3), psi(1.0 / 3), psi(-1.0 / 3)},
              {pi / 3, pi / 3, pi / 3, pi / 3}};
    case lifted_family::t_third:
      return {{psi(s3), psi(-s3), psi(s3), psi(-s3)}, {pi / 2, pi / 3, pi / 2, pi / 3}};
    case lifted_family::o_half:
      return {{pi / 2, psi(s3), psi(1.0 / 3), psi(s3)}, {pi / 4, pi / 4, pi / 3, pi / 3}};
    case lifted_family::o_third:
      return {{pi / 4, pi / 2, pi / 4, pi / 2}, {pi / 4, pi / 2, pi / 4, pi / 2}};
    case lifted_family::o_quarter:
      return {{psi(s6), psi(-1.0 / 3), psi(s6), pi / 2}, {pi / 2, pi / 3, pi / 3, pi / 2}};
    case lifted_family::i_half:
      return {{psi(mu * nu), psi(s5), psi(mu * nu), psi(std::sqrt(5.0) / 3)},
              {pi / 3, pi / 5, pi / 5, pi / 3}};
    case lifted_family::i_third:
      return {{psi(kp), psi(nu), psi(kp), psi(nu)}, {pi / 2, pi / 5, pi / 2, pi / 5}};
    case lifted_family::i_fifth:
      return {{psi(mu), psi(sg), psi(mu), psi(sg)}, {pi / 2, pi / 3, pi / 2, pi / 3}};
  }
  throw error(errc::degenerate_spec, "reference_metrics: unknown family");
}

std::vector<o4_element> quad_symmetries(const group_spec& spec, const quadrilateral& q) {
  if (spec.family == lifted_family::c_mn && spec.m * spec.n == 1)
    throw error(errc::degenerate_spec,
                "quad_symmetries: the (1,1) quadrilateral collapses onto one great circle");
  std::vector<o4_element> out;
  switch (spec.family) {
    case lifted_family::d_l_right:
    case lifted_family::o_half:
    case lifted_family::o_quarter:
    case lifted_family::i_half:
      out.emplace_back(fiber_half_turn(route(spec).crossing));
      break;
    case lifted_family::c_mn:
    case lifted_family::t_third:
    case lifted_family::o_third:
    case lifted_family::i_third:
    case lifted_family::i_fifth: {
      const quat o1 = arc3::between(q.vertex[0], q.vertex[2]).midpoint();
      const quat o2 = arc3::between(q.vertex[1], q.vertex[3]).midpoint();
      const arc3 perp = arc3::between(o1, o2);
      out.emplace_back(half_turn_about_geodesic(o1, perp.tangent));
      break;
    }
    case lifted_family::d_l:
    case lifted_family::t_half:
      break;
  }
  if (spec.family == lifted_family::c_mn) {
    // Hyperplane-type reflection fixing K and M, exchanging L and N.
    const quat w = exp_i((pi - pi / spec.m) / 2) * qj;
    out.emplace_back(w, -w, true);
    if (spec.m == spec.n)
      // Half turn exchanging the two halves congruent to the right-angled
      // dihedral quadrilateral.
      out.emplace_back(rotation4{qi, exp_i(-pi / spec.m) * qk});
  }
  return out;
}

} // namespace hopfmin
