#include "hopfmin/symmetry_group.hpp"

#include <cmath>
#include <random>
#include <utility>

#include "hopfmin/closure.hpp"
#include "hopfmin/sphere2.hpp"

namespace hopfmin {

namespace {

constexpr double pi = 3.14159265358979323846;

/// Screw motion [e^{iα}, cos α + u sin α]: fibre translation −2α combined
/// with the base rotation of angle 2α about u.
[[nodiscard]] rotation4 screw(double alpha, const quat& u) {
  return {exp_i(alpha), axis_form(u, alpha)};
}

[[nodiscard]] std::pair<std::uint64_t, std::vector<double>> rotation_key(const rotation4& g) {
  return {0ull, {g.p.t, g.p.x, g.p.y, g.p.z, g.q.t, g.q.x, g.q.y, g.q.z}};
}

[[nodiscard]] std::pair<std::uint64_t, std::vector<double>> isometry_key(const o4_element& g) {
  return {g.flip ? 1ull : 0ull, {g.p.t, g.p.x, g.p.y, g.p.z, g.q.t, g.q.x, g.q.y, g.q.z}};
}

} // namespace

std::vector<rotation4> group_generators(const group_spec& spec) {
  const rotation4 horiz_j{qj, qj};                       // half turn, C and D families
  const rotation4 horiz_k{qk, qk};                       // half turn, O and I families
  const quat w_t = exp_i(pi / 4) * qk;                   // half-turn axis, T family
  const rotation4 horiz_t{w_t, w_t};
  switch (spec.family) {
    case lifted_family::c_mn:
      return {screw(pi / spec.m, qi), {exp_i(pi / spec.n), axis_form(qi, -pi / spec.n)}, horiz_j};
    case lifted_family::d_l:
      return {screw(pi / 2, qk), {exp_i(pi / 2), axis_form(exp_i(-pi / spec.l) * qk, pi / 2)},
              horiz_j};
    case lifted_family::d_l_right:
      return {screw(pi / spec.l, qi), screw(pi / 2, qk), horiz_j};
    case lifted_family::t_half:
      return {screw(pi / 3, special::v_tet), screw(pi / 3, special::v_tet_adj), horiz_t};
    case lifted_family::t_third:
      return {screw(pi / 2, qi), screw(pi / 3, special::v_tet), horiz_t};
    case lifted_family::o_half:
      return {screw(pi / 3, special::v_tet), screw(pi / 4, qi), horiz_k};
    case lifted_family::o_third:
      return {screw(pi / 2, special::v_oct), screw(pi / 4, qi), horiz_k};
    case lifted_family::o_quarter:
      return {screw(pi / 2, special::v_oct), screw(pi / 3, special::v_tet), horiz_k};
    case lifted_family::i_half:
      return {screw(pi / 3, special::v_ico), screw(pi / 5, special::v_ico_adj), horiz_k};
    case lifted_family::i_third:
      return {screw(pi / 2, qi), screw(pi / 5, special::v_ico_adj), horiz_k};
    case lifted_family::i_fifth:
      return {screw(pi / 2, qi), screw(pi / 3, special::v_ico), horiz_k};
  }
  throw error(errc::degenerate_spec, "group_generators: unknown family");
}

std::vector<rotation4> close_rotation_group(const std::vector<rotation4>& generators,
                                            std::size_t max_elements) {
  return detail::close_group(generators, rotation_key, max_elements);
}

std::vector<o4_element> close_isometry_group(const std::vector<o4_element>& generators,
                                             std::size_t max_elements) {
  return detail::close_group(generators, isometry_key, max_elements);
}

std::vector<rotation4> group_elements(const group_spec& spec, std::size_t max_elements) {
  return close_rotation_group(group_generators(spec), max_elements);
}

std::size_t group_order(const group_spec& spec) { return group_elements(spec).size(); }

bool group_contains(const std::vector<rotation4>& group, const rotation4& g, double eps) {
  for (const rotation4& e : group)
    if (e.approx_eq(g, eps)) return true;
  return false;
}

std::vector<rotation4> conjugate_group(const std::vector<rotation4>& group, const rotation4& w) {
  std::vector<rotation4> out;
  out.reserve(group.size());
  const rotation4 winv = w.inverse();
  for (const rotation4& g : group) out.push_back(winv.then(g).then(w).canonical());
  return out;
}

std::vector<rotation4> intersect_groups(const std::vector<rotation4>& a,
                                        const std::vector<rotation4>& b) {
  std::vector<rotation4> out;
  for (const rotation4& g : a)
    if (group_contains(b, g)) out.push_back(g);
  return out;
}

std::vector<rotation4> poincare_subgroup() {
  const std::vector<rotation4> gens = {{one, axis_form(qi, pi / 2)},
                                       {one, axis_form(special::v_ico, pi / 3)}};
  return close_rotation_group(gens, 400);
}

bool acts_freely(const std::vector<rotation4>& group, int samples, std::uint64_t seed) {
  // A rotation [p, q] fixes some point of the three-sphere exactly when p
  // and q are conjugate, i.e. unit quaternions with equal real parts; the
  // criterion is invariant under the common sign flip.
  for (const rotation4& g : group) {
    if (g.is_identity()) continue;
    if (std::abs(g.p.t - g.q.t) <= tol::group) return false;
  }
  // Independent check: random points must all move by a definite amount.
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int s = 0; s < samples; ++s) {
    quat h{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
    if (h.norm() < 1e-3) continue;
    h = h.normalized() * 2.0;
    for (const rotation4& g : group) {
      if (g.is_identity()) continue;
      if (distance(g.apply(h), h) <= 1e-6) return false;
    }
  }
  return true;
}

std::size_t isometry_group_order(const group_spec& spec) {
  switch (spec.family) {
    case lifted_family::c_mn: {
      const long long genus = (spec.m - 1LL) * (spec.n - 1LL);
      if (spec.m == spec.n && spec.m >= 3)
        return 16ull * static_cast<std::size_t>(spec.m) * static_cast<std::size_t>(spec.m);
      if (spec.m != spec.n && genus >= 2)
        return 8ull * static_cast<std::size_t>(spec.m) * static_cast<std::size_t>(spec.n);
      throw error(errc::out_of_table_domain,
                  "isometry_group_order: C(m,n) requires genus >= 2 (and l >= 3 when m = n)");
    }
    case lifted_family::t_third: return 192;
    case lifted_family::o_half: return 1152;
    case lifted_family::o_third: return 768;
    case lifted_family::o_quarter: return 576;
    case lifted_family::i_half: return 7200;
    case lifted_family::i_third: return 4800;
    case lifted_family::i_fifth: return 2880;
    case lifted_family::t_half:
    case lifted_family::d_l:
    case lifted_family::d_l_right:
      break;
  }
  throw error(errc::out_of_table_domain,
              "isometry_group_order: no classified value for " + spec.str());
}

rotation4 conjugation_witness(int t) {
  if (t <= 0) throw error(errc::degenerate_spec, "conjugation_witness: t must be positive");
  return {exp_i(pi / t), one};
}

} // namespace hopfmin
