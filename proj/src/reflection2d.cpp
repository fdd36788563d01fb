#include "hopfmin/reflection2d.hpp"

#include <cmath>
#include <utility>

#include "hopfmin/closure.hpp"

namespace hopfmin {

std::vector<signed_rotation3> reflection_group_generators(mirror_family family, int l) {
  if (l < 1) throw error(errc::degenerate_spec, "reflection group parameter l must be ≥ 1");
  const auto rot = [](const quat& p) { return signed_rotation3{rotation3{p}, +1}; };
  const auto antirot = [](const quat& p) { return signed_rotation3{rotation3{p}, -1}; };
  const double third = M_PI / 3.0;
  switch (family) {
    case mirror_family::cyclic:
      return {rot(axis_form(qi, M_PI / l)), antirot(qj)};
    case mirror_family::dihedral:
      return {rot(axis_form(qi, M_PI / l)), antirot(qj), rot(qk)};
    case mirror_family::tetra:
      return {rot(exp_i(M_PI / 2.0)), rot(axis_form(special::v_tet, third)),
              antirot(exp_i(M_PI / 4.0) * qk)};
    case mirror_family::octa:
      return {rot(exp_i(M_PI / 4.0)), rot(axis_form(special::v_tet, third)), antirot(qk)};
    case mirror_family::icosa:
      return {rot(exp_i(M_PI / 2.0)), rot(axis_form(special::v_ico, third)), antirot(qk)};
  }
  throw error(errc::degenerate_spec, "unknown mirror family");
}

std::vector<signed_rotation3> reflection_group_2d(mirror_family family, int l,
                                                  std::size_t max_elements) {
  const auto generators = reflection_group_generators(family, l);
  auto key_fn = [](const signed_rotation3& g) {
    const quat& p = g.rot.p;
    return std::pair<std::uint64_t, std::vector<double>>{
        g.sign == +1 ? 0u : 1u, {p.t, p.x, p.y, p.z}};
  };
  return detail::close_group(generators, key_fn, max_elements);
}

std::size_t reflection_group_order(mirror_family family, int l) {
  if (l < 1) throw error(errc::degenerate_spec, "reflection group parameter l must be ≥ 1");
  switch (family) {
    case mirror_family::cyclic: return 2u * static_cast<std::size_t>(l);
    case mirror_family::dihedral: return 4u * static_cast<std::size_t>(l);
    case mirror_family::tetra: return 24u;
    case mirror_family::octa: return 48u;
    case mirror_family::icosa: return 120u;
  }
  throw error(errc::degenerate_spec, "unknown mirror family");
}

std::vector<quat> tessellation_mirrors(const std::vector<signed_rotation3>& group) {
  std::vector<quat> normals;
  for (const signed_rotation3& g : group) {
    if (!g.is_reflection()) continue;
    quat u = g.mirror_normal();
    // Canonical sign: first significant component positive.
    const double* c = &u.t;
    for (int idx = 0; idx < 4; ++idx) {
      if (c[idx] > tol::unit) break;
      if (c[idx] < -tol::unit) {
        u = -u;
        break;
      }
    }
    bool seen = false;
    for (const quat& v : normals)
      if (distance(u, v) < tol::group) seen = true;
    if (!seen) normals.push_back(u);
  }
  return normals;
}

std::size_t tessellation_circle_count(mirror_family family, int l) {
  if (l < 1) throw error(errc::degenerate_spec, "reflection group parameter l must be ≥ 1");
  switch (family) {
    case mirror_family::cyclic: return static_cast<std::size_t>(l);
    case mirror_family::dihedral: return static_cast<std::size_t>(l) + 1u;
    case mirror_family::tetra: return 6u;
    case mirror_family::octa: return 9u;
    case mirror_family::icosa: return 15u;
  }
  throw error(errc::degenerate_spec, "unknown mirror family");
}

} // namespace hopfmin
