#pragma once

#include <cstdint>
#include <vector>

#include "hopfmin/group_spec.hpp"
#include "hopfmin/rotation.hpp"

namespace hopfmin {

/// The three generators of the lifted symmetry group of the spec: two
/// fibration-preserving screw rotations and one half turn about a
/// horizontal great circle.
[[nodiscard]] std::vector<rotation4> group_generators(const group_spec& spec);

/// Breadth-first closure of a set of three-sphere rotations.  Deterministic
/// order, identity first.
/// @throws error{errc::closure_overflow} past max_elements.
[[nodiscard]] std::vector<rotation4> close_rotation_group(const std::vector<rotation4>& generators,
                                                          std::size_t max_elements = 10000);

/// Closure in the full isometry group (orientation-reversing elements
/// allowed).
[[nodiscard]] std::vector<o4_element> close_isometry_group(const std::vector<o4_element>& generators,
                                                           std::size_t max_elements = 40000);

/// All elements of the spec's group.
[[nodiscard]] std::vector<rotation4> group_elements(const group_spec& spec,
                                                    std::size_t max_elements = 10000);

/// |group_elements(spec)|; agrees with spec.expected_order().
[[nodiscard]] std::size_t group_order(const group_spec& spec);

/// Membership up to the ±(p,q) ambiguity.
[[nodiscard]] bool group_contains(const std::vector<rotation4>& group, const rotation4& g,
                                  double eps = tol::group);

/// Elements w⁻¹ g w: the isometries of the transformed configuration w(X)
/// when the input group preserves X.
[[nodiscard]] std::vector<rotation4> conjugate_group(const std::vector<rotation4>& group,
                                                     const rotation4& w);

/// Elements common to both groups (order of the first preserved).
[[nodiscard]] std::vector<rotation4> intersect_groups(const std::vector<rotation4>& a,
                                                      const std::vector<rotation4>& b);

/// The order-120 subgroup generated by the two right translations
/// [1, cos(π/4)+i sin(π/4)] and [1, cos(π/6)+v_ico sin(π/6)]; acts freely
/// and sits inside every icosahedral-family group.
[[nodiscard]] std::vector<rotation4> poincare_subgroup();

/// True when no element besides the identity fixes any point: checked
/// algebraically (a rotation [p,q] has fixed points iff Re p = Re q) and by
/// sampling random points.
[[nodiscard]] bool acts_freely(const std::vector<rotation4>& group, int samples = 1000,
                               std::uint64_t seed = 1);

/// Order of the full isometry group of the closed minimal surface, from the
/// classification: 8mn for C(m,n) with m ≠ n and (m−1)(n−1) ≥ 2, 16l² for
/// C(l,l) with l ≥ 3, and fixed values 192, 1152, 768, 576, 7200, 4800,
/// 2880 for T(π/3), O(π/2), O(π/3), O(π/4), I(π/2), I(π/3), I(π/5).
/// @throws error{errc::out_of_table_domain} for all other specs.
[[nodiscard]] std::size_t isometry_group_order(const group_spec& spec);

/// The fibre translation [e^{iπ/t}, 1] conjugating the symmetry group onto
/// the orientation-preserving isometries of the surface, where t is the
/// number of points in which the surface's skeleton meets a generic fibre
/// over its base graph.
[[nodiscard]] rotation4 conjugation_witness(int t);

} // namespace hopfmin
