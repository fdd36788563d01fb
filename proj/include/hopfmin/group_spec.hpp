#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hopfmin/errors.hpp"

namespace hopfmin {

/// The eleven families of lifted symmetry groups, named by the base
/// tessellation family (cyclic, dihedral, tetrahedral, octahedral,
/// icosahedral) and — where several lifts exist — the corner angle of the
/// fundamental cell the construction route turns through.
enum class lifted_family {
  c_mn,      ///< C(m,n): doubly cyclic, parameters m, n ≥ 1
  d_l,       ///< D(l): dihedral lift along cell edges, parameter l ≥ 1
  d_l_right, ///< D(l,π/2): dihedral lift turning at right angles, l ≥ 1
  t_half,    ///< T(π/2)
  t_third,   ///< T(π/3)
  o_half,    ///< O(π/2)
  o_third,   ///< O(π/3)
  o_quarter, ///< O(π/4)
  i_half,    ///< I(π/2)
  i_third,   ///< I(π/3)
  i_fifth,   ///< I(π/5)
};

/// A fully parameterized group choice: family plus the (m, n) or l values
/// for the parametric families.
struct group_spec {
  lifted_family family = lifted_family::c_mn;
  int m = 1; ///< C(m,n) only
  int n = 1; ///< C(m,n) only
  int l = 1; ///< D(l) and D(l,π/2) only

  [[nodiscard]] static group_spec cyclic(int m, int n) {
    return {lifted_family::c_mn, m, n, 1};
  }
  [[nodiscard]] static group_spec dihedral(int l) { return {lifted_family::d_l, 1, 1, l}; }
  [[nodiscard]] static group_spec dihedral_right(int l) {
    return {lifted_family::d_l_right, 1, 1, l};
  }
  [[nodiscard]] static group_spec fixed(lifted_family f) { return {f, 1, 1, 1}; }

  /// Parse "C(2,3)", "D(4)", "D(3,pi/2)", "T(pi/2)", "O(pi/4)", "I(pi/5)".
  /// @throws error{errc::degenerate_spec} on malformed strings.
  [[nodiscard]] static group_spec parse(const std::string& text);

  /// Canonical text form, the inverse of parse().
  [[nodiscard]] std::string str() const;

  /// Corner-angle labels (m, n) of the fundamental quadrilateral: opposite
  /// corners carry angles π/m and π/n.
  [[nodiscard]] std::pair<int, int> angle_labels() const;

  /// Group order: 2mn, 8l, 4l², 144, 96, 576, 384, 288, 3600, 2400, 1440.
  [[nodiscard]] std::size_t expected_order() const;

  /// Genus of the closed surface built from the quadrilateral orbit:
  /// 1 + (1 − 1/m − 1/n)·|G|/2.
  [[nodiscard]] std::size_t genus() const;

  bool operator==(const group_spec&) const = default;
};

/// All eleven families with representative parameters (C(2,2), C(2,3),
/// D(2), D(3), D(2,π/2), D(3,π/2) for the parametric ones) — the canonical
/// instances exercised by verification commands.
[[nodiscard]] std::vector<group_spec> canonical_specs();

} // namespace hopfmin
