#pragma once

#include <vector>

#include "hopfmin/rotation.hpp"
#include "hopfmin/sphere2.hpp"

namespace hopfmin {

/// The five families of finite reflection groups acting on the two-sphere:
/// cyclic pyramid (2l), dihedral prism (4l), and the full tetrahedral (24),
/// octahedral (48) and icosahedral (120) groups.
enum class mirror_family { cyclic, dihedral, tetra, octa, icosa };

/// Generators of the reflection group: rotations together with one
/// orientation-reversing element.  l is the order parameter for the cyclic
/// and dihedral families (ignored otherwise, must be ≥ 1).
[[nodiscard]] std::vector<signed_rotation3> reflection_group_generators(mirror_family family,
                                                                        int l = 1);

/// All elements of the group, identity first, in deterministic order.
/// @throws error{errc::closure_overflow} beyond max_elements.
[[nodiscard]] std::vector<signed_rotation3> reflection_group_2d(mirror_family family, int l = 1,
                                                                std::size_t max_elements = 100000);

/// Order of the full group: 2l, 4l, 24, 48, 120.
[[nodiscard]] std::size_t reflection_group_order(mirror_family family, int l = 1);

/// Unit normals of the mirror circles (one per reflection in the group,
/// deduplicated up to sign).  The mirrors cut the sphere into congruent
/// cells of area 4π/|group|.
[[nodiscard]] std::vector<quat> tessellation_mirrors(const std::vector<signed_rotation3>& group);

/// Number of mirror circles for each family: l, l+1, 6, 9, 15.
[[nodiscard]] std::size_t tessellation_circle_count(mirror_family family, int l = 1);

} // namespace hopfmin
