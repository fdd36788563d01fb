#pragma once

#include <stdexcept>
#include <string>

namespace hopfmin {

/// Failure categories raised by the library.  Every throwing operation
/// documents which codes it can raise.
enum class errc {
  not_in_e3,           ///< quaternion argument must be pure imaginary
  not_tangent,         ///< vector is not tangent to the sphere at the base point
  degenerate_polygon,  ///< consecutive polygon arcs double back on each other
  base_point_mismatch, ///< lift started over the wrong fibre
  closure_overflow,    ///< group closure exceeded its element budget
  out_of_table_domain, ///< parameters outside the classified isometry table
  lift_not_closed,     ///< a closed base route lifted to an open path
  degenerate_spec,     ///< operation undefined for this degenerate family member
  no_perpendicular,    ///< common perpendicular construction failed to verify
  weld_failure,        ///< boundary welding produced inconsistent identifications
  non_manifold,        ///< welded mesh is not an orientable closed manifold
  not_free,            ///< group action has fixed points where a free action is required
  not_invariant,       ///< subgroup does not preserve the cell orbit
  pole_singularity,    ///< mesh vertex too close to the projection pole
  io_error,            ///< file could not be read or written
};

/// Library exception type: a code from #errc plus a human-readable message.
class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  [[nodiscard]] errc code() const noexcept { return code_; }

private:
  errc code_;
};

} // namespace hopfmin
