#pragma once

#include <array>
#include <string>

#include "hopfmin/mesh.hpp"
#include "hopfmin/rotation.hpp"

namespace hopfmin {

/// How to map the radius-2 three-sphere into ordinary 3-space for viewing:
/// rotate first, then project stereographically from the pole.
struct projection_frame {
  quat pole{-2.0, 0.0, 0.0, 0.0}; ///< projection centre, norm 2
  rotation4 orientation{};        ///< applied to every point before projecting
};

/// Stereographic image (x, y, z)/(t + 2) of the reoriented point
/// t + xi + yj + zk.  The point 2 maps to the origin and 2i to (1, 0, 0);
/// the pole itself has no image.
/// @throws error{errc::pole_singularity} when the reoriented point comes
///         within 1e−6 of the frame's pole.
[[nodiscard]] std::array<double, 3> stereographic(const quat& r,
                                                  const projection_frame& frame = {});

/// A frame whose rotation keeps every mesh vertex at least `margin` away
/// from the pole, chosen deterministically from a fixed candidate list (the
/// best candidate wins; ties keep the earlier one).  Use when a surface
/// passes through the default pole.
/// @throws error{errc::pole_singularity} when no candidate clears the margin.
[[nodiscard]] projection_frame frame_avoiding_mesh(const surface_mesh& m, double margin = 1e-3);

/// Write the projected mesh as an ASCII polygon file: one `v x y z` line per
/// vertex with nine significant digits, then one 1-based `f a b c` line per
/// face, orientation preserved.  An empty mesh produces an empty (valid)
/// file.
/// @throws error{errc::pole_singularity} when a vertex sits within 1e−6 of
///         the pole, error{errc::io_error} when the file cannot be written.
void export_mesh(const surface_mesh& m, const projection_frame& frame, const std::string& path);

/// Companion file carrying the same mesh at full double precision: JSON with
/// the projected coordinates, the original 4-space coordinates, and the
/// faces.  Byte-identical output for identical input.
void export_mesh_json(const surface_mesh& m, const projection_frame& frame,
                      const std::string& path);

/// Re-read a file written by export_mesh.  The result lives in projection
/// space: vertices are pure-imaginary quaternions xi + yj + zk, every tag is
/// interior, faces keep their orientation.
/// @throws error{errc::io_error} on missing files or malformed records.
[[nodiscard]] surface_mesh import_mesh(const std::string& path);

} // namespace hopfmin
