#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hopfmin/group_spec.hpp"
#include "hopfmin/mesh.hpp"
#include "hopfmin/quadrilateral.hpp"
#include "hopfmin/rotation.hpp"

namespace hopfmin {

/// Knobs of the discrete area minimizer.
struct solver_options {
  int refinement = 16;                ///< grid density per quadrilateral, ≥ 2
  std::size_t max_iterations = 50000;
  double gradient_tol = tol::gradient; ///< stop when the largest projected gradient is below this
  double armijo = 1e-4;                ///< sufficient-decrease constant of the line search
  bool symmetrize = false;             ///< average iterates with their quadrilateral-symmetry images
  bool newton_refine = true;           ///< damped Gauss–Newton solve of the criticality system first
};

/// Outcome of one disk minimization.  When the gradient target was not met
/// the best iterate is returned with `converged == false` — no exception.
struct plateau_result {
  surface_mesh mesh;
  std::size_t iterations = 0;
  double area = 0.0;
  double max_gradient = 0.0;       ///< largest projected gradient norm at exit
  bool converged = false;
  double symmetry_deviation = 0.0; ///< worst vertex mismatch under the quadrilateral symmetries
  double hull_violation = 0.0;     ///< how far any interior vertex escapes the convex hull
  std::vector<double> area_trace;  ///< area after every accepted step (non-increasing over descent)
};

/// Structured spanning disk of a quadrilateral: a (refinement+1)² vertex
/// grid whose boundary rows are spaced equally by arc length along the four
/// edges, whose interior is a bilinear spherical blend of the opposite
/// boundary curves (the two matched-fraction great-circle rulings, averaged
/// and projected back to norm 2), and whose cells are split along their
/// shorter diagonal, near-equal diagonals alternating in a checkerboard.
/// For the doubly ruled members the blend already samples the exact surface,
/// so the grid starts at (or machine-close to) the discrete optimum.
[[nodiscard]] surface_mesh init_disk(const quadrilateral& q, int refinement);

/// Total flat-triangle area and its Euclidean gradient per vertex,
/// accumulated in face order.
[[nodiscard]] std::pair<double, std::vector<quat>> area_and_gradient(const surface_mesh& m);

/// Discrete area minimization with fixed boundary.  The genuine minima of
/// the inscribed flat-triangle area collapse interior triangles (a coarser
/// inscribed mesh always has less chordal area), so the balanced
/// configuration the construction wants is a saddle: pure descent slides
/// past it into slivers.  The solver therefore first drives the
/// sphere-tangential area gradient to zero directly — a damped Gauss–Newton
/// iteration on the first-order conditions in per-vertex tangent coordinates
/// — and then runs projected-gradient descent with backtracking line search,
/// which certifies the termination criterion and handles meshes the root
/// solve does not reach.  Accepted descent steps never increase the area.
/// When `opts.symmetrize` is set, `symmetries` (isometries mapping the
/// quadrilateral onto itself) are averaged into the iterate after every
/// step.
[[nodiscard]] plateau_result minimize_area(surface_mesh mesh, const quadrilateral& q,
                                           const solver_options& opts,
                                           const std::vector<o4_element>& symmetries = {});

/// Largest interior-vertex norm of the sphere-tangential area gradient,
/// divided by the vertex's dual-cell area (one third of its incident
/// triangle area).
[[nodiscard]] double mean_curvature_residual(const surface_mesh& m);

/// Union of the images of the disk under every group element, welded along
/// matching boundary vertices (within tol::weld, boundary tags only) and
/// reoriented into a closed oriented 2-manifold.
/// @throws error{errc::weld_failure} when boundary seams stay open,
///         error{errc::non_manifold} on overused edges or unorientability.
[[nodiscard]] surface_mesh extend_by_group(const surface_mesh& disk,
                                           const std::vector<rotation4>& group);

/// Genus of the surface quotient by a freely acting symmetry subgroup:
/// 1 − χ/(2·|subgroup|).
/// @throws error{errc::not_free} when the subgroup fixes points or fixes a
///         quadrilateral of the orbit, error{errc::not_invariant} when it
///         fails to permute the quadrilateral orbit.
[[nodiscard]] long long quotient_genus(const group_spec& spec,
                                       const std::vector<rotation4>& subgroup);

/// Triangle–triangle crossing count over a random sample of non-adjacent
/// face pairs (about one percent of all pairs, capped at `max_samples`).
[[nodiscard]] std::size_t embedded_spot_check(const surface_mesh& m, std::uint64_t seed = 1,
                                              std::size_t max_samples = 100000);

/// One full pipeline run: disk, minimization, group extension, topology.
struct spec_solution {
  int refinement = 0;      ///< effective grid density after the budget clamp
  bool degraded = false;   ///< true when the triangle budget lowered the refinement
  plateau_result disk;
  surface_mesh closed;
  long long euler = 0;
  long long genus = 0;
  double area = 0.0;       ///< flat area of the closed mesh
  double residual = 0.0;   ///< mean-curvature residual of the converged disk
};

/// Solve the Plateau problem of the spec's fundamental quadrilateral and
/// extend by the spec's group.  The refinement is lowered (never below 2)
/// until |group| · 2·refinement² fits the triangle budget.  Whenever the
/// quadrilateral has stabilizing isometries of its own the solve runs with
/// symmetrization on, so a converged disk is invariant under them; without
/// that constraint the optimizer can settle on asymmetric critical points.
[[nodiscard]] spec_solution solve_spec(const group_spec& spec, solver_options opts,
                                       std::size_t triangle_budget = 2000000);

} // namespace hopfmin
