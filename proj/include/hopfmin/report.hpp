#pragma once

#include <cstdint>
#include <string>

#include "hopfmin/group_spec.hpp"
#include "hopfmin/plateau.hpp"

namespace hopfmin {

/// Shared knobs of the verification commands.
struct verify_options {
  double tolerance = 1e-9;             ///< absolute tolerance of the table comparisons
  std::uint64_t seed = 1;              ///< seed of the randomized property checks
  int holonomy_samples = 100;          ///< random triangles in the holonomy suite
};

// Every report below is a JSON document with a top-level "pass" flag, a
// "title", and a "rows" array of {name, expected, computed, pass} records,
// so a failing diff names the offending value directly.  Identical inputs
// produce byte-identical output.

/// Group orders from breadth-first closure against the family table
/// (parametric families swept over m, n, l ∈ [1, 6]).
[[nodiscard]] std::string group_order_report();

/// Orders of the full isometry groups generated by the lifted group plus the
/// quadrilateral's own symmetries, against the classified table.
[[nodiscard]] std::string isometry_order_report();

/// Edge lengths and corner angles of the eleven fundamental quadrilaterals
/// against their closed forms.
[[nodiscard]] std::string quad_table_report(double tolerance = 1e-9);

/// Formula genus against the combinatorial genus of the deduplicated cell
/// complex, plus the published values for the fixed families.
[[nodiscard]] std::string genus_table_report();

/// Random hemisphere triangles: lift displacement magnitude versus enclosed
/// area, and the measured fibre circumference versus 4π.
[[nodiscard]] std::string holonomy_report(std::uint64_t seed = 1, int samples = 100);

/// The order-120 free subgroup and the quotient genera of the icosahedral
/// family surfaces.
[[nodiscard]] std::string quotient_report();

/// Conjugating the lifted group by the fibre-count witness: equal order,
/// index-2 intersection.
[[nodiscard]] std::string conjugation_report();

/// One Plateau pipeline outcome: spec, budget decisions, solver diagnostics,
/// topology of the closed surface with the expected genus embedded.
[[nodiscard]] std::string solve_report(const group_spec& spec, const spec_solution& sol,
                                       const solver_options& requested,
                                       std::size_t triangle_budget);

/// Every verification section above in one document.
[[nodiscard]] std::string full_verification_report(const verify_options& opts = {});

/// The top-level "pass" flag of any report produced by this header.
[[nodiscard]] bool report_passed(const std::string& json_text);

/// Human-readable rendering: one aligned line per check row.
[[nodiscard]] std::string report_as_text(const std::string& json_text);

} // namespace hopfmin
