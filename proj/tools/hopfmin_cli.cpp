// Command-line front end: verification tables, holonomy demos, the Plateau
// pipeline with mesh export, and quotient genera.  Verification mismatches
// exit non-zero after printing the failing rows.
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hopfmin/errors.hpp"
#include "hopfmin/plateau.hpp"
#include "hopfmin/projection.hpp"
#include "hopfmin/report.hpp"
#include "hopfmin/skeleton.hpp"
#include "hopfmin/symmetry_group.hpp"

namespace {

using namespace hopfmin;

struct cli_settings {
  double tol = 1e-9;
  int refinement = 16;
  std::size_t budget = 2000000;
  std::uint64_t seed = 1;
  std::string out_dir;
  std::string format = "json";
};

/// Report text in the chosen format, to stdout; exit status from the flag.
int emit(const std::string& json_report, const cli_settings& s) {
  std::cout << (s.format == "text" ? report_as_text(json_report) : json_report + "\n");
  return report_passed(json_report) ? 0 : 1;
}

/// Spec string made path-safe: the '/' of the angle labels becomes '_'.
std::string file_stem(const group_spec& spec) {
  std::string stem = spec.str();
  for (char& c : stem)
    if (c == '/') c = '_';
  return stem;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << content) || !out.flush())
    throw error(errc::io_error, "cannot write " + path);
}

int run_solve(const std::string& spec_text, const cli_settings& s) {
  const group_spec spec = group_spec::parse(spec_text);
  solver_options opts;
  opts.refinement = s.refinement;
  const spec_solution sol = solve_spec(spec, opts, s.budget);
  const std::string report = solve_report(spec, sol, opts, s.budget);

  if (!s.out_dir.empty()) {
    const std::string stem = s.out_dir + "/" + file_stem(spec);
    projection_frame frame;
    try {
      stereographic(sol.closed.vertices.empty() ? quat{2, 0, 0, 0} : sol.closed.vertices[0],
                    frame);
      for (const quat& v : sol.closed.vertices) stereographic(v, frame);
    } catch (const error&) {
      frame = frame_avoiding_mesh(sol.closed); // surface passes the default pole
    }
    export_mesh(sol.closed, frame, stem + ".obj");
    export_mesh_json(sol.closed, frame, stem + ".mesh.json");
    write_file(stem + ".report.json", report + "\n");
  }
  return emit(report, s);
}

int run_quotient(const std::string& spec_text, const std::string& subgroup_name,
                 const cli_settings& s) {
  if (subgroup_name != "poincare")
    throw CLI::ValidationError("quotient", "only the 'poincare' subgroup is available");
  const group_spec spec = group_spec::parse(spec_text);
  const long long genus = quotient_genus(spec, poincare_subgroup());
  if (s.format == "text")
    std::cout << genus << "\n";
  else
    std::cout << "{\"spec\":\"" << spec.str() << "\",\"subgroup\":\"poincare\",\"quotient_genus\":"
              << genus << "}\n";
  return 0;
}

int run_genus(const std::string& spec_text, const cli_settings& s) {
  if (!spec_text.empty()) {
    const group_spec spec = group_spec::parse(spec_text);
    if (s.format == "text")
      std::cout << spec.genus() << "\n";
    else
      std::cout << "{\"spec\":\"" << spec.str() << "\",\"genus\":" << spec.genus() << "}\n";
    return 0;
  }
  return emit(genus_table_report(), s);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"symmetric minimal surfaces in the radius-2 three-sphere"};
  app.require_subcommand(1);

  cli_settings s;
  app.add_option("--tol", s.tol, "absolute tolerance of the table comparisons");
  app.add_option("--refinement", s.refinement, "grid density per quadrilateral");
  app.add_option("--budget", s.budget, "triangle budget of the closed surface");
  app.add_option("--seed", s.seed, "seed of the randomized property checks");
  app.add_option("--out-dir", s.out_dir, "directory for mesh and report files");
  app.add_option("--format", s.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));

  app.add_subcommand("verify-groups", "group orders and isometry-group orders vs the tables")
      ->fallthrough();
  app.add_subcommand("verify-quads", "quadrilateral edge lengths and angles vs the closed forms")
      ->fallthrough();
  auto* genus_cmd = app.add_subcommand("genus", "genus table, or one spec's genus");
  genus_cmd->fallthrough();
  std::string genus_spec;
  genus_cmd->add_option("--spec", genus_spec, "single spec, e.g. I(pi/2)");
  auto* lift_cmd = app.add_subcommand("lift", "holonomy demos: lift displacement vs area");
  lift_cmd->fallthrough();
  int lift_samples = 100;
  lift_cmd->add_option("--samples", lift_samples, "number of random triangles");
  auto* solve_cmd = app.add_subcommand("solve", "Plateau pipeline: solve, extend, report");
  solve_cmd->fallthrough();
  std::string solve_spec_text;
  solve_cmd->add_option("spec", solve_spec_text, "spec, e.g. C(2,2)")->required();
  auto* quot_cmd = app.add_subcommand("quotient", "genus of the surface quotient by a subgroup");
  quot_cmd->fallthrough();
  std::string quot_spec_text, quot_subgroup;
  quot_cmd->add_option("spec", quot_spec_text, "spec, e.g. I(pi/5)")->required();
  quot_cmd->add_option("subgroup", quot_subgroup, "subgroup name: poincare")->required();
  app.add_subcommand("report-all", "full verification suite as one JSON document")
      ->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("verify-groups")) {
      const int a = emit(group_order_report(), s);
      const int b = emit(isometry_order_report(), s);
      return a != 0 || b != 0 ? 1 : 0;
    }
    if (app.got_subcommand("verify-quads")) return emit(quad_table_report(s.tol), s);
    if (app.got_subcommand("genus")) return run_genus(genus_spec, s);
    if (app.got_subcommand("lift")) return emit(holonomy_report(s.seed, lift_samples), s);
    if (app.got_subcommand("solve")) return run_solve(solve_spec_text, s);
    if (app.got_subcommand("quotient")) return run_quotient(quot_spec_text, quot_subgroup, s);
    if (app.got_subcommand("report-all")) {
      verify_options opts;
      opts.tolerance = s.tol;
      opts.seed = s.seed;
      const std::string report = full_verification_report(opts);
      if (!s.out_dir.empty()) write_file(s.out_dir + "/verification.report.json", report + "\n");
      return emit(report, s);
    }
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
