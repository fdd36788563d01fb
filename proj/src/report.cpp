#include "hopfmin/report.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "hopfmin/hopf.hpp"
#include "hopfmin/quadrilateral.hpp"
#include "hopfmin/skeleton.hpp"
#include "hopfmin/sphere2.hpp"
#include "hopfmin/symmetry_group.hpp"

namespace hopfmin {

namespace {

using nlohmann::json;

json row(const std::string& name, json expected, json computed, bool pass) {
  return json{{"name", name},
              {"expected", std::move(expected)},
              {"computed", std::move(computed)},
              {"pass", pass}};
}

json finish(const std::string& title, json rows) {
  bool all = true;
  for (const json& r : rows) all = all && r.at("pass").get<bool>();
  return json{{"title", title}, {"rows", std::move(rows)}, {"pass", all}};
}

quat random_s2(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  quat v{0.0, g(rng), g(rng), g(rng)};
  while (v.norm() < 1e-6) v = quat{0.0, g(rng), g(rng), g(rng)};
  return v / v.norm();
}

/// The eleven families with canonical parameters, fixed members last.
std::vector<group_spec> table_specs() { return canonical_specs(); }

} // namespace

std::string group_order_report() {
  json rows = json::array();
  const auto check = [&](const group_spec& s) {
    const std::size_t want = s.expected_order();
    const std::size_t got = group_order(s);
    rows.push_back(row(s.str(), want, got, want == got));
  };
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= 6; ++n) check(group_spec::cyclic(m, n));
  for (int l = 1; l <= 6; ++l) check(group_spec::dihedral(l));
  for (int l = 1; l <= 6; ++l) check(group_spec::dihedral_right(l));
  for (lifted_family f : {lifted_family::t_half, lifted_family::t_third, lifted_family::o_half,
                          lifted_family::o_third, lifted_family::o_quarter, lifted_family::i_half,
                          lifted_family::i_third, lifted_family::i_fifth})
    check(group_spec::fixed(f));
  return finish("group orders", std::move(rows)).dump(1);
}

std::string isometry_order_report() {
  json rows = json::array();
  const std::vector<group_spec> specs = {
      group_spec::cyclic(2, 3),
      group_spec::cyclic(2, 4),
      group_spec::cyclic(3, 4),
      group_spec::cyclic(3, 3),
      group_spec::cyclic(4, 4),
      group_spec::fixed(lifted_family::t_third),
      group_spec::fixed(lifted_family::o_half),
      group_spec::fixed(lifted_family::o_third),
      group_spec::fixed(lifted_family::o_quarter),
      group_spec::fixed(lifted_family::i_half),
      group_spec::fixed(lifted_family::i_third),
      group_spec::fixed(lifted_family::i_fifth),
  };
  for (const group_spec& s : specs) {
    const std::size_t want = isometry_group_order(s);
    std::vector<o4_element> generators;
    for (const rotation4& g : group_generators(s)) generators.push_back({g.p, g.q, false});
    const quadrilateral q = fundamental_quadrilateral(s);
    for (const o4_element& g : quad_symmetries(s, q)) generators.push_back(g);
    const std::size_t got = close_isometry_group(generators).size();
    rows.push_back(row(s.str(), want, got, want == got));
  }
  return finish("isometry-group orders", std::move(rows)).dump(1);
}

std::string quad_table_report(double tolerance) {
  json rows = json::array();
  for (const group_spec& s : table_specs()) {
    if (s.family == lifted_family::c_mn && s.m == 1 && s.n == 1) continue; // degenerate member
    const quad_metrics got = measure(fundamental_quadrilateral(s));
    const quad_metrics want = reference_metrics(s);
    double dev = 0.0;
    for (std::size_t t = 0; t < 4; ++t) {
      dev = std::max(dev, std::abs(got.edge_length[t] - want.edge_length[t]));
      dev = std::max(dev, std::abs(got.corner_angle[t] - want.corner_angle[t]));
    }
    json expected{{"edge_length", want.edge_length}, {"corner_angle", want.corner_angle}};
    json computed{{"edge_length", got.edge_length},
                  {"corner_angle", got.corner_angle},
                  {"max_abs_error", dev}};
    rows.push_back(row(s.str(), std::move(expected), std::move(computed), dev < tolerance));
  }
  return finish("fundamental quadrilaterals", std::move(rows)).dump(1);
}

std::string genus_table_report() {
  json rows = json::array();
  for (const group_spec& s : table_specs()) {
    const auto [m, n] = s.angle_labels();
    if (m < 2 || n < 2) continue; // the cell complex degenerates
    const long long want = static_cast<long long>(s.genus());
    const long long got = combinatorial_genus(complex_counts(s));
    rows.push_back(row(s.str(), want, got, want == got));
  }
  return finish("genus table", std::move(rows)).dump(1);
}

std::string holonomy_report(std::uint64_t seed, int samples) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> radius(0.15, 1.2);
  std::uniform_real_distribution<double> angle(0.0, 2 * M_PI);
  double worst_area_dev = 0.0;
  int done = 0;
  while (done < samples) {
    // random geodesic triangle inside an open hemisphere
    const quat c = random_s2(rng);
    quat e1 = random_s2(rng);
    e1 = (e1 - c * dot(e1, c)).normalized();
    const quat e2 = cross(c, e1);
    quat v[3];
    bool ok = true;
    for (auto& corner : v) {
      const double rho = radius(rng), alpha = angle(rng);
      corner = c * std::cos(rho) + (e1 * std::cos(alpha) + e2 * std::sin(alpha)) * std::sin(rho);
    }
    for (int t = 0; t < 3; ++t)
      if (std::abs(dot(v[t], v[(t + 1) % 3])) > 0.995) ok = false;
    if (!ok) continue;
    const polygon2 tri{
        {arc2::between(v[0], v[1]), arc2::between(v[1], v[2]), arc2::between(v[2], v[0])}};
    double area = polygon_area(tri);
    if (area > 2 * M_PI) area = 4 * M_PI - area; // interior was on the right
    const double theta = lift_displacement(tri, fiber_through(v[0]));
    worst_area_dev = std::max(worst_area_dev, std::abs(std::abs(theta) - area));
    ++done;
  }

  // fibre circumference, measured as a sum of geodesic distances along the
  // circle (exact for great-circle segments)
  double worst_circ_dev = 0.0;
  for (int k = 0; k < 8; ++k) {
    const arc3 fibre = fiber_circle(random_s2(rng));
    double length = 0.0;
    const int steps = 64;
    for (int t = 0; t < steps; ++t)
      length += geodesic_distance3(fibre.point_at(4 * M_PI * t / steps),
                                   fibre.point_at(4 * M_PI * (t + 1) / steps));
    worst_circ_dev = std::max(worst_circ_dev, std::abs(length - 4 * M_PI));
  }

  json rows = json::array();
  rows.push_back(row("max | |lift displacement| - triangle area |, " + std::to_string(samples) +
                         " samples",
                     "<= 1e-8", worst_area_dev, worst_area_dev <= 1e-8));
  rows.push_back(row("max |fibre circumference - 4pi|, 8 fibres", "<= 1e-10", worst_circ_dev,
                     worst_circ_dev <= 1e-10));
  return finish("holonomy suite", std::move(rows)).dump(1);
}

std::string quotient_report() {
  json rows = json::array();
  const std::vector<rotation4> gp = poincare_subgroup();
  rows.push_back(row("free subgroup order", 120, gp.size(), gp.size() == 120));
  const bool free_action = acts_freely(gp);
  rows.push_back(row("free subgroup acts freely", true, free_action, free_action));
  const std::pair<lifted_family, long long> table[] = {
      {lifted_family::i_fifth, 2}, {lifted_family::i_third, 4}, {lifted_family::i_half, 8}};
  for (const auto& [family, want] : table) {
    const group_spec s = group_spec::fixed(family);
    const long long got = quotient_genus(s, gp);
    rows.push_back(row("quotient genus " + s.str(), want, got, want == got));
  }
  return finish("quotients by the free subgroup", std::move(rows)).dump(1);
}

std::string conjugation_report() {
  json rows = json::array();
  for (const char* name : {"T(pi/3)", "O(pi/3)"}) {
    const group_spec s = group_spec::parse(name);
    const std::vector<rotation4> g = group_elements(s);
    const std::size_t t = fibre_intersection_count(build_skeleton(s));
    const std::vector<rotation4> conj = conjugate_group(g, conjugation_witness(static_cast<int>(t)));
    const std::size_t meet = intersect_groups(g, conj).size();
    json computed{{"order", g.size()},
                  {"conjugate_order", conj.size()},
                  {"intersection_order", meet},
                  {"fibre_count", t}};
    const bool pass = conj.size() == g.size() && meet * 2 == g.size();
    rows.push_back(row(s.str() + " index of the witness intersection", 2,
                       meet == 0 ? json(nullptr) : json(g.size() / meet), pass));
    rows.back()["computed_detail"] = std::move(computed);
  }
  return finish("conjugation by the fibre witness", std::move(rows)).dump(1);
}

std::string solve_report(const group_spec& spec, const spec_solution& sol,
                         const solver_options& requested, std::size_t triangle_budget) {
  const long long want_genus = static_cast<long long>(spec.genus());
  json doc{
      {"title", "plateau pipeline " + spec.str()},
      {"spec", spec.str()},
      {"budget",
       {{"triangle_budget", triangle_budget},
        {"requested_refinement", requested.refinement},
        {"effective_refinement", sol.refinement},
        {"degraded", sol.degraded}}},
      {"solver",
       {{"iterations", sol.disk.iterations},
        {"converged", sol.disk.converged},
        {"max_gradient", sol.disk.max_gradient},
        {"disk_area", sol.disk.area},
        {"symmetry_deviation", sol.disk.symmetry_deviation},
        {"hull_violation", sol.disk.hull_violation}}},
      {"surface",
       {{"euler_characteristic", sol.euler},
        {"genus", sol.genus},
        {"expected_genus", want_genus},
        {"area", sol.area},
        {"residual", sol.residual}}},
      {"pass", sol.genus == want_genus},
  };
  return doc.dump(1);
}

std::string full_verification_report(const verify_options& opts) {
  json sections;
  bool all = true;
  const auto add = [&](const std::string& key, const std::string& text) {
    json section = json::parse(text);
    all = all && section.at("pass").get<bool>();
    sections[key] = std::move(section);
  };
  add("group_orders", group_order_report());
  add("isometry_orders", isometry_order_report());
  add("quadrilaterals", quad_table_report(opts.tolerance));
  add("genus", genus_table_report());
  add("holonomy", holonomy_report(opts.seed, opts.holonomy_samples));
  add("quotients", quotient_report());
  add("conjugation", conjugation_report());
  json doc{{"title", "verification suite"}, {"sections", std::move(sections)}, {"pass", all}};
  return doc.dump(1);
}

bool report_passed(const std::string& json_text) {
  return json::parse(json_text).value("pass", false);
}

namespace {

void render_rows(const json& report, std::ostringstream& out) {
  if (!report.contains("rows")) return;
  for (const json& r : report.at("rows")) {
    out << (r.at("pass").get<bool>() ? "  [ ok ] " : "  [FAIL] ") << r.at("name").get<std::string>()
        << "  expected=" << r.at("expected").dump() << "  computed=" << r.at("computed").dump()
        << '\n';
  }
}

} // namespace

std::string report_as_text(const std::string& json_text) {
  const json doc = json::parse(json_text);
  std::ostringstream out;
  const auto title = [](const json& d) { return d.value("title", std::string("report")); };
  if (doc.contains("sections")) {
    for (const auto& [key, section] : doc.at("sections").items()) {
      out << "== " << title(section) << " ==\n";
      render_rows(section, out);
      out << (section.at("pass").get<bool>() ? "PASS" : "FAIL") << '\n';
    }
  } else if (doc.contains("rows")) {
    out << "== " << title(doc) << " ==\n";
    render_rows(doc, out);
  } else {
    out << doc.dump(1) << '\n';
  }
  out << "overall: " << (doc.value("pass", false) ? "PASS" : "FAIL") << '\n';
  return out.str();
}

} // namespace hopfmin
