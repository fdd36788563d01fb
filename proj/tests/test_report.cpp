#include <doctest.h>

#include <string>

#include <json.hpp>

#include "hopfmin/plateau.hpp"
#include "hopfmin/report.hpp"

using namespace hopfmin;
using nlohmann::json;

TEST_CASE("table reports pass and honor their tolerance") {
  const std::string quads = quad_table_report(1e-9);
  CHECK(report_passed(quads));
  // an impossible tolerance flips the rows to failing — the comparison is real
  CHECK_FALSE(report_passed(quad_table_report(1e-30)));

  CHECK(report_passed(genus_table_report()));
  CHECK(report_passed(quotient_report()));
  CHECK(report_passed(conjugation_report()));
}

TEST_CASE("group order report sweeps the parametric families") {
  const std::string text = group_order_report();
  CHECK(report_passed(text));
  const json doc = json::parse(text);
  // 36 cyclic + 6 + 6 dihedral + 8 fixed
  CHECK(doc.at("rows").size() == 56);
  for (const json& r : doc.at("rows")) {
    CHECK(r.at("pass").get<bool>());
    CHECK(r.at("expected") == r.at("computed"));
  }
}

TEST_CASE("holonomy report: seeded, deterministic, passing") {
  const std::string a = holonomy_report(7, 25);
  CHECK(report_passed(a));
  CHECK(a == holonomy_report(7, 25));     // byte-identical rerun
  CHECK(a != holonomy_report(8, 25));     // the seed matters
  CHECK(report_passed(holonomy_report(8, 25)));
}

TEST_CASE("solve report embeds budget decisions and the expected genus") {
  solver_options opts;
  opts.refinement = 16;
  const spec_solution degraded = solve_spec(group_spec::cyclic(2, 2), opts, 64);
  const json doc = json::parse(solve_report(group_spec::cyclic(2, 2), degraded, opts, 64));
  CHECK(doc.at("budget").at("degraded").get<bool>());
  CHECK(doc.at("budget").at("requested_refinement").get<int>() == 16);
  CHECK(doc.at("budget").at("effective_refinement").get<int>() == 2);
  CHECK(doc.at("budget").at("triangle_budget").get<std::size_t>() == 64);
  CHECK(doc.at("surface").at("expected_genus").get<long long>() == 1);
  CHECK(doc.at("surface").at("genus").get<long long>() == 1);
  CHECK(doc.at("pass").get<bool>());
  CHECK(doc.at("solver").contains("iterations"));
  CHECK(doc.at("solver").contains("symmetry_deviation"));

  // identical inputs, identical bytes
  CHECK(solve_report(group_spec::cyclic(2, 2), degraded, opts, 64) ==
        solve_report(group_spec::cyclic(2, 2), degraded, opts, 64));
}

TEST_CASE("text rendering lists one line per row") {
  const std::string text = report_as_text(quotient_report());
  CHECK(text.find("[ ok ] free subgroup order") != std::string::npos);
  CHECK(text.find("quotient genus I(pi/5)") != std::string::npos);
  CHECK(text.find("overall: PASS") != std::string::npos);
  CHECK(text.find("[FAIL]") == std::string::npos);

  const std::string failing = report_as_text(quad_table_report(1e-30));
  CHECK(failing.find("[FAIL]") != std::string::npos);
  CHECK(failing.find("overall: FAIL") != std::string::npos);
}
