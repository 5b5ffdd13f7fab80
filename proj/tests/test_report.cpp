#include "fixnum/errors.hpp"
#include "fixnum/families.hpp"
#include "fixnum/rational.hpp"
#include "fixnum/report.hpp"

#include <json.hpp>

#include <doctest.h>

#include <string>

using namespace fixnum;

TEST_CASE("analysis of an even cycle") {
  AnalysisOptions opt;
  opt.with_upper_fixing = true;
  opt.with_fixed_number = true;
  opt.with_dimf = true;
  AnalysisReport r = analyze_graph(cycle(6), opt);
  CHECK(r.graph_name == "C6");
  CHECK(r.n == 6);
  CHECK(r.m == 6);
  CHECK(r.connected);
  CHECK_FALSE(r.rigid);
  CHECK(r.group_order == "12");
  CHECK(r.orbits.size() == 1);
  CHECK(r.active.size() == 6);
  CHECK(r.core.empty());
  CHECK(r.active_pair_count == 15);
  REQUIRE(r.f_min.has_value());
  CHECK(*r.f_min == 4);
  CHECK(r.fix == 2);
  CHECK(r.fixing_witness.size() == 2);
  REQUIRE(r.upper_fixing.has_value());
  CHECK(*r.upper_fixing == 2);
  REQUIRE(r.fixed_number.has_value());
  CHECK(*r.fixed_number == 3);
  CHECK(r.fix_f == Rational(3) / 2);
  REQUIRE(r.dim_f.has_value());
  CHECK(*r.dim_f == Rational(3) / 2);
  for (const auto& [v, w] : r.fix_f_weights) CHECK(w > 0);
}

TEST_CASE("analysis of a rigid tree") {
  AnalysisReport r = analyze_graph(spider(1, 3));
  CHECK(r.rigid);
  CHECK(r.group_order == "1");
  CHECK(r.fix == 0);
  CHECK(r.fixing_witness.empty());
  CHECK_FALSE(r.f_min.has_value());
  CHECK(r.fix_f == 0);
  CHECK(r.fix_f_weights.empty());
  CHECK(r.active.empty());
  CHECK(r.core.size() == 7);
  CHECK_FALSE(r.upper_fixing.has_value());  // not requested
  CHECK_FALSE(r.dim_f.has_value());
}

TEST_CASE("wheel analysis carries the closed-form discrepancy note") {
  AnalysisReport r = analyze_graph(wheel(6));
  CHECK(r.fix_f == Rational(5) / 4);  // rim C5 optimum
  bool found = false;
  for (const auto& note : r.notes)
    if (note.find("paper-mismatch") != std::string::npos) found = true;
  CHECK(found);
  // Plain cycles carry no such note.
  for (const auto& note : analyze_graph(cycle(6)).notes)
    CHECK(note.find("paper-mismatch") == std::string::npos);
}

TEST_CASE("json report exposes requested fields and omits the rest") {
  AnalysisOptions opt;
  opt.with_dimf = true;
  auto j = nlohmann::json::parse(report_to_json(analyze_graph(cycle(6), opt)));
  CHECK(j["graph"] == "C6");
  CHECK(j["n"] == 6);
  CHECK(j["m"] == 6);
  CHECK(j["connected"] == true);
  CHECK(j["rigid"] == false);
  CHECK(j["group_order"] == "12");
  CHECK(j["fix"] == 2);
  CHECK(j["fix_f"] == "3/2");
  CHECK(j["dim_f"] == "3/2");
  CHECK(j["f"] == 4);
  CHECK(j["active_pair_count"] == 15);
  CHECK_FALSE(j.contains("upper_fixing"));
  CHECK_FALSE(j.contains("fixed_number"));
  CHECK(j.contains("cover_optimum"));
  CHECK(j.contains("notes"));

  auto plain = nlohmann::json::parse(report_to_json(analyze_graph(cycle(6))));
  CHECK_FALSE(plain.contains("dim_f"));

  auto rigid = nlohmann::json::parse(report_to_json(analyze_graph(spider(1, 3))));
  CHECK(rigid["fix_f"] == "0");
  CHECK(rigid["fix"] == 0);
  CHECK_FALSE(rigid.contains("f"));
}

TEST_CASE("reports are deterministic") {
  AnalysisOptions opt;
  opt.with_upper_fixing = true;
  opt.with_fixed_number = true;
  opt.with_dimf = true;
  CHECK(report_to_json(analyze_graph(wheel(7), opt)) ==
        report_to_json(analyze_graph(wheel(7), opt)));
  CHECK(report_to_table(analyze_graph(wheel(7), opt)) ==
        report_to_table(analyze_graph(wheel(7), opt)));
}

TEST_CASE("table rendering mentions the headline quantities") {
  AnalysisReport r = analyze_graph(complete(4));
  std::string t = report_to_table(r);
  CHECK(t.find("K4") != std::string::npos);
  CHECK(t.find("fix_f") != std::string::npos);
  CHECK(t.find("2") != std::string::npos);
}

TEST_CASE("exponential fields respect the cap option") {
  AnalysisOptions opt;
  opt.with_upper_fixing = true;
  opt.cap = 14;
  CHECK_THROWS_AS(analyze_graph(cycle(16), opt), cap_exceeded);
  opt.cap = 16;
  AnalysisReport r = analyze_graph(cycle(16), opt);
  REQUIRE(r.upper_fixing.has_value());
  CHECK(*r.upper_fixing == 2);
}

TEST_CASE("invariant consistency holds on a random corpus") {
  for (int i = 0; i < 40; ++i) {
    Graph g = erdos_renyi(2 + i % 8, 11000 + static_cast<std::uint32_t>(i));
    AnalysisOptions opt;
    opt.with_upper_fixing = true;
    opt.with_fixed_number = true;
    opt.with_dimf = is_connected(g);
    AnalysisReport r = analyze_graph(g, opt);
    REQUIRE(r.fix_f <= Rational(r.fix));
    REQUIRE(2 * r.fix_f <= r.n);
    REQUIRE(r.fix <= *r.upper_fixing);
    REQUIRE(*r.upper_fixing <= *r.fixed_number);
    if (r.dim_f) REQUIRE(r.fix_f <= *r.dim_f);
    REQUIRE(r.active.size() + r.core.size() == static_cast<std::size_t>(r.n));
  }
}
