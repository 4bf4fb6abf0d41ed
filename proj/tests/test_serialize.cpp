#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "qpdeg/serialize.hpp"
#include "qpdeg/svg.hpp"
#include "test_support.hpp"

using namespace qpdeg;
using qpdeg::testing::Rng;

TEST_CASE("double formatting round-trips bit-exactly") {
  Rng rng(606);
  for (int i = 0; i < 1000; ++i) {
    const double v = rng.uniform(-1e6, 1e6) * std::pow(10.0, rng.uniform_int(-12, 12));
    REQUIRE(io::parse_double(io::format_double(v)) == v);
  }
  CHECK(io::format_double(0.5) == "0.5");
  CHECK(io::format_double(0.123456789, 4) == "0.1235");
  CHECK_THROWS_AS(io::parse_double("not-a-number"), argument_error);
}

TEST_CASE("pair labels parse and reject") {
  const auto pair = io::parse_pair("2:3");
  CHECK(pair.n == 2);
  CHECK(pair.k == 3);
  CHECK_THROWS_AS(io::parse_pair("0:1"), excluded_pair_error);
  CHECK_THROWS_AS(io::parse_pair("2-3"), argument_error);
  CHECK_THROWS_AS(io::parse_pair("a:b"), argument_error);
}

TEST_CASE("spectrum CSV round trip") {
  const auto plan = plan_reduction(LevelPair::make(1, 1), LevelPair::make(3, 1), 0.6);
  const auto table = reduced_spectrum(fit_parabola(plan.spec), plan.assignment, 0.6, 8);

  const std::string csv = io::spectrum_csv(table.entries);
  CHECK(csv.rfind("n,E,q_used,branch\n", 0) == 0);
  const auto parsed = io::parse_spectrum_csv(csv);
  REQUIRE(parsed.size() == table.entries.size());
  for (std::size_t i = 0; i < parsed.size(); ++i) REQUIRE(parsed[i] == table.entries[i]);

  CHECK_THROWS_AS(io::parse_spectrum_csv("x,y\n1,2\n"), argument_error);
  CHECK_THROWS_AS(io::parse_spectrum_csv(""), argument_error);
}

TEST_CASE("rounded CSV uses fixed decimals") {
  SpectrumRow row{3, 1.23456789, 0.5, Branch::plus};
  const std::string csv = io::spectrum_csv(std::vector<SpectrumRow>{row}, 3);
  CHECK(csv.find("1.235") != std::string::npos);
  CHECK(csv.find("0.500") != std::string::npos);
}

TEST_CASE("trace CSV round trip") {
  const auto grid = default_p_grid(16, 0.2, 0.9);
  std::vector<CurveTrace> traces = {trace(LevelPair::make(1, 1), grid, 1e-12),
                                    trace(LevelPair::make(0, 2), grid, 1e-12)};
  const std::string csv = io::trace_csv(traces);
  const auto rows = io::parse_trace_csv(csv);
  std::size_t expected = traces[0].samples.size() + traces[1].samples.size();
  REQUIRE(rows.size() == expected);
  CHECK(rows.front().pair == LevelPair::make(1, 1));
  CHECK(rows.front().q == traces[0].samples.front().q);
}

TEST_CASE("intersections CSV round trip") {
  const auto points = intersect_curves(LevelPair::make(0, 10), LevelPair::make(2, 1), 1e-10);
  const auto rows = io::parse_intersections_csv(io::intersections_csv(points));
  REQUIRE(rows.size() == points.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    REQUIRE(rows[i].q == points[i].q);
    REQUIRE(rows[i].p == points[i].p);
    REQUIRE(rows[i].residual1 == points[i].residual1);
  }
}

TEST_CASE("relation JSON round trip for every kind") {
  const auto plan = plan_reduction(LevelPair::make(1, 1), LevelPair::make(3, 1), 0.6);
  const std::vector<ConicRelation> relations = {
      fit_parabola(plan.spec),
      fit_hyperbola(plan.spec, 1.0),
      fit_ellipse(plan.spec, 0.1),
      fit_line(0.567239, 0.823554),
  };
  for (const auto& rel : relations) {
    const auto j = io::relation_json(rel);
    CHECK(j.at("kind").get<std::string>() == rel.kind());
    const auto back = io::relation_from_json(j);
    REQUIRE(back.kind() == rel.kind());
    REQUIRE(back.fit == rel.fit);
    REQUIRE(shape_residual(back, 0.7, 0.8) == shape_residual(rel, 0.7, 0.8));
  }
  CHECK_THROWS_AS(io::relation_from_json(nlohmann::json{{"kind", "circle"}, {"params", {}}}),
                  argument_error);
}

TEST_CASE("spectrum JSON round trip") {
  const auto [rel, assignment] = preset(Preset::linear_a);
  const auto table = reduced_spectrum(rel, assignment, 0.823554, 6);
  const auto back = io::spectrum_from_json(io::spectrum_json(table));
  REQUIRE(back.p_value == table.p_value);
  REQUIRE(back.assignment == table.assignment);
  REQUIRE(back.entries.size() == table.entries.size());
  for (std::size_t i = 0; i < back.entries.size(); ++i) {
    REQUIRE(back.entries[i] == table.entries[i]);
  }
}

TEST_CASE("atomic file write and read back") {
  const auto path = (std::filesystem::temp_directory_path() / "qpdeg_io_test.txt").string();
  io::atomic_write_file(path, "payload\n");
  CHECK(io::read_file(path) == "payload\n");
  io::atomic_write_file(path, "rewritten\n");
  CHECK(io::read_file(path) == "rewritten\n");
  std::filesystem::remove(path);
  CHECK_THROWS(io::read_file(path));
}

TEST_CASE("svg output is well-formed and deterministic") {
  const auto [rel, assignment] = preset(Preset::linear_a);
  const auto table = reduced_spectrum(rel, assignment, 0.823554, 12);
  const std::string doc = svg::spectrum_plot(table);
  CHECK(doc.rfind("<?xml", 0) == 0);
  CHECK(doc.find("<svg") != std::string::npos);
  CHECK(doc.find("</svg>") != std::string::npos);
  CHECK(doc == svg::spectrum_plot(table));

  const auto grid = default_p_grid(32, 0.05, 0.95);
  std::vector<CurveTrace> traces = {trace(LevelPair::make(1, 1), grid, 1e-10)};
  const auto parab = fit_parabola(plan_reduction(LevelPair::make(1, 1), LevelPair::make(3, 1), 0.6).spec);
  const std::vector<std::pair<double, double>> marks = {{1.0, 1.0}};
  const std::string plot = svg::trace_plot(traces, &parab, marks);
  CHECK(plot.find("polyline") != std::string::npos);
  CHECK(plot.find("circle") != std::string::npos);
}
