#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qpdeg/reduction.hpp"
#include "test_support.hpp"

using namespace qpdeg;
using qpdeg::testing::Rng;

namespace {

double level_gap(const SpectrumTable& t, int i, int j) {
  return std::abs(t.entries[static_cast<std::size_t>(i)].energy -
                  t.entries[static_cast<std::size_t>(j)].energy);
}

}  // namespace

TEST_CASE("branch rule") {
  const BranchAssignment a{3, Branch::minus, Branch::plus};
  CHECK(a.at(0) == Branch::minus);
  CHECK(a.at(2) == Branch::minus);
  CHECK(a.at(3) == Branch::plus);
  CHECK(a.at(9) == Branch::plus);
}

TEST_CASE("default assignments for the three engineered reductions") {
  const auto plan1 = plan_reduction(LevelPair::make(1, 1), LevelPair::make(3, 1), 0.6);
  CHECK(plan1.assignment.threshold == 3);
  CHECK(plan1.assignment.low == Branch::minus);
  CHECK(plan1.assignment.high == Branch::plus);
  CHECK(plan1.low.pair == LevelPair::make(1, 1));

  const auto plan2 = plan_reduction(LevelPair::make(0, 2), LevelPair::make(0, 5), 0.4);
  CHECK(plan2.assignment.threshold == 3);
  CHECK(plan2.assignment.low == Branch::minus);

  // the E_3=E_2 root (0.916515) exceeds the E_4=E_0 root (0.640778), so the
  // low levels ride the plus branch here
  const auto plan3 = plan_reduction(LevelPair::make(2, 1), LevelPair::make(0, 4), 0.4);
  CHECK(plan3.assignment.threshold == 4);
  CHECK(plan3.assignment.low == Branch::plus);
  CHECK(plan3.assignment.high == Branch::minus);
  CHECK(plan3.low.pair == LevelPair::make(2, 1));
  CHECK(plan3.low.q_root == doctest::Approx(0.916515).epsilon(1e-6));
}

TEST_CASE("plan_reduction error paths") {
  CHECK_THROWS_AS(plan_reduction(LevelPair::make(1, 1), LevelPair::make(1, 1), 0.6),
                  argument_error);
  // (0,2) does not reach p0 = 0.7 (its axis endpoint is 0.618...)
  CHECK_THROWS_AS(plan_reduction(LevelPair::make(0, 2), LevelPair::make(0, 5), 0.7),
                  domain_error);
  // pairs (1,2) and (3,1): levels 1,3 straddle any threshold above 3
  CHECK_THROWS_AS(plan_reduction(LevelPair::make(3, 1), LevelPair::make(1, 2), 0.6), fit_error);
}

TEST_CASE("two double degeneracies of the first engineered spectrum") {
  const auto plan = plan_reduction(LevelPair::make(1, 1), LevelPair::make(3, 1), 0.6);
  const auto table = reduced_spectrum(fit_parabola(plan.spec), plan.assignment, 0.6, 12);

  REQUIRE(table.entries.size() == 13);
  CHECK(table.entries[0].energy == 0.5);
  CHECK(table.entries[0].n == 0);
  CHECK(level_gap(table, 1, 2) < 1e-8);
  CHECK(level_gap(table, 3, 4) < 1e-8);
  CHECK(table.entries[2].branch == Branch::minus);
  CHECK(table.entries[3].branch == Branch::plus);
  for (const auto& row : table.entries) {
    REQUIRE(std::abs(shape_residual(table.relation, row.q_used, table.p_value)) < 1e-10);
  }

  const auto report = degeneracy_report(table, 1e-6);
  CHECK(report == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});
}

TEST_CASE("published-parameter spectrum hits the same degeneracies at table precision") {
  ConicRelation rel{Parabola{9.005207, 0.727359, 0.330613}, std::nullopt};
  const auto table = reduced_spectrum(rel, BranchAssignment{3, Branch::minus, Branch::plus},
                                      0.6, 6);
  CHECK(level_gap(table, 1, 2) < 1e-6);
  CHECK(level_gap(table, 3, 4) < 1e-6);
}

TEST_CASE("second-family spectrum carries a three-fold degeneracy") {
  const auto plan = plan_reduction(LevelPair::make(0, 2), LevelPair::make(0, 5), 0.4);
  const auto table = reduced_spectrum(fit_parabola(plan.spec), plan.assignment, 0.4, 12);

  CHECK(level_gap(table, 0, 2) < 1e-8);
  CHECK(level_gap(table, 0, 5) < 1e-8);
  CHECK(level_gap(table, 2, 5) < 1e-8);
  CHECK(table.entries[2].energy == doctest::Approx(0.5).epsilon(1e-8));

  const auto report = degeneracy_report(table, 1e-6);
  CHECK(report == std::vector<std::pair<int, int>>{{0, 2}, {0, 5}, {2, 5}});
}

TEST_CASE("mixed-family spectrum") {
  const auto plan = plan_reduction(LevelPair::make(2, 1), LevelPair::make(0, 4), 0.4);
  const auto table = reduced_spectrum(fit_parabola(plan.spec), plan.assignment, 0.4, 12);

  CHECK(level_gap(table, 2, 3) < 1e-8);
  CHECK(level_gap(table, 0, 4) < 1e-8);
  CHECK(degeneracy_report(table, 1e-6) == std::vector<std::pair<int, int>>{{0, 4}, {2, 3}});
}

TEST_CASE("any relation becomes the classical ladder at p = 1 on the unity arc") {
  const auto plan = plan_reduction(LevelPair::make(1, 1), LevelPair::make(3, 1), 0.6);
  const BranchAssignment unity_arc{0, Branch::plus, Branch::plus};
  for (const auto& rel : {fit_parabola(plan.spec), fit_hyperbola(plan.spec, 1.0),
                          fit_ellipse(plan.spec, 0.1), preset(Preset::linear_a).first}) {
    const auto table = reduced_spectrum(rel, unity_arc, 1.0, 12);
    for (const auto& row : table.entries) {
      REQUIRE(row.q_used == 1.0);
      REQUIRE(row.energy == row.n + 0.5);
    }
  }
  // the line has no branch ambiguity at all
  const auto table = reduced_spectrum(preset(Preset::linear_a).first,
                                      BranchAssignment{5, Branch::minus, Branch::plus}, 1.0, 8);
  for (const auto& row : table.entries) REQUIRE(row.energy == row.n + 0.5);
}

TEST_CASE("td preset walks the diagonal") {
  const auto [rel, assignment] = preset(Preset::td);
  const auto table = reduced_spectrum(rel, assignment, 0.7, 6);
  CHECK(table.p_value == 0.7);
  for (const auto& row : table.entries) {
    CHECK(row.q_used == 0.7);
    // TD bracket: [[n]] at q=p is n q^(n-1)
    const double expect = 0.5 * ((row.n + 1) * std::pow(0.7, row.n) +
                                 row.n * std::pow(0.7, row.n - 1));
    CHECK(row.energy == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("ak preset pins p to 1 and reads the parameter as q") {
  const auto [rel, assignment] = preset(Preset::ak);
  const auto table = reduced_spectrum(rel, assignment, 0.5, 5);
  CHECK(table.p_value == 1.0);
  const double q = 0.5;
  for (const auto& row : table.entries) {
    CHECK(row.q_used == q);
    const auto geo = [&](int m) { return (std::pow(q, m) - 1.0) / (q - 1.0); };
    CHECK(row.energy == doctest::Approx(0.5 * (geo(row.n + 1) + geo(row.n))).epsilon(1e-12));
  }
}

TEST_CASE("linear presets carry the published coefficients") {
  const auto a = std::get<Line>(preset(Preset::linear_a).first.shape);
  CHECK(std::abs(a.alpha - 0.407722) < 1e-6);
  CHECK(std::abs(a.beta - 0.592278) < 1e-6);
  const auto b = std::get<Line>(preset(Preset::linear_b).first.shape);
  CHECK(std::abs(b.alpha - 2.452649) < 1e-6);
  CHECK(std::abs(b.beta - (-1.452649)) < 1e-6);
  CHECK_THROWS_AS(preset_from_name("nope"), argument_error);
  CHECK(preset_from_name("linear-a") == Preset::linear_a);
}

TEST_CASE("linear-a spectrum at the printed crossing parameter") {
  const auto [rel, assignment] = preset(Preset::linear_a);
  const auto table = reduced_spectrum(rel, assignment, 0.823554, 12);
  // the six-decimal p is 5e-7 off the true crossing, which costs ~4e-6 here
  CHECK(level_gap(table, 0, 10) < 1e-5);
  CHECK(level_gap(table, 2, 3) < 1e-5);
  CHECK(table.entries[0].energy == 0.5);
}

TEST_CASE("degeneracy report on a classical ladder is empty") {
  const auto [rel, assignment] = preset(Preset::td);
  const auto table = reduced_spectrum(rel, assignment, 1.0, 12);
  CHECK(degeneracy_report(table, 1e-6).empty());
  CHECK_THROWS_AS(degeneracy_report(table, 0.0), argument_error);
}

TEST_CASE("spectrum domain and argument errors") {
  ConicRelation rel{Parabola{9.005207, 0.727359, 0.330613}, std::nullopt};
  CHECK_THROWS_AS(reduced_spectrum(rel, BranchAssignment{}, 0.1, 5), domain_error);
  CHECK_THROWS_AS(reduced_spectrum(rel, BranchAssignment{}, 0.6, -1), argument_error);
}

TEST_CASE("engineered degeneracies hold across random p0 (pipeline property)") {
  Rng rng(90210);
  const std::vector<std::pair<LevelPair, LevelPair>> combos = {
      {LevelPair::make(1, 1), LevelPair::make(3, 1)},
      {LevelPair::make(0, 2), LevelPair::make(0, 5)},
      {LevelPair::make(2, 1), LevelPair::make(0, 4)},
  };
  int valid = 0;
  for (int i = 0; i < 240; ++i) {
    const auto& [a, b] = combos[static_cast<std::size_t>(i) % combos.size()];
    const double p0 = rng.uniform(0.3, 0.9);
    ReductionPlan plan;
    try {
      plan = plan_reduction(a, b, p0);
    } catch (const domain_error&) {
      continue;  // one of the curves does not reach this p0
    } catch (const fit_error&) {
      continue;  // coincident fit points near a curve crossing
    }
    const auto table = reduced_spectrum(fit_parabola(plan.spec), plan.assignment, p0,
                                        std::max(a.upper(), b.upper()) + 2);
    REQUIRE(level_gap(table, a.n, a.upper()) < 1e-8);
    REQUIRE(level_gap(table, b.n, b.upper()) < 1e-8);
    ++valid;
  }
  CHECK(valid >= 120);
}

TEST_CASE("ground level anchors every table") {
  Rng rng(11);
  const auto plan = plan_reduction(LevelPair::make(1, 1), LevelPair::make(3, 1), 0.6);
  const auto rel = fit_parabola(plan.spec);
  for (int i = 0; i < 50; ++i) {
    const double p = rng.uniform(p_min(rel) + 1e-3, 1.0);
    REQUIRE(reduced_spectrum(rel, plan.assignment, p, 3).entries[0].energy == 0.5);
  }
}

TEST_CASE("linear reduction is strictly increasing near the classical corner") {
  // not true over the whole admissible range: at the crossing parameter the
  // line trades E_10 = E_0 = 1/2 against higher intermediate levels
  for (Preset which : {Preset::linear_a, Preset::linear_b}) {
    for (double p : {0.99, 1.0}) {
      const auto [rel, assignment] = preset(which);
      const auto table = reduced_spectrum(rel, assignment, p, 12);
      for (std::size_t i = 1; i < table.entries.size(); ++i) {
        REQUIRE(table.entries[i].energy > table.entries[i - 1].energy);
      }
    }
  }
}
