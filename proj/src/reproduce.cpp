#include "qpdeg/reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "qpdeg/intersect.hpp"
#include "qpdeg/reduction.hpp"
#include "qpdeg/reference_data.hpp"

namespace qpdeg {

namespace {

struct ValueCheck {
  std::string name;
  double got = 0.0;
  double want = 0.0;
};

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.8f", v);
  return buf;
}

ReproCheck make_check(std::string id, const std::vector<ValueCheck>& values, double tol) {
  ReproCheck check;
  check.id = std::move(id);
  check.tolerance = tol;
  for (const auto& v : values) {
    check.max_abs_diff = std::max(check.max_abs_diff, std::abs(v.got - v.want));
    if (!check.detail.empty()) check.detail += ", ";
    check.detail += v.name + "=" + num(v.got);
  }
  check.pass = check.max_abs_diff <= tol;
  return check;
}

std::string pairs_to_string(const std::vector<std::pair<int, int>>& pairs) {
  std::string s = "{";
  for (const auto& [i, j] : pairs) {
    if (s.size() > 1) s += ", ";
    s += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
  return s + "}";
}

ReproCheck set_check(std::string id, const std::vector<std::pair<int, int>>& got,
                     const std::vector<std::pair<int, int>>& want, double max_pair_gap,
                     double tol) {
  ReproCheck check;
  check.id = std::move(id);
  check.tolerance = tol;
  check.max_abs_diff = max_pair_gap;
  check.detail = "degenerate pairs " + pairs_to_string(got);
  check.pass = got == want && max_pair_gap <= tol;
  return check;
}

struct ParabolaArtifacts {
  ReductionPlan plan;
  ConicRelation relation;
};

ParabolaArtifacts build_parabola(const ref::ParabolaRow& row) {
  ParabolaArtifacts art;
  art.plan = plan_reduction(LevelPair::make(row.n1, row.k1), LevelPair::make(row.n2, row.k2),
                            row.p0);
  art.relation = fit_parabola(art.plan.spec);
  return art;
}

ReproCheck table_check(int index, const ref::ParabolaRow& row) {
  const auto art = build_parabola(row);
  const auto& par = std::get<Parabola>(art.relation.shape);
  return make_check("table" + std::to_string(index),
                    {{"q1", art.plan.spec.q1, row.q1},
                     {"q2", art.plan.spec.q2, row.q2},
                     {"alpha", par.alpha, row.alpha},
                     {"beta", par.beta, row.beta},
                     {"gamma", par.gamma, row.gamma}},
                    ref::table_tol);
}

double max_report_gap(const SpectrumTable& table,
                      const std::vector<std::pair<int, int>>& expected) {
  double gap = 0.0;
  for (const auto& [i, j] : expected) {
    gap = std::max(gap, std::abs(table.entries[static_cast<std::size_t>(i)].energy -
                                 table.entries[static_cast<std::size_t>(j)].energy));
  }
  return gap;
}

ReproCheck figure_check(std::string id, const ref::ParabolaRow& row,
                        const std::vector<std::pair<int, int>>& expected) {
  const auto art = build_parabola(row);
  const auto table = reduced_spectrum(art.relation, art.plan.assignment, row.p0, 12);
  return set_check(std::move(id), degeneracy_report(table, 1e-6), expected,
                   max_report_gap(table, expected), 1e-6);
}

}  // namespace

bool ReproReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const ReproCheck& c) { return c.pass; });
}

ReproReport run_reproduction(const ReproFilter& filter) {
  ReproReport report;
  auto wanted = [&](int table_index) {
    return !filter.table.has_value() || *filter.table == table_index;
  };

  if (wanted(1)) report.checks.push_back(table_check(1, ref::table1));

  if (wanted(2)) {
    const auto art = build_parabola(ref::table1);
    const auto rel = fit_hyperbola(art.plan.spec, 1.0);
    const auto& h = std::get<Hyperbola>(rel.shape);
    report.checks.push_back(make_check("table2",
                                       {{"a_t", h.a_t, ref::table2_a_t},
                                        {"b_t", h.b_t, ref::table2_b_t},
                                        {"c_t", h.c_t, ref::table2_c_t}},
                                       ref::table2_tol));
    report.checks.push_back(make_check(
        "table2_residuals",
        {{"at_fit_point_1", shape_residual(rel, art.plan.spec.q1, art.plan.spec.p0), 0.0},
         {"at_fit_point_2", shape_residual(rel, art.plan.spec.q2, art.plan.spec.p0), 0.0},
         {"at_(1,1)", shape_residual(rel, 1.0, 1.0), 0.0}},
        1e-6));
  }

  if (wanted(3)) {
    const auto art = build_parabola(ref::table1);
    const auto rel = fit_ellipse(art.plan.spec, ref::table3_eps);
    const auto& e = std::get<Ellipse>(rel.shape);
    report.checks.push_back(make_check("table3",
                                       {{"mu", e.mu, ref::table3_mu},
                                        {"nu", e.nu, ref::table3_nu},
                                        {"rho", e.rho, ref::table3_rho}},
                                       ref::table_tol));
  }

  if (wanted(4)) report.checks.push_back(table_check(4, ref::table4));
  if (wanted(5)) report.checks.push_back(table_check(5, ref::table5));

  if (filter.table.has_value()) return report;

  {
    const auto art = build_parabola(ref::table1);
    report.checks.push_back(make_check(
        "p_min_parabola", {{"p_min", p_min(art.relation), ref::pmin_parabola}}, ref::table_tol));
    report.checks.push_back(
        make_check("p_min_hyperbola",
                   {{"p_min", p_min(fit_hyperbola(art.plan.spec, 1.0)), ref::pmin_hyperbola}},
                   ref::table_tol));
  }

  const auto crossings =
      intersect_curves(LevelPair::make(ref::crossing_pair1_n, ref::crossing_pair1_k),
                       LevelPair::make(ref::crossing_pair2_n, ref::crossing_pair2_k), 1e-10);
  {
    ReproCheck check;
    check.id = "curve_crossings";
    check.tolerance = ref::table_tol;
    if (crossings.size() != 2) {
      check.detail = "expected 2 crossings, found " + std::to_string(crossings.size());
      check.max_abs_diff = 1.0;
      check.pass = false;
    } else {
      check = make_check("curve_crossings",
                         {{"q_A", crossings[0].q, ref::point_a_q},
                          {"p_A", crossings[0].p, ref::point_a_p},
                          {"q_B", crossings[1].q, ref::point_a_p},
                          {"p_B", crossings[1].p, ref::point_a_q}},
                         ref::table_tol);
    }
    report.checks.push_back(check);
  }

  if (crossings.size() == 2) {
    const auto line_a = fit_line(crossings[0].q, crossings[0].p);
    const auto line_b = fit_line(crossings[1].q, crossings[1].p);
    const auto& la = std::get<Line>(line_a.shape);
    const auto& lb = std::get<Line>(line_b.shape);
    report.checks.push_back(make_check("line_fits",
                                       {{"alpha_A", la.alpha, ref::line_a_alpha},
                                        {"beta_A", la.beta, ref::line_a_beta},
                                        {"alpha_B", lb.alpha, ref::line_b_alpha},
                                        {"beta_B", lb.beta, ref::line_b_beta}},
                                       ref::table_tol));

    const std::vector<std::pair<int, int>> fig5_expected = {{0, 10}, {2, 3}};
    for (int which = 0; which < 2; ++which) {
      const auto& cross = crossings[static_cast<std::size_t>(which)];
      const auto& line = which == 0 ? line_a : line_b;
      const auto table = reduced_spectrum(line, BranchAssignment{}, cross.p, 12);
      report.checks.push_back(set_check(
          which == 0 ? "figure5_degeneracies_A" : "figure5_degeneracies_B",
          degeneracy_report(table, 1e-6), fig5_expected, max_report_gap(table, fig5_expected),
          1e-6));
    }
  }

  {
    const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
    const double e2 = axis_endpoint(LevelPair::make(0, 2));
    ReproCheck check = make_check("axis_endpoint_k2", {{"endpoint", e2, golden}}, 1e-9);
    double prev = e2;
    bool increasing = true;
    for (int k = 3; k <= 12; ++k) {
      const double e = axis_endpoint(LevelPair::make(0, k));
      increasing = increasing && e > prev && e < 1.0;
      prev = e;
    }
    check.detail += increasing ? ", endpoints strictly increasing for k=2..12"
                               : ", endpoint monotonicity VIOLATED";
    check.pass = check.pass && increasing;
    report.checks.push_back(check);
  }

  report.checks.push_back(figure_check("figure1_degeneracies", ref::table1, {{1, 2}, {3, 4}}));
  report.checks.push_back(
      figure_check("figure3_degeneracies", ref::table4, {{0, 2}, {0, 5}, {2, 5}}));
  report.checks.push_back(figure_check("figure4_degeneracies", ref::table5, {{0, 4}, {2, 3}}));

  return report;
}

std::string report_text(const ReproReport& report) {
  std::string out;
  for (const auto& c : report.checks) {
    char line[512];
    std::snprintf(line, sizeof line, "[%s] %-24s max|diff| = %.3e (tol %.1e)  %s\n",
                  c.pass ? "PASS" : "FAIL", c.id.c_str(), c.max_abs_diff, c.tolerance,
                  c.detail.c_str());
    out += line;
  }
  out += report.all_pass() ? "reproduction: all checks passed\n"
                           : "reproduction: MISMATCH detected\n";
  return out;
}

nlohmann::json report_json(const ReproReport& report) {
  nlohmann::json j;
  auto& arr = j["checks"] = nlohmann::json::array();
  for (const auto& c : report.checks) {
    arr.push_back({{"id", c.id},
                   {"detail", c.detail},
                   {"max_abs_diff", c.max_abs_diff},
                   {"tolerance", c.tolerance},
                   {"pass", c.pass}});
  }
  j["all_pass"] = report.all_pass();
  return j;
}

}  // namespace qpdeg
