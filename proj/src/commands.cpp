#include "qpdeg/commands.hpp"

#include <cmath>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qpdeg/reproduce.hpp"
#include "qpdeg/serialize.hpp"
#include "qpdeg/svg.hpp"

namespace qpdeg::cli {

namespace {

struct GlobalOpts {
  std::string format = "csv";
  std::string out;
  double tol = 1e-12;
  int rounding = 0;  // 0 = shortest round-trip

  std::optional<int> rounding_opt() const {
    return rounding == 0 ? std::nullopt : std::optional<int>(rounding);
  }
  void check() const {
    if (rounding != 0 && (rounding < 1 || rounding > 12)) {
      throw argument_error("--rounding must lie in [1,12]");
    }
    if (!(tol > 0.0)) throw argument_error("--tol must be positive");
  }
};

void emit(const GlobalOpts& g, const std::string& content) {
  if (g.out.empty()) {
    std::cout << content;
  } else {
    io::atomic_write_file(g.out, content);
  }
}

ConicRelation load_relation(const std::string& preset_name, const std::string& relation_path,
                            BranchAssignment& assignment) {
  if (!preset_name.empty() && !relation_path.empty()) {
    throw argument_error("pass either --preset or --relation, not both");
  }
  if (!preset_name.empty()) {
    auto [rel, asg] = preset(preset_from_name(preset_name));
    assignment = asg;
    return rel;
  }
  if (!relation_path.empty()) {
    return io::relation_from_json(nlohmann::json::parse(io::read_file(relation_path)));
  }
  throw argument_error("a relation is required: --preset NAME or --relation FILE");
}

struct SpectrumArgs {
  std::string preset_name;
  std::string relation_path;
  double p = 1.0;
  int n_max = 12;
  int threshold = 0;
  std::string low = "-";
  std::string high = "+";
};

int cmd_spectrum(const GlobalOpts& g, const SpectrumArgs& a) {
  BranchAssignment assignment;
  const ConicRelation relation = load_relation(a.preset_name, a.relation_path, assignment);
  assignment.threshold = a.threshold;
  assignment.low = branch_from_char(a.low.at(0));
  assignment.high = branch_from_char(a.high.at(0));

  SpectrumTable table;
  try {
    table = reduced_spectrum(relation, assignment, a.p, a.n_max);
  } catch (const domain_error& err) {
    // Name the admissible range where one exists; the ellipse has none.
    std::string range;
    try {
      range = " (admissible p: [" + io::format_double(p_min(relation)) + ", 1])";
    } catch (const not_applicable_error&) {
      const auto ext = ellipse_p_extremes(std::get<Ellipse>(relation.shape));
      range = " (admissible p: [" + io::format_double(ext.first) + ", " +
              io::format_double(ext.second) + "])";
    }
    throw domain_error(err.what() + range);
  }

  if (g.format == "csv") {
    emit(g, io::spectrum_csv(table.entries, g.rounding_opt()));
  } else if (g.format == "json") {
    emit(g, io::spectrum_json(table).dump(2) + "\n");
  } else {
    emit(g, svg::spectrum_plot(table));
  }
  return exit_ok;
}

struct FitArgs {
  std::string kind;
  std::vector<std::string> pairs;
  double q1 = 0.0, q2 = 0.0, p0 = 0.0, p1 = 0.0;
  bool have_q1 = false, have_q2 = false, have_p0 = false, have_p1 = false;
  double eps = 0.1;
  double radius = 1.0;
};

FitSpec resolve_spec(const FitArgs& a, double tol, std::optional<BranchAssignment>* assignment) {
  if (!a.pairs.empty()) {
    if (a.pairs.size() != 2 || !a.have_p0) {
      throw argument_error("symbolic fits need exactly two --pair n:k and --p0");
    }
    const auto plan = plan_reduction(io::parse_pair(a.pairs[0]), io::parse_pair(a.pairs[1]),
                                     a.p0, tol);
    if (assignment != nullptr) *assignment = plan.assignment;
    return plan.spec;
  }
  if (!a.have_q1 || !a.have_q2 || !a.have_p0) {
    throw argument_error("raw fits need --q1, --q2 and --p0 (or two --pair n:k with --p0)");
  }
  return FitSpec{a.q1, a.q2, a.p0};
}

int cmd_fit(const GlobalOpts& g, const FitArgs& a) {
  ConicRelation relation;
  std::optional<BranchAssignment> assignment;
  if (a.kind == "parabola") {
    relation = fit_parabola(resolve_spec(a, g.tol, &assignment));
  } else if (a.kind == "hyperbola") {
    relation = fit_hyperbola(resolve_spec(a, g.tol, &assignment), a.radius);
  } else if (a.kind == "ellipse") {
    relation = fit_ellipse(resolve_spec(a, g.tol, &assignment), a.eps);
  } else {  // line
    if (!a.pairs.empty()) {
      if (a.pairs.size() != 1 || !a.have_p0) {
        throw argument_error("a line fit needs one --pair n:k with --p0, or --q1 and --p1");
      }
      const auto pair = io::parse_pair(a.pairs[0]);
      const auto roots = solve_q(pair, a.p0, g.tol);
      if (roots.size() != 1) {
        throw domain_error("curve " + pair.label() + " has " + std::to_string(roots.size()) +
                           " roots at p0; need exactly one");
      }
      relation = fit_line(roots.front(), a.p0);
    } else {
      if (!a.have_q1 || !a.have_p1) throw argument_error("a line fit needs --q1 and --p1");
      relation = fit_line(a.q1, a.p1);
    }
  }

  nlohmann::json j = io::relation_json(relation);
  nlohmann::json diag;
  if (relation.fit) {
    diag["residual_at_fit_point_1"] = shape_residual(relation, relation.fit->q1, relation.fit->p0);
    diag["residual_at_fit_point_2"] = shape_residual(relation, relation.fit->q2, relation.fit->p0);
  }
  diag["residual_at_unity"] = shape_residual(relation, 1.0, 1.0);
  if (assignment) {
    diag["default_assignment"] = {{"threshold", assignment->threshold},
                                  {"low", std::string(1, branch_char(assignment->low))},
                                  {"high", std::string(1, branch_char(assignment->high))}};
  }
  j["diagnostics"] = diag;
  emit(g, j.dump(2) + "\n");
  return exit_ok;
}

struct SolveArgs {
  std::string pair;
  double p0 = 0.0;
};

int cmd_solve(const GlobalOpts& g, const SolveArgs& a) {
  const auto pair = io::parse_pair(a.pair);
  const auto roots = solve_q(pair, a.p0, g.tol);
  if (g.format == "json") {
    nlohmann::json j;
    j["pair"] = pair.label();
    j["p0"] = a.p0;
    auto& arr = j["roots"] = nlohmann::json::array();
    for (double q : roots) {
      arr.push_back({{"q", q}, {"residual", detail::residual_raw(pair, q, a.p0)}});
    }
    emit(g, j.dump(2) + "\n");
  } else {
    emit(g, io::roots_csv(roots, pair, a.p0, g.rounding_opt()));
  }
  return exit_ok;
}

struct TraceArgs {
  std::vector<std::string> pairs;
  std::string relation_path;
  std::size_t samples = 512;
  double p_lo = 0.01;
  double p_hi = 1.0;
};

int cmd_trace(const GlobalOpts& g, const TraceArgs& a) {
  if (a.pairs.empty()) throw argument_error("trace needs at least one --pair n:k");
  const auto grid = default_p_grid(a.samples, a.p_lo, a.p_hi);

  std::vector<CurveTrace> traces;
  traces.reserve(a.pairs.size());
  for (const auto& label : a.pairs) {
    traces.push_back(trace(io::parse_pair(label), grid, g.tol));
  }

  std::optional<ConicRelation> overlay;
  if (!a.relation_path.empty()) {
    overlay = io::relation_from_json(nlohmann::json::parse(io::read_file(a.relation_path)));
  }

  if (g.format == "csv") {
    emit(g, io::trace_csv(traces, g.rounding_opt()));
  } else if (g.format == "json") {
    emit(g, io::trace_json(traces).dump(2) + "\n");
  } else {
    std::vector<std::pair<double, double>> marks;
    if (overlay && overlay->fit) {
      marks.emplace_back(overlay->fit->q1, overlay->fit->p0);
      marks.emplace_back(overlay->fit->q2, overlay->fit->p0);
    }
    marks.emplace_back(1.0, 1.0);
    emit(g, svg::trace_plot(traces, overlay ? &*overlay : nullptr, marks));
  }
  return exit_ok;
}

struct IntersectArgs {
  std::string pair1;
  std::string pair2;
  std::size_t samples = 4096;
};

int cmd_intersect(const GlobalOpts& g, const IntersectArgs& a) {
  IntersectOptions opt;
  opt.p_samples = a.samples;
  opt.tol = std::max(g.tol, 1e-14);
  const auto pair1 = io::parse_pair(a.pair1);
  const auto pair2 = io::parse_pair(a.pair2);
  const auto points = intersect_curves(pair1, pair2, opt);

  if (g.format == "json") {
    emit(g, io::intersections_json(points).dump(2) + "\n");
  } else if (g.format == "svg") {
    const auto grid = default_p_grid(256, 0.01, 1.0);
    std::vector<CurveTrace> traces = {trace(pair1, grid, 1e-10), trace(pair2, grid, 1e-10)};
    std::vector<std::pair<double, double>> marks;
    for (const auto& pt : points) marks.emplace_back(pt.q, pt.p);
    emit(g, svg::trace_plot(traces, nullptr, marks));
  } else {
    emit(g, io::intersections_csv(points, g.rounding_opt()));
  }
  return exit_ok;
}

struct ReproduceArgs {
  int table = 0;  // 0 = every artifact
};

int cmd_reproduce(const GlobalOpts& g, const ReproduceArgs& a) {
  ReproFilter filter;
  if (a.table != 0) {
    if (a.table < 1 || a.table > 5) throw argument_error("--table must lie in 1..5");
    filter.table = a.table;
  }
  const auto report = run_reproduction(filter);
  const std::string text = report_text(report);
  std::cout << text;
  if (!g.out.empty()) {
    io::atomic_write_file(g.out, g.format == "json" ? report_json(report).dump(2) + "\n" : text);
  }
  return report.all_pass() ? exit_ok : exit_mismatch;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"two-parameter deformed oscillator spectra, degeneracy curves and reductions"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"csv", "json", "svg"}))
      ->capture_default_str();
  app.add_option("--out", g.out, "output file (stdout when omitted; writes are atomic)");
  app.add_option("--tol", g.tol, "root-finding tolerance")->capture_default_str();
  app.add_option("--rounding", g.rounding, "fixed decimals for CSV numbers (1..12)");

  SpectrumArgs sa;
  auto* spectrum = app.add_subcommand("spectrum", "energy spectrum of a reduced oscillator");
  spectrum->add_option("--preset", sa.preset_name, "td | ak | linear-a | linear-b");
  spectrum->add_option("--relation", sa.relation_path, "relation JSON produced by fit");
  spectrum->add_option("--p", sa.p, "deformation parameter (read as q for p=const lines)")
      ->required();
  spectrum->add_option("--nmax", sa.n_max, "highest level")->capture_default_str();
  spectrum->add_option("--threshold", sa.threshold, "branch switch level n*")
      ->capture_default_str();
  spectrum->add_option("--low", sa.low, "branch below n*")->check(CLI::IsMember({"-", "+"}));
  spectrum->add_option("--high", sa.high, "branch from n* up")->check(CLI::IsMember({"-", "+"}));

  FitArgs fa;
  auto* fit = app.add_subcommand("fit", "fit a reduction relation p = f(q)");
  fit->add_option("kind", fa.kind, "parabola | hyperbola | ellipse | line")
      ->required()
      ->check(CLI::IsMember({"parabola", "hyperbola", "ellipse", "line"}));
  fit->add_option("--pair", fa.pairs, "degeneracy pair n:k (repeat; resolved via solve)");
  fit->add_option("--q1", fa.q1)->each([&fa](const std::string&) { fa.have_q1 = true; });
  fit->add_option("--q2", fa.q2)->each([&fa](const std::string&) { fa.have_q2 = true; });
  fit->add_option("--p0", fa.p0)->each([&fa](const std::string&) { fa.have_p0 = true; });
  fit->add_option("--p1", fa.p1, "p of the line's anchor point")
      ->each([&fa](const std::string&) { fa.have_p1 = true; });
  fit->add_option("--eps", fa.eps, "ellipse eps")->capture_default_str();
  fit->add_option("--R", fa.radius, "hyperbola R")->capture_default_str();

  SolveArgs va;
  auto* solve = app.add_subcommand("solve", "roots q of E_{n+k} = E_n at fixed p0");
  solve->add_option("--pair", va.pair, "degeneracy pair n:k")->required();
  solve->add_option("--p0", va.p0)->required();

  TraceArgs ta;
  auto* tracec = app.add_subcommand("trace", "sample degeneracy curves over a p grid");
  tracec->add_option("--pair", ta.pairs, "degeneracy pair n:k (repeatable)");
  tracec->add_option("--relation", ta.relation_path, "relation JSON to overlay (svg)");
  tracec->add_option("--samples", ta.samples)->capture_default_str();
  tracec->add_option("--p-lo", ta.p_lo)->capture_default_str();
  tracec->add_option("--p-hi", ta.p_hi)->capture_default_str();

  IntersectArgs ia;
  auto* intersect = app.add_subcommand("intersect", "crossings of two degeneracy curves");
  intersect->add_option("--pair1", ia.pair1, "first pair n:k")->required();
  intersect->add_option("--pair2", ia.pair2, "second pair n:k")->required();
  intersect->add_option("--samples", ia.samples)->capture_default_str();

  ReproduceArgs ra;
  auto* reproduce = app.add_subcommand("reproduce", "recompute and check every published value");
  reproduce->add_option("--table", ra.table, "restrict to parameter table 1..5");

  // global flags may follow the subcommand
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_argument_error;
  }

  try {
    g.check();
    if (spectrum->parsed()) return cmd_spectrum(g, sa);
    if (fit->parsed()) return cmd_fit(g, fa);
    if (solve->parsed()) return cmd_solve(g, va);
    if (tracec->parsed()) return cmd_trace(g, ta);
    if (intersect->parsed()) return cmd_intersect(g, ia);
    if (reproduce->parsed()) return cmd_reproduce(g, ra);
    return exit_argument_error;
  } catch (const argument_error& e) {
    std::cerr << "argument error: " << e.what() << "\n";
    return exit_argument_error;
  } catch (const domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return exit_domain_error;
  } catch (const fit_error& e) {
    std::cerr << "fit error: " << e.what() << "\n";
    return exit_domain_error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_domain_error;
  }
}

}  // namespace qpdeg::cli
