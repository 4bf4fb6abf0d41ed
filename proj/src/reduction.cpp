#include "qpdeg/reduction.hpp"

#include <cmath>

namespace qpdeg {

namespace {

// Line fit through (1,1) and the (0,10)x(2,1) curve crossing at
// q = 0.56723860151188, p = 0.82355350096690 (and its q<->p mirror).
constexpr double kLineAAlpha = 0.40772236075011204;
constexpr double kLineBAlpha = 2.4526493915129849;

bool is_horizontal(const ConicRelation& rel) {
  const auto* line = std::get_if<Line>(&rel.shape);
  return line != nullptr && std::abs(line->alpha) < 1e-14;
}

}  // namespace

SpectrumTable reduced_spectrum(const ConicRelation& relation, const BranchAssignment& assignment,
                               double p, int n_max) {
  if (n_max < 0) throw argument_error("spectrum needs n_max >= 0");

  SpectrumTable table;
  table.relation = relation;
  table.assignment = assignment;

  const bool horizontal = is_horizontal(relation);
  table.p_value = horizontal ? std::get<Line>(relation.shape).beta : p;

  table.entries.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    SpectrumRow row;
    row.n = n;
    row.branch = assignment.at(n);
    row.q_used = horizontal ? p : invert(relation, p, row.branch);
    if (!(row.q_used > 0.0) || !(row.q_used <= 1.0)) {
      throw domain_error("inverted relation leaves the deformation domain: q = " +
                         std::to_string(row.q_used) + " at level " + std::to_string(n));
    }
    row.energy = detail::energy_raw(n, row.q_used, table.p_value);
    table.entries.push_back(row);
  }
  return table;
}

Preset preset_from_name(std::string_view name) {
  if (name == "td") return Preset::td;
  if (name == "ak") return Preset::ak;
  if (name == "linear-a") return Preset::linear_a;
  if (name == "linear-b") return Preset::linear_b;
  throw argument_error("unknown preset '" + std::string(name) +
                       "' (expected td, ak, linear-a or linear-b)");
}

std::pair<ConicRelation, BranchAssignment> preset(Preset which) {
  Line line;
  switch (which) {
    case Preset::td:
      line = {1.0, 0.0};
      break;
    case Preset::ak:
      line = {0.0, 1.0};
      break;
    case Preset::linear_a:
      line = {kLineAAlpha, 1.0 - kLineAAlpha};
      break;
    case Preset::linear_b:
      line = {kLineBAlpha, 1.0 - kLineBAlpha};
      break;
  }
  return {ConicRelation{line, std::nullopt}, BranchAssignment{}};
}

std::vector<std::pair<int, int>> degeneracy_report(const SpectrumTable& table, double tol) {
  if (!(tol > 0.0)) throw argument_error("degeneracy report needs tol > 0");
  std::vector<std::pair<int, int>> pairs;
  const auto& rows = table.entries;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (std::abs(rows[i].energy - rows[j].energy) < tol) {
        pairs.emplace_back(rows[i].n, rows[j].n);
      }
    }
  }
  return pairs;
}

BranchAssignment default_assignment(const EngineeredPair& a, const EngineeredPair& b) {
  const bool a_low = a.pair.upper() < b.pair.upper() ||
                     (a.pair.upper() == b.pair.upper() && a.pair.n < b.pair.n);
  const EngineeredPair& low = a_low ? a : b;
  const EngineeredPair& high = a_low ? b : a;

  BranchAssignment assignment;
  assignment.threshold = low.pair.upper() + 1;
  assignment.low = low.q_root < high.q_root ? Branch::minus : Branch::plus;
  assignment.high = opposite(assignment.low);

  // The high pair's lower level sits below the threshold; only a
  // second-family pair survives that (E_0 = 1/2 on either branch).
  if (high.pair.family == Family::first && high.pair.n < assignment.threshold) {
    throw fit_error("no single threshold realizes both degeneracies: pair " +
                    high.pair.label() + " straddles level " +
                    std::to_string(assignment.threshold));
  }
  return assignment;
}

ReductionPlan plan_reduction(const LevelPair& a, const LevelPair& b, double p0, double tol) {
  if (a == b) throw argument_error("engineered reduction needs two distinct level pairs");

  auto root_of = [&](const LevelPair& pair) {
    const auto roots = solve_q(pair, p0, tol);
    if (roots.empty()) {
      throw domain_error("curve " + pair.label() + " has no point at p0 = " + std::to_string(p0));
    }
    if (roots.size() > 1) {
      throw argument_error("curve " + pair.label() + " has " + std::to_string(roots.size()) +
                           " roots at p0 = " + std::to_string(p0) +
                           "; pass an explicit fit spec instead");
    }
    return roots.front();
  };

  ReductionPlan plan;
  const EngineeredPair ea{a, root_of(a)};
  const EngineeredPair eb{b, root_of(b)};
  if (std::abs(ea.q_root - eb.q_root) < 1e-9) {
    throw fit_error("fit points coincide: both curves cross p0 at the same q");
  }
  plan.spec = FitSpec{std::min(ea.q_root, eb.q_root), std::max(ea.q_root, eb.q_root), p0};
  plan.assignment = default_assignment(ea, eb);
  const bool ea_low = ea.pair.upper() < eb.pair.upper() ||
                      (ea.pair.upper() == eb.pair.upper() && ea.pair.n < eb.pair.n);
  plan.low = ea_low ? ea : eb;
  plan.high = ea_low ? eb : ea;
  return plan;
}

}  // namespace qpdeg
