#ifndef QPDEG_REPRODUCE_HPP
#define QPDEG_REPRODUCE_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace qpdeg {

/// Outcome of one reproduction artifact: recomputed values against the
/// embedded reference constants.
struct ReproCheck {
  std::string id;
  std::string detail;
  double max_abs_diff = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct ReproReport {
  std::vector<ReproCheck> checks;

  bool all_pass() const;
};

struct ReproFilter {
  std::optional<int> table;  // restrict to one of the parameter tables 1..5
};

/// Recompute every table, both p_min values, the curve crossings, the line
/// fits and the figure degeneracy reports from scratch and compare.
ReproReport run_reproduction(const ReproFilter& filter = {});

std::string report_text(const ReproReport& report);
nlohmann::json report_json(const ReproReport& report);

}  // namespace qpdeg

#endif
