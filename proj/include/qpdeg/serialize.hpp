#ifndef QPDEG_SERIALIZE_HPP
#define QPDEG_SERIALIZE_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qpdeg/intersect.hpp"
#include "qpdeg/reduction.hpp"

namespace qpdeg::io {

/// Shortest decimal representation that parses back to the same double;
/// a set rounding forces fixed notation with that many decimals instead.
std::string format_double(double v, std::optional<int> rounding = std::nullopt);
double parse_double(std::string_view text);

LevelPair parse_pair(std::string_view text);  // "n:k"

// --- CSV (header + rows; numbers round-trip bit-exactly unless rounded) ---

std::string spectrum_csv(std::span<const SpectrumRow> rows,
                         std::optional<int> rounding = std::nullopt);
std::vector<SpectrumRow> parse_spectrum_csv(std::string_view text);

std::string trace_csv(std::span<const CurveTrace> traces,
                      std::optional<int> rounding = std::nullopt);
struct TraceRow {
  double p = 0.0;
  double q = 0.0;
  LevelPair pair;

  friend bool operator==(const TraceRow&, const TraceRow&) = default;
};
std::vector<TraceRow> parse_trace_csv(std::string_view text);

std::string intersections_csv(std::span<const IntersectionPoint> points,
                              std::optional<int> rounding = std::nullopt);
struct IntersectionRow {
  double q = 0.0, p = 0.0, residual1 = 0.0, residual2 = 0.0;

  friend bool operator==(const IntersectionRow&, const IntersectionRow&) = default;
};
std::vector<IntersectionRow> parse_intersections_csv(std::string_view text);

std::string roots_csv(std::span<const double> roots, const LevelPair& pair, double p0,
                      std::optional<int> rounding = std::nullopt);

// --- JSON ---

nlohmann::json relation_json(const ConicRelation& relation);
ConicRelation relation_from_json(const nlohmann::json& j);

nlohmann::json spectrum_json(const SpectrumTable& table);
SpectrumTable spectrum_from_json(const nlohmann::json& j);

nlohmann::json intersections_json(std::span<const IntersectionPoint> points);
nlohmann::json trace_json(std::span<const CurveTrace> traces);

// --- files ---

/// Whole-file atomic write: temp file in the target directory, then rename.
void atomic_write_file(const std::string& path, std::string_view content);
std::string read_file(const std::string& path);

}  // namespace qpdeg::io

#endif
