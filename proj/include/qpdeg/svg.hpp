#ifndef QPDEG_SVG_HPP
#define QPDEG_SVG_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qpdeg/reduction.hpp"

namespace qpdeg::svg {

/// One plotted data set; points are (x, y) in data coordinates.
struct Series {
  std::vector<std::pair<double, double>> points;
  std::string label;
  bool draw_line = true;
  bool draw_markers = false;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;
};

/// Static self-contained SVG document: axes, ticks, polylines, markers and a
/// legend. No timestamps or external assets, so output is byte-deterministic.
std::string render(const PlotSpec& spec);

std::string spectrum_plot(const SpectrumTable& table);
std::string trace_plot(std::span<const CurveTrace> traces, const ConicRelation* overlay,
                       std::span<const std::pair<double, double>> marks);

}  // namespace qpdeg::svg

#endif
