#include "qpdeg/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace qpdeg::svg {

namespace {

constexpr double kWidth = 720.0, kHeight = 540.0;
constexpr double kLeft = 70.0, kRight = 24.0, kTop = 40.0, kBottom = 56.0;
constexpr int kTicks = 6;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct Range {
  double lo = 0.0, hi = 1.0;

  void include(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void pad() {
    if (hi - lo < 1e-12) {
      lo -= 0.5;
      hi += 0.5;
    }
    const double m = 0.05 * (hi - lo);
    lo -= m;
    hi += m;
  }
  double to_px(double v, double px_lo, double px_hi) const {
    return px_lo + (v - lo) / (hi - lo) * (px_hi - px_lo);
  }
};

}  // namespace

std::string render(const PlotSpec& spec) {
  Range xr{1e300, -1e300}, yr{1e300, -1e300};
  bool any = false;
  for (const auto& s : spec.series) {
    for (const auto& [x, y] : s.points) {
      xr.include(x);
      yr.include(y);
      any = true;
    }
  }
  if (!any) {
    xr = {0.0, 1.0};
    yr = {0.0, 1.0};
  }
  xr.pad();
  yr.pad();

  auto px = [&](double x) { return xr.to_px(x, kLeft, kWidth - kRight); };
  auto py = [&](double y) { return yr.to_px(y, kHeight - kBottom, kTop); };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" +
         num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<text x=\"" + num(kWidth / 2) + "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\" "
         "font-family=\"sans-serif\">" + spec.title + "</text>\n";

  // frame
  out += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" +
         num(kWidth - kLeft - kRight) + "\" height=\"" + num(kHeight - kTop - kBottom) +
         "\" fill=\"none\" stroke=\"black\"/>\n";

  for (int i = 0; i <= kTicks; ++i) {
    const double fx = xr.lo + (xr.hi - xr.lo) * i / kTicks;
    const double fy = yr.lo + (yr.hi - yr.lo) * i / kTicks;
    const double tx = px(fx);
    const double ty = py(fy);
    out += "<line x1=\"" + num(tx) + "\" y1=\"" + num(kHeight - kBottom) + "\" x2=\"" + num(tx) +
           "\" y2=\"" + num(kHeight - kBottom + 6) + "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + num(tx) + "\" y=\"" + num(kHeight - kBottom + 20) +
           "\" text-anchor=\"middle\" font-size=\"11\" font-family=\"sans-serif\">" + num(fx) +
           "</text>\n";
    out += "<line x1=\"" + num(kLeft - 6) + "\" y1=\"" + num(ty) + "\" x2=\"" + num(kLeft) +
           "\" y2=\"" + num(ty) + "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + num(kLeft - 10) + "\" y=\"" + num(ty + 4) +
           "\" text-anchor=\"end\" font-size=\"11\" font-family=\"sans-serif\">" + num(fy) +
           "</text>\n";
  }
  out += "<text x=\"" + num((kLeft + kWidth - kRight) / 2) + "\" y=\"" + num(kHeight - 14) +
         "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\">" + spec.x_label +
         "</text>\n";
  out += "<text x=\"18\" y=\"" + num((kTop + kHeight - kBottom) / 2) +
         "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\" transform=\"rotate(-90 18 " +
         num((kTop + kHeight - kBottom) / 2) + ")\">" + spec.y_label + "</text>\n";

  std::size_t color_idx = 0;
  double legend_y = kTop + 16.0;
  for (const auto& s : spec.series) {
    const char* color = kPalette[color_idx % (sizeof kPalette / sizeof kPalette[0])];
    ++color_idx;
    if (s.draw_line && s.points.size() > 1) {
      std::string pts;
      for (const auto& [x, y] : s.points) pts += num(px(x)) + "," + num(py(y)) + " ";
      out += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"1.5\" points=\"" +
             pts + "\"/>\n";
    }
    if (s.draw_markers || s.points.size() == 1) {
      for (const auto& [x, y] : s.points) {
        out += "<circle cx=\"" + num(px(x)) + "\" cy=\"" + num(py(y)) + "\" r=\"3\" fill=\"" +
               color + "\"/>\n";
      }
    }
    if (!s.label.empty()) {
      out += "<text x=\"" + num(kWidth - kRight - 8) + "\" y=\"" + num(legend_y) +
             "\" text-anchor=\"end\" font-size=\"12\" font-family=\"sans-serif\" fill=\"" + color +
             "\">" + s.label + "</text>\n";
      legend_y += 16.0;
    }
  }
  out += "</svg>\n";
  return out;
}

std::string spectrum_plot(const SpectrumTable& table) {
  PlotSpec spec;
  spec.title = "Energy spectrum at p = " + num(table.p_value) + " (" + table.relation.kind() + ")";
  spec.x_label = "n";
  spec.y_label = "E(n)";
  Series s;
  s.draw_markers = true;
  for (const auto& r : table.entries) s.points.emplace_back(r.n, r.energy);
  spec.series.push_back(std::move(s));
  return render(spec);
}

std::string trace_plot(std::span<const CurveTrace> traces, const ConicRelation* overlay,
                       std::span<const std::pair<double, double>> marks) {
  PlotSpec spec;
  spec.title = "Degeneracy curves in the (q,p) square";
  spec.x_label = "q";
  spec.y_label = "p";
  for (const auto& t : traces) {
    Series s;
    s.label = "E(n+k)=E(n) " + t.pair.label();
    for (const auto& pt : t.samples) s.points.emplace_back(pt.q, pt.p);
    spec.series.push_back(std::move(s));
  }
  if (overlay != nullptr) {
    Series s;
    s.label = overlay->kind() + " reduction";
    for (int i = 0; i <= 256; ++i) {
      const double q = 0.01 + (1.0 - 0.01) * i / 256.0;
      try {
        const double p = evaluate(*overlay, q);
        if (p > 0.0 && p <= 1.05) s.points.emplace_back(q, p);
      } catch (const domain_error&) {
        // q outside the relation's reach (ellipse arc); skip the sample
      }
    }
    spec.series.push_back(std::move(s));
  }
  if (!marks.empty()) {
    Series s;
    s.label = "marked points";
    s.draw_line = false;
    s.draw_markers = true;
    for (const auto& m : marks) s.points.push_back(m);
    spec.series.push_back(std::move(s));
  }
  return render(spec);
}

}  // namespace qpdeg::svg
