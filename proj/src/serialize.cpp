#include "qpdeg/serialize.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace qpdeg::io {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find(sep, start);
    if (end == std::string_view::npos) {
      out.push_back(text.substr(start));
      break;
    }
    out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

std::vector<std::vector<std::string_view>> parse_csv(std::string_view text,
                                                     std::string_view expected_header) {
  std::vector<std::vector<std::string_view>> rows;
  bool first = true;
  for (auto line : split(text, '\n')) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (first) {
      if (line != expected_header) {
        throw argument_error("unexpected CSV header '" + std::string(line) + "', expected '" +
                             std::string(expected_header) + "'");
      }
      first = false;
      continue;
    }
    rows.push_back(split(line, ','));
  }
  if (first) throw argument_error("empty CSV input");
  return rows;
}

long parse_int(std::string_view text) {
  long value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw argument_error("not an integer: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::string format_double(double v, std::optional<int> rounding) {
  char buf[64];
  if (rounding) {
    const int n = std::snprintf(buf, sizeof buf, "%.*f", *rounding, v);
    return std::string(buf, static_cast<std::size_t>(n));
  }
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

double parse_double(std::string_view text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw argument_error("not a number: '" + std::string(text) + "'");
  }
  return value;
}

LevelPair parse_pair(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() != 2) throw argument_error("level pair must look like n:k, got '" + std::string(text) + "'");
  return LevelPair::make(static_cast<int>(parse_int(parts[0])),
                         static_cast<int>(parse_int(parts[1])));
}

std::string spectrum_csv(std::span<const SpectrumRow> rows, std::optional<int> rounding) {
  std::string out = "n,E,q_used,branch\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n);
    out += ',';
    out += format_double(r.energy, rounding);
    out += ',';
    out += format_double(r.q_used, rounding);
    out += ',';
    out += branch_char(r.branch);
    out += '\n';
  }
  return out;
}

std::vector<SpectrumRow> parse_spectrum_csv(std::string_view text) {
  std::vector<SpectrumRow> rows;
  for (const auto& fields : parse_csv(text, "n,E,q_used,branch")) {
    if (fields.size() != 4 || fields[3].size() != 1) throw argument_error("malformed spectrum row");
    SpectrumRow r;
    r.n = static_cast<int>(parse_int(fields[0]));
    r.energy = parse_double(fields[1]);
    r.q_used = parse_double(fields[2]);
    r.branch = branch_from_char(fields[3][0]);
    rows.push_back(r);
  }
  return rows;
}

std::string trace_csv(std::span<const CurveTrace> traces, std::optional<int> rounding) {
  std::string out = "p,q,pair\n";
  for (const auto& t : traces) {
    const std::string label = t.pair.label();
    for (const auto& s : t.samples) {
      out += format_double(s.p, rounding);
      out += ',';
      out += format_double(s.q, rounding);
      out += ',';
      out += label;
      out += '\n';
    }
  }
  return out;
}

std::vector<TraceRow> parse_trace_csv(std::string_view text) {
  std::vector<TraceRow> rows;
  for (const auto& fields : parse_csv(text, "p,q,pair")) {
    if (fields.size() != 3) throw argument_error("malformed trace row");
    TraceRow r;
    r.p = parse_double(fields[0]);
    r.q = parse_double(fields[1]);
    r.pair = parse_pair(fields[2]);
    rows.push_back(r);
  }
  return rows;
}

std::string intersections_csv(std::span<const IntersectionPoint> points,
                              std::optional<int> rounding) {
  std::string out = "q,p,residual1,residual2\n";
  for (const auto& pt : points) {
    out += format_double(pt.q, rounding);
    out += ',';
    out += format_double(pt.p, rounding);
    out += ',';
    out += format_double(pt.residual1, rounding);
    out += ',';
    out += format_double(pt.residual2, rounding);
    out += '\n';
  }
  return out;
}

std::vector<IntersectionRow> parse_intersections_csv(std::string_view text) {
  std::vector<IntersectionRow> rows;
  for (const auto& fields : parse_csv(text, "q,p,residual1,residual2")) {
    if (fields.size() != 4) throw argument_error("malformed intersection row");
    rows.push_back({parse_double(fields[0]), parse_double(fields[1]), parse_double(fields[2]),
                    parse_double(fields[3])});
  }
  return rows;
}

std::string roots_csv(std::span<const double> roots, const LevelPair& pair, double p0,
                      std::optional<int> rounding) {
  std::string out = "q,residual\n";
  for (double q : roots) {
    out += format_double(q, rounding);
    out += ',';
    out += format_double(detail::residual_raw(pair, q, p0), rounding);
    out += '\n';
  }
  return out;
}

nlohmann::json relation_json(const ConicRelation& relation) {
  nlohmann::json params;
  std::visit(
      [&](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, Parabola>) {
          params = {{"alpha", s.alpha}, {"beta", s.beta}, {"gamma", s.gamma}};
        } else if constexpr (std::is_same_v<S, Hyperbola>) {
          params = {{"a_t", s.a_t}, {"b_t", s.b_t}, {"c_t", s.c_t}, {"R", s.radius}};
        } else if constexpr (std::is_same_v<S, Ellipse>) {
          params = {{"mu", s.mu}, {"nu", s.nu}, {"rho", s.rho}, {"eps", s.eps}};
        } else {
          params = {{"alpha", s.alpha}, {"beta", s.beta}};
        }
      },
      relation.shape);

  nlohmann::json j;
  j["kind"] = relation.kind();
  j["params"] = params;
  if (relation.fit) {
    j["fit_spec"] = {{"q1", relation.fit->q1}, {"q2", relation.fit->q2}, {"p0", relation.fit->p0}};
  } else {
    j["fit_spec"] = nullptr;
  }
  return j;
}

ConicRelation relation_from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const auto& params = j.at("params");
  ConicRelation rel;
  if (kind == "parabola") {
    rel.shape = Parabola{params.at("alpha").get<double>(), params.at("beta").get<double>(),
                         params.at("gamma").get<double>()};
  } else if (kind == "hyperbola") {
    rel.shape = Hyperbola{params.at("a_t").get<double>(), params.at("b_t").get<double>(),
                          params.at("c_t").get<double>(), params.at("R").get<double>()};
  } else if (kind == "ellipse") {
    rel.shape = Ellipse{params.at("mu").get<double>(), params.at("nu").get<double>(),
                        params.at("rho").get<double>(), params.at("eps").get<double>()};
  } else if (kind == "line") {
    rel.shape = Line{params.at("alpha").get<double>(), params.at("beta").get<double>()};
  } else {
    throw argument_error("unknown relation kind '" + kind + "'");
  }
  if (j.contains("fit_spec") && !j.at("fit_spec").is_null()) {
    const auto& fs = j.at("fit_spec");
    rel.fit = FitSpec{fs.at("q1").get<double>(), fs.at("q2").get<double>(),
                      fs.at("p0").get<double>()};
  }
  return rel;
}

nlohmann::json spectrum_json(const SpectrumTable& table) {
  nlohmann::json j;
  j["p_value"] = table.p_value;
  j["relation"] = relation_json(table.relation);
  j["assignment"] = {{"threshold", table.assignment.threshold},
                     {"low", std::string(1, branch_char(table.assignment.low))},
                     {"high", std::string(1, branch_char(table.assignment.high))}};
  auto& entries = j["entries"] = nlohmann::json::array();
  for (const auto& r : table.entries) {
    entries.push_back({{"n", r.n},
                       {"E", r.energy},
                       {"q_used", r.q_used},
                       {"branch", std::string(1, branch_char(r.branch))}});
  }
  return j;
}

SpectrumTable spectrum_from_json(const nlohmann::json& j) {
  SpectrumTable table;
  table.p_value = j.at("p_value").get<double>();
  table.relation = relation_from_json(j.at("relation"));
  const auto& a = j.at("assignment");
  table.assignment.threshold = a.at("threshold").get<int>();
  table.assignment.low = branch_from_char(a.at("low").get<std::string>().at(0));
  table.assignment.high = branch_from_char(a.at("high").get<std::string>().at(0));
  for (const auto& e : j.at("entries")) {
    SpectrumRow r;
    r.n = e.at("n").get<int>();
    r.energy = e.at("E").get<double>();
    r.q_used = e.at("q_used").get<double>();
    r.branch = branch_from_char(e.at("branch").get<std::string>().at(0));
    table.entries.push_back(r);
  }
  return table;
}

nlohmann::json intersections_json(std::span<const IntersectionPoint> points) {
  auto arr = nlohmann::json::array();
  for (const auto& pt : points) {
    arr.push_back({{"q", pt.q},
                   {"p", pt.p},
                   {"pair1", pt.pair1.label()},
                   {"pair2", pt.pair2.label()},
                   {"residual1", pt.residual1},
                   {"residual2", pt.residual2}});
  }
  return arr;
}

nlohmann::json trace_json(std::span<const CurveTrace> traces) {
  auto arr = nlohmann::json::array();
  for (const auto& t : traces) {
    auto samples = nlohmann::json::array();
    for (const auto& s : t.samples) samples.push_back({{"q", s.q}, {"p", s.p}});
    arr.push_back({{"pair", t.pair.label()}, {"tolerance", t.tolerance}, {"samples", samples}});
  }
  return arr;
}

void atomic_write_file(const std::string& path, std::string_view content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace qpdeg::io
