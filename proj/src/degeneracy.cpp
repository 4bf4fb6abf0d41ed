#include "qpdeg/degeneracy.hpp"

#include <algorithm>
#include <cmath>

#include "qpdeg/rootscan.hpp"

namespace qpdeg {

namespace {
constexpr double kDomainEps = 1e-6;  // open-interval margin for q scans
}

LevelPair LevelPair::make(int n, int k) {
  if (n < 0 || k < 1) throw argument_error("level pair needs n >= 0 and k >= 1");
  if (n == 0 && k == 1) {
    throw excluded_pair_error("E_1 = E_0 has no solution: the pair (0,1) is excluded");
  }
  LevelPair pair;
  pair.n = n;
  pair.k = k;
  pair.family = (n == 0) ? Family::second : Family::first;
  return pair;
}

std::string LevelPair::label() const { return std::to_string(n) + ":" + std::to_string(k); }

namespace detail {

double residual_raw(const LevelPair& pair, double q, double p) {
  return energy_raw(pair.n + pair.k, q, p) - energy_raw(pair.n, q, p);
}

double residual_dq(const LevelPair& pair, double q, double p) {
  const int m = pair.upper();
  return 0.5 * (qp_bracket_dq(m + 1, q, p) + qp_bracket_dq(m, q, p) -
                qp_bracket_dq(pair.n + 1, q, p) - qp_bracket_dq(pair.n, q, p));
}

std::vector<double> residual_poly_coeffs(const LevelPair& pair, double p) {
  const int m = pair.upper();
  std::vector<double> c(static_cast<std::size_t>(m) + 1, 0.0);
  for (int r = 0; r <= m; ++r) c[r] += powi(p, m - r);
  for (int r = 0; r <= m - 1; ++r) c[r] += powi(p, m - 1 - r);
  for (int r = 0; r <= pair.n; ++r) c[r] -= powi(p, pair.n - r);
  for (int r = 0; r <= pair.n - 1; ++r) c[r] -= powi(p, pair.n - 1 - r);
  for (double& v : c) v *= 0.5;
  return c;
}

double horner(std::span<const double> coeffs, double x) {
  double acc = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

double horner_derivative(std::span<const double> coeffs, double x) {
  double acc = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 1;) acc = acc * x + coeffs[i] * static_cast<double>(i);
  return acc;
}

}  // namespace detail

double residual(const LevelPair& pair, const DeformationPoint& point) {
  return detail::residual_raw(pair, point.q, point.p);
}

namespace {

std::vector<double> solve_q_at(const LevelPair& pair, double p0, double tol) {
  const auto coeffs = detail::residual_poly_coeffs(pair, p0);
  auto f = [&](double q) { return detail::horner(coeffs, q); };
  auto df = [&](double q) { return detail::horner_derivative(coeffs, q); };
  detail::RootScanOptions opt;
  opt.lo = kDomainEps;
  opt.hi = 1.0 - kDomainEps;
  opt.subdivisions = 2048;
  opt.tol = tol;
  return detail::scan_roots(f, df, opt);
}

}  // namespace

std::vector<double> solve_q(const LevelPair& pair, double p0, double tol) {
  if (!(p0 > 0.0) || !(p0 <= 1.0)) throw argument_error("solve_q needs p0 in (0,1]");
  if (!(tol > 0.0)) throw argument_error("solve_q needs tol > 0");
  return solve_q_at(pair, p0, tol);
}

double axis_endpoint(const LevelPair& pair) {
  if (pair.family != Family::second) {
    throw not_applicable_error(
        "axis endpoints exist only for second-family curves; first-family curves end at (1,0) and (0,1)");
  }
  const auto roots = solve_q_at(pair, 0.0, 1e-13);
  if (roots.size() != 1) throw domain_error("axis endpoint root not isolated");
  return roots.front();
}

std::vector<double> default_p_grid(std::size_t count, double lo, double hi) {
  if (count < 2 || !(lo > 0.0) || !(hi <= 1.0) || !(lo < hi)) {
    throw argument_error("p grid needs count >= 2 and 0 < lo < hi <= 1");
  }
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) {
    grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  return grid;
}

namespace {

CurveTrace trace_impl(const LevelPair& pair, std::span<const double> p_grid, double tol,
                      bool parallel) {
  if (p_grid.empty()) throw argument_error("trace needs a non-empty p grid");
  if (!(tol > 0.0)) throw argument_error("trace needs tol > 0");
  for (double p : p_grid) {
    if (!(p > 0.0) || !(p <= 1.0)) throw argument_error("trace grid values must lie in (0,1]");
  }

  std::vector<std::vector<double>> roots(p_grid.size());
  const auto count = static_cast<std::ptrdiff_t>(p_grid.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    roots[static_cast<std::size_t>(i)] = solve_q_at(pair, p_grid[static_cast<std::size_t>(i)], tol);
  }

  CurveTrace out;
  out.pair = pair;
  out.tolerance = 10.0 * tol;  // verification bound for |residual| at samples
  for (std::size_t i = 0; i < p_grid.size(); ++i) {
    for (double q : roots[i]) out.samples.push_back(DeformationPoint(q, p_grid[i]));
  }
  std::stable_sort(out.samples.begin(), out.samples.end(),
                   [](const DeformationPoint& a, const DeformationPoint& b) {
                     return a.p < b.p || (a.p == b.p && a.q < b.q);
                   });
  return out;
}

}  // namespace

CurveTrace trace(const LevelPair& pair, std::span<const double> p_grid, double tol) {
  return trace_impl(pair, p_grid, tol, true);
}

CurveTrace trace_serial(const LevelPair& pair, std::span<const double> p_grid, double tol) {
  return trace_impl(pair, p_grid, tol, false);
}

}  // namespace qpdeg
