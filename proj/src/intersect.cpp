#include "qpdeg/intersect.hpp"

#include <algorithm>
#include <cmath>

namespace qpdeg {

namespace {

constexpr double kRootTol = 1e-13;      // q accuracy along the swept curve
constexpr double kPWidthTol = 1e-14;    // bisection resolution in p
constexpr double kMirrorEps = 1e-9;     // diagonal points are their own mirror
constexpr double kDedupeEps = 1e-8;

double nearest_root(const std::vector<double>& roots, double ref) {
  double best = roots.front();
  for (double r : roots) {
    if (std::abs(r - ref) < std::abs(best - ref)) best = r;
  }
  return best;
}

std::vector<IntersectionPoint> impl(const LevelPair& pair1, const LevelPair& pair2,
                                    const IntersectOptions& opt, bool parallel) {
  if (pair1 == pair2) throw argument_error("intersection needs two distinct level pairs");
  if (opt.p_samples < 2 || !(opt.p_lo > 0.0) || !(opt.p_hi <= 1.0) || !(opt.p_lo < opt.p_hi)) {
    throw argument_error("intersect sweep needs p_samples >= 2 and 0 < p_lo < p_hi <= 1");
  }
  if (!(opt.tol > 0.0)) throw argument_error("intersect needs tol > 0");

  const std::size_t n = opt.p_samples;
  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i) {
    grid[i] = opt.p_lo + (opt.p_hi - opt.p_lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }

  std::vector<std::vector<double>> roots(n);
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    roots[static_cast<std::size_t>(i)] = solve_q(pair1, grid[static_cast<std::size_t>(i)], kRootTol);
  }

  std::vector<std::pair<double, double>> found;  // (q, p)
  auto g_at = [&](double q, double p) { return detail::residual_raw(pair2, q, p); };

  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::size_t branches = std::min(roots[i].size(), roots[i + 1].size());
    for (std::size_t j = 0; j < branches; ++j) {
      const double q0 = roots[i][j];
      const double q1 = roots[i + 1][j];
      const double g0 = g_at(q0, grid[i]);
      const double g1 = g_at(q1, grid[i + 1]);
      if (g0 == 0.0) {
        found.emplace_back(q0, grid[i]);
        continue;
      }
      if (g1 == 0.0 || (g0 < 0.0) == (g1 < 0.0)) continue;

      double plo = grid[i], phi = grid[i + 1];
      double qref = q0;
      double glo = g0;
      while (phi - plo > kPWidthTol) {
        const double pm = 0.5 * (plo + phi);
        if (pm <= plo || pm >= phi) break;
        const auto rs = solve_q(pair1, pm, kRootTol);
        if (rs.empty()) break;  // branch vanished inside the bracket
        const double qm = nearest_root(rs, qref);
        const double gm = g_at(qm, pm);
        qref = qm;
        if (gm == 0.0) {
          plo = phi = pm;
          break;
        }
        if ((gm < 0.0) == (glo < 0.0)) {
          plo = pm;
          glo = gm;
        } else {
          phi = pm;
        }
      }
      const double pstar = 0.5 * (plo + phi);
      const auto rs = solve_q(pair1, pstar, kRootTol);
      if (!rs.empty()) found.emplace_back(nearest_root(rs, qref), pstar);
    }
  }

  // Mirror closure: the residuals are q<->p symmetric.
  const std::size_t direct = found.size();
  for (std::size_t i = 0; i < direct; ++i) {
    if (std::abs(found[i].first - found[i].second) > kMirrorEps) {
      found.emplace_back(found[i].second, found[i].first);
    }
  }

  std::sort(found.begin(), found.end());
  std::vector<IntersectionPoint> out;
  for (const auto& [q, p] : found) {
    if (!out.empty() && std::abs(out.back().q - q) < kDedupeEps &&
        std::abs(out.back().p - p) < kDedupeEps) {
      continue;
    }
    IntersectionPoint pt;
    pt.q = q;
    pt.p = p;
    pt.pair1 = pair1;
    pt.pair2 = pair2;
    pt.residual1 = detail::residual_raw(pair1, q, p);
    pt.residual2 = detail::residual_raw(pair2, q, p);
    if (std::abs(pt.residual1) > opt.tol || std::abs(pt.residual2) > opt.tol) continue;
    out.push_back(pt);
  }
  return out;
}

}  // namespace

std::vector<IntersectionPoint> intersect_curves(const LevelPair& pair1, const LevelPair& pair2,
                                                const IntersectOptions& options) {
  return impl(pair1, pair2, options, true);
}

std::vector<IntersectionPoint> intersect_curves(const LevelPair& pair1, const LevelPair& pair2,
                                                double tol) {
  IntersectOptions opt;
  opt.tol = tol;
  return impl(pair1, pair2, opt, true);
}

std::vector<IntersectionPoint> intersect_curves_serial(const LevelPair& pair1,
                                                       const LevelPair& pair2,
                                                       const IntersectOptions& options) {
  return impl(pair1, pair2, options, false);
}

}  // namespace qpdeg
