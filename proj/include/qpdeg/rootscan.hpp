#ifndef QPDEG_ROOTSCAN_HPP
#define QPDEG_ROOTSCAN_HPP

#include <cmath>
#include <vector>

namespace qpdeg::detail {

struct RootScanOptions {
  double lo = 1e-6;
  double hi = 1.0 - 1e-6;
  int subdivisions = 2048;
  double tol = 1e-12;
};

/// Bisection on a bracketing interval [a,b] with f(a)*f(b) <= 0.
template <class F>
double bisect_root(F&& f, double a, double b, double fa, double tol) {
  while (b - a > tol) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;  // interval at rounding resolution
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fa < 0.0) == (fm < 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

/// All roots found by a uniform sign-change scan, each refined by bisection
/// to width tol and polished with one guarded Newton step.
template <class F, class DF>
std::vector<double> scan_roots(F&& f, DF&& df, const RootScanOptions& opt) {
  std::vector<double> roots;
  const int n = opt.subdivisions;
  double x_prev = opt.lo;
  double f_prev = f(x_prev);
  for (int i = 1; i <= n; ++i) {
    const double x = opt.lo + (opt.hi - opt.lo) * i / n;
    const double fx = f(x);
    double root = std::nan("");
    if (f_prev == 0.0) {
      root = x_prev;
    } else if (fx != 0.0 && (f_prev < 0.0) != (fx < 0.0)) {
      root = bisect_root(f, x_prev, x, f_prev, opt.tol);
      const double d = df(root);
      if (d != 0.0 && std::isfinite(d)) {
        const double polished = root - f(root) / d;
        if (polished > x_prev && polished < x && std::abs(f(polished)) <= std::abs(f(root))) {
          root = polished;
        }
      }
    }
    if (!std::isnan(root)) {
      if (roots.empty() || root - roots.back() > 10.0 * opt.tol) roots.push_back(root);
    }
    x_prev = x;
    f_prev = fx;
  }
  if (f_prev == 0.0 && (roots.empty() || x_prev - roots.back() > 10.0 * opt.tol)) {
    roots.push_back(x_prev);
  }
  return roots;
}

}  // namespace qpdeg::detail

#endif
