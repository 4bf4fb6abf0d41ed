#ifndef QPDEG_DEGENERACY_HPP
#define QPDEG_DEGENERACY_HPP

#include <span>
#include <string>
#include <vector>

#include "qpdeg/oscillator.hpp"

namespace qpdeg {

enum class Family { first, second };

/// A degeneracy specification E_{n+k} = E_n.
///
/// First family: n != 0, k >= 1. Second family: n = 0, k >= 2. The pair
/// (0,1) is rejected outright: E_1 - E_0 = (q+p)/2 > 0 everywhere.
struct LevelPair {
  int n = 1;
  int k = 1;
  Family family = Family::first;

  static LevelPair make(int n, int k);
  int upper() const { return n + k; }
  std::string label() const;  // "n:k"

  friend bool operator==(const LevelPair& a, const LevelPair& b) {
    return a.n == b.n && a.k == b.k;
  }
};

/// E_{n+k}(q,p) - E_n(q,p), power-sum form; symmetric under q <-> p.
double residual(const LevelPair& pair, const DeformationPoint& point);

namespace detail {
double residual_raw(const LevelPair& pair, double q, double p);
double residual_dq(const LevelPair& pair, double q, double p);

/// Coefficients c_r of residual = Horner(c, q) at fixed p (degree n+k).
std::vector<double> residual_poly_coeffs(const LevelPair& pair, double p);
double horner(std::span<const double> coeffs, double x);
double horner_derivative(std::span<const double> coeffs, double x);
}  // namespace detail

/// All roots q in (0,1) of residual(pair, (q, p0)) = 0, ascending.
///
/// Sign-change scan over (1e-6, 1-1e-6) at 2048 subdivisions, bisection to
/// tol, one Newton polish. Empty when the curve does not reach p0.
std::vector<double> solve_q(const LevelPair& pair, double p0, double tol = 1e-12);

/// q-axis endpoint of a second-family curve: the root in (0,1) of the
/// residual at p = 0, i.e. of q^k + q^(k-1) - 1. For k=2 this is (sqrt5-1)/2.
/// First-family curves end at (1,0) and (0,1) instead: not applicable.
double axis_endpoint(const LevelPair& pair);

/// Discretized degeneracy curve: all (q,p) roots over a p grid, sorted by p
/// (then q). Every sample satisfies |residual| < tolerance.
struct CurveTrace {
  LevelPair pair;
  std::vector<DeformationPoint> samples;
  double tolerance = 0.0;
};

/// 512 uniform p samples spanning [0.01, 1] by default.
std::vector<double> default_p_grid(std::size_t count = 512, double lo = 0.01, double hi = 1.0);

/// Grid points are independent; this entry point solves them in parallel
/// (OpenMP) with deterministic, grid-ordered output.
CurveTrace trace(const LevelPair& pair, std::span<const double> p_grid, double tol = 1e-12);

/// Serial reference for trace; kept for testing and benchmarking.
CurveTrace trace_serial(const LevelPair& pair, std::span<const double> p_grid, double tol = 1e-12);

}  // namespace qpdeg

#endif
