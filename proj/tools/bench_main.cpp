// Benchmark of the OpenMP grid kernels against their serial references.
// Outputs one line per kernel and verifies the parallel results match the
// serial ones exactly before timing is reported.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qpdeg/intersect.hpp"

namespace {

double now_seconds() {
#ifdef _OPENMP
  return omp_get_wtime();
#else
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
      .count();
#endif
}

template <class F>
double time_best_of(int reps, F&& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const double t0 = now_seconds();
    f();
    best = std::min(best, now_seconds() - t0);
  }
  return best;
}

bool same_trace(const qpdeg::CurveTrace& a, const qpdeg::CurveTrace& b) {
  if (a.samples.size() != b.samples.size()) return false;
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    if (a.samples[i].q != b.samples[i].q || a.samples[i].p != b.samples[i].p) return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t grid_n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 4096;
  const int reps = argc > 2 ? std::atoi(argv[2]) : 3;

#ifdef _OPENMP
  std::printf("openmp: %d threads\n", omp_get_max_threads());
#else
  std::printf("openmp: disabled at build time\n");
#endif

  const auto pair = qpdeg::LevelPair::make(1, 1);
  const auto grid = qpdeg::default_p_grid(grid_n, 0.01, 1.0);

  qpdeg::CurveTrace serial_trace, parallel_trace;
  const double ts = time_best_of(reps, [&] { serial_trace = qpdeg::trace_serial(pair, grid); });
  const double tp = time_best_of(reps, [&] { parallel_trace = qpdeg::trace(pair, grid); });
  if (!same_trace(serial_trace, parallel_trace)) {
    std::printf("FAIL trace kernels disagree\n");
    return 1;
  }
  std::printf("trace       grid=%zu  serial %.3fs  parallel %.3fs  speedup %.2fx  (%zu samples)\n",
              grid_n, ts, tp, ts / tp, parallel_trace.samples.size());

  qpdeg::IntersectOptions opt;
  opt.p_samples = grid_n;
  const auto p1 = qpdeg::LevelPair::make(0, 10);
  const auto p2 = qpdeg::LevelPair::make(2, 1);
  std::vector<qpdeg::IntersectionPoint> ser, par;
  const double is = time_best_of(reps, [&] { ser = qpdeg::intersect_curves_serial(p1, p2, opt); });
  const double ip = time_best_of(reps, [&] { par = qpdeg::intersect_curves(p1, p2, opt); });
  bool same = ser.size() == par.size();
  for (std::size_t i = 0; same && i < ser.size(); ++i) {
    same = ser[i].q == par[i].q && ser[i].p == par[i].p;
  }
  if (!same) {
    std::printf("FAIL intersect kernels disagree\n");
    return 1;
  }
  std::printf("intersect   grid=%zu  serial %.3fs  parallel %.3fs  speedup %.2fx  (%zu crossings)\n",
              grid_n, is, ip, is / ip, par.size());
  return 0;
}
