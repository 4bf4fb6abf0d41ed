#ifndef QPDEG_INTERSECT_HPP
#define QPDEG_INTERSECT_HPP

#include <vector>

#include "qpdeg/degeneracy.hpp"

namespace qpdeg {

/// A point of the (q,p) square lying on two degeneracy curves at once.
struct IntersectionPoint {
  double q = 0.0;
  double p = 0.0;
  LevelPair pair1;
  LevelPair pair2;
  double residual1 = 0.0;
  double residual2 = 0.0;
};

struct IntersectOptions {
  std::size_t p_samples = 4096;
  double p_lo = 0.02;
  double p_hi = 0.999;
  double tol = 1e-10;
};

/// All interior intersections of two degeneracy curves, ordered by q.
///
/// Sweeps p, follows each q-root branch of curve 1 and brackets sign changes
/// of curve 2's residual along it, then bisects in p. The q<->p mirror of
/// every crossing is appended when distinct; an empty result means no
/// crossing at the sweep resolution.
std::vector<IntersectionPoint> intersect_curves(const LevelPair& pair1, const LevelPair& pair2,
                                                const IntersectOptions& options);
std::vector<IntersectionPoint> intersect_curves(const LevelPair& pair1, const LevelPair& pair2,
                                                double tol = 1e-10);

/// Serial reference for intersect_curves; kept for testing and benchmarking.
std::vector<IntersectionPoint> intersect_curves_serial(const LevelPair& pair1,
                                                       const LevelPair& pair2,
                                                       const IntersectOptions& options);

}  // namespace qpdeg

#endif
