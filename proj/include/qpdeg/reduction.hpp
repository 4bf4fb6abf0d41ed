#ifndef QPDEG_REDUCTION_HPP
#define QPDEG_REDUCTION_HPP

#include <string_view>
#include <utility>
#include <vector>

#include "qpdeg/conics.hpp"
#include "qpdeg/degeneracy.hpp"

namespace qpdeg {

/// Piecewise branch rule: levels n < threshold use low, levels n >= threshold
/// use high. Line relations ignore the signs entirely.
struct BranchAssignment {
  int threshold = 0;
  Branch low = Branch::minus;
  Branch high = Branch::plus;

  Branch at(int n) const { return n < threshold ? low : high; }

  friend bool operator==(const BranchAssignment&, const BranchAssignment&) = default;
};

struct SpectrumRow {
  int n = 0;
  double energy = 0.0;
  double q_used = 0.0;
  Branch branch = Branch::plus;

  friend bool operator==(const SpectrumRow&, const SpectrumRow&) = default;
};

/// One-parameter spectrum of the reduced oscillator at a fixed p.
struct SpectrumTable {
  double p_value = 1.0;
  std::vector<SpectrumRow> entries;
  ConicRelation relation;
  BranchAssignment assignment;
};

/// E(n) = energy(n, (invert(relation, p, branch(n)), p)) for n = 0..n_max.
///
/// A horizontal line (p = const) cannot be inverted; there the parameter is
/// read as q instead and p is pinned to the line's constant.
SpectrumTable reduced_spectrum(const ConicRelation& relation, const BranchAssignment& assignment,
                               double p, int n_max);

/// Well-known one-parameter reductions. td: p = q. ak: p = 1.
/// linear_a / linear_b: the lines through (1,1) and the two crossing points
/// of the curves E_10 = E_0 and E_3 = E_2.
enum class Preset { td, ak, linear_a, linear_b };

Preset preset_from_name(std::string_view name);
std::pair<ConicRelation, BranchAssignment> preset(Preset which);

/// All unordered level pairs (i,j), i < j, with |E_i - E_j| < tol, sorted.
std::vector<std::pair<int, int>> degeneracy_report(const SpectrumTable& table, double tol);

/// A degeneracy pair together with its solved curve root at the fit p0.
struct EngineeredPair {
  LevelPair pair;
  double q_root = 0.0;
};

/// Branch assignment realizing both degeneracies of a two-pair fit: the pair
/// with the lower levels takes the branch of its own root below the
/// threshold n* = (its upper level) + 1, the other pair's root serves the
/// levels from n* up.
BranchAssignment default_assignment(const EngineeredPair& a, const EngineeredPair& b);

/// Full plan for a two-pair engineered reduction at p0: solved roots,
/// FitSpec (roots in ascending order), and the default branch assignment.
struct ReductionPlan {
  FitSpec spec;
  EngineeredPair low;   // pair whose levels sit below the threshold
  EngineeredPair high;
  BranchAssignment assignment;
};

ReductionPlan plan_reduction(const LevelPair& a, const LevelPair& b, double p0,
                             double tol = 1e-12);

}  // namespace qpdeg

#endif
