#ifndef QPDEG_CONICS_HPP
#define QPDEG_CONICS_HPP

#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "qpdeg/errors.hpp"

namespace qpdeg {

/// Branch of an inverted reduction relation; minus selects the smaller-q
/// root, plus the larger.
enum class Branch { minus, plus };

Branch opposite(Branch b);
char branch_char(Branch b);          // '-' or '+'
Branch branch_from_char(char c);

/// Two degeneracy points (q1,p0), (q2,p0) a reduction relation must pass
/// through, in addition to (1,1).
struct FitSpec {
  double q1 = 0.0;
  double q2 = 0.0;
  double p0 = 0.0;

  friend bool operator==(const FitSpec&, const FitSpec&) = default;
};

struct Parabola {
  double alpha = 0.0, beta = 0.0, gamma = 0.0;  // p = alpha (q - beta)^2 + gamma
};
struct Hyperbola {
  double a_t = 0.0, b_t = 0.0, c_t = 0.0;  // (p - a_t)^2 - b_t (q - c_t)^2 = R^2
  double radius = 1.0;
};
struct Ellipse {
  double mu = 0.0, nu = 0.0, rho = 0.0;  // (q - mu)^2 + eps (p - nu)^2 = rho^2
  double eps = 1.0;
};
struct Line {
  double alpha = 0.0, beta = 0.0;  // p = alpha q + beta
};

/// A reduction relation p = f(q) through (1,1), with the spec it was fitted
/// from when produced by one of the fit_* operations.
struct ConicRelation {
  std::variant<Parabola, Hyperbola, Ellipse, Line> shape;
  std::optional<FitSpec> fit;

  std::string kind() const;  // "parabola" | "hyperbola" | "ellipse" | "line"
};

/// Closed-form parabola through (q1,p0), (q2,p0), (1,1):
///   alpha = (1-p0)/((1-q1)(1-q2)),  beta = (q1+q2)/2,  gamma = 1 - alpha (1-beta)^2.
ConicRelation fit_parabola(const FitSpec& spec);

/// Hyperbola through the same three points. The symmetric fit points force
/// c_t = (q1+q2)/2; eliminating b_t leaves a quadratic in a_t, whose root
/// with b_t > 0 (nearest 0 if two qualify) is taken.
ConicRelation fit_hyperbola(const FitSpec& spec, double radius = 1.0);

/// Ellipse through the same three points at fixed eps > 0. mu = (q1+q2)/2;
/// the remaining system is linear in nu, so the solution is unique.
ConicRelation fit_ellipse(const FitSpec& spec, double eps);

/// Line through (q1,p1) and (1,1).
ConicRelation fit_line(double q1, double p1);

/// Solve the relation for q at the given p. Parabola: q = beta -+ sqrt((p-gamma)/alpha).
/// Line ignores the branch. Values within 1e-12 of q = 1 snap to 1 exactly
/// (every fitted relation passes through (1,1)).
double invert(const ConicRelation& relation, double p, Branch branch);

/// p = f(q) on the arc that passes through (1,1).
double evaluate(const ConicRelation& relation, double q);

/// Residual of the relation's defining equation at (q,p); 0 on the curve.
double shape_residual(const ConicRelation& relation, double q, double p);

/// Smallest admissible p of the inverted relation. Parabola: gamma (the
/// vertex). Hyperbola: the arc extreme a_t + R at q = c_t. Line: beta
/// clamped at 0. Ellipse: not applicable (its admissible p is a two-sided
/// interval; see ellipse_p_extremes).
double p_min(const ConicRelation& relation);

/// Diagnostic [nu - rho/sqrt(eps), nu + rho/sqrt(eps)]: the ellipse's
/// admissible p interval.
std::pair<double, double> ellipse_p_extremes(const Ellipse& e);

}  // namespace qpdeg

#endif
