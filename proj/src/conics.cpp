#include "qpdeg/conics.hpp"

#include <cmath>

namespace qpdeg {

namespace {

constexpr double kDegenerateTol = 1e-14;
constexpr double kOneSnapTol = 1e-12;

void check_spec(const FitSpec& s) {
  if (std::abs(1.0 - s.q1) < kDegenerateTol || std::abs(1.0 - s.q2) < kDegenerateTol) {
    throw fit_error("degenerate fit: a fit point coincides with q = 1");
  }
  if (std::abs(1.0 - s.p0) < kDegenerateTol) {
    throw fit_error("degenerate fit: p0 = 1 collapses the relation onto p = 1");
  }
  if (!(s.q1 > 0.0) || !(s.q2 < 1.0) || !(s.q1 < s.q2) || !(s.p0 > 0.0) || !(s.p0 < 1.0)) {
    throw argument_error("fit spec needs 0 < q1 < q2 < 1 and 0 < p0 < 1");
  }
}

double snap_to_one(double q) { return std::abs(q - 1.0) <= kOneSnapTol ? 1.0 : q; }

double signed_sqrt_branch(Branch b, double mag) { return b == Branch::minus ? -mag : mag; }

}  // namespace

Branch opposite(Branch b) { return b == Branch::minus ? Branch::plus : Branch::minus; }

char branch_char(Branch b) { return b == Branch::minus ? '-' : '+'; }

Branch branch_from_char(char c) {
  if (c == '-') return Branch::minus;
  if (c == '+') return Branch::plus;
  throw argument_error("branch must be '-' or '+'");
}

std::string ConicRelation::kind() const {
  switch (shape.index()) {
    case 0: return "parabola";
    case 1: return "hyperbola";
    case 2: return "ellipse";
    default: return "line";
  }
}

ConicRelation fit_parabola(const FitSpec& spec) {
  check_spec(spec);
  Parabola p;
  p.alpha = (1.0 - spec.p0) / ((1.0 - spec.q1) * (1.0 - spec.q2));
  p.beta = 0.5 * (spec.q1 + spec.q2);
  p.gamma = 1.0 - p.alpha * (1.0 - p.beta) * (1.0 - p.beta);
  return {p, spec};
}

ConicRelation fit_hyperbola(const FitSpec& spec, double radius) {
  check_spec(spec);
  if (!(radius > 0.0)) throw argument_error("hyperbola radius must be positive");
  const double c = 0.5 * (spec.q1 + spec.q2);
  const double d1sq = 0.25 * (spec.q2 - spec.q1) * (spec.q2 - spec.q1);
  const double d2sq = (1.0 - c) * (1.0 - c);
  const double t = d1sq / d2sq - 1.0;  // strictly negative since q2 < 1

  // (p0-a)^2 - (1-a)^2 = t ((1-a)^2 - R^2) collapses to a quadratic in a.
  const double A = t;
  const double B = 2.0 * (spec.p0 - 1.0) - 2.0 * t;
  const double C = t * (1.0 - radius * radius) - (spec.p0 * spec.p0 - 1.0);
  const double disc = B * B - 4.0 * A * C;
  if (disc < 0.0) throw fit_error("hyperbola fit has no real solution");
  const double sq = std::sqrt(disc);

  Hyperbola h;
  h.c_t = c;
  h.radius = radius;
  bool found = false;
  for (double a : {(-B + sq) / (2.0 * A), (-B - sq) / (2.0 * A)}) {
    const double one_minus = 1.0 - a;
    if (one_minus * one_minus <= radius * radius) continue;  // would need b_t <= 0
    if (!found || std::abs(a) < std::abs(h.a_t)) {
      h.a_t = a;
      found = true;
    }
  }
  if (!found) throw fit_error("hyperbola fit infeasible: no branch with b_t > 0");
  h.b_t = ((1.0 - h.a_t) * (1.0 - h.a_t) - radius * radius) / d2sq;
  return {h, spec};
}

ConicRelation fit_ellipse(const FitSpec& spec, double eps) {
  check_spec(spec);
  if (!(eps > 0.0)) throw argument_error("ellipse eps must be positive");
  Ellipse e;
  e.eps = eps;
  e.mu = 0.5 * (spec.q1 + spec.q2);
  const double d1sq = 0.25 * (spec.q2 - spec.q1) * (spec.q2 - spec.q1);
  const double d2sq = (1.0 - e.mu) * (1.0 - e.mu);
  // (p0-nu)^2 - (1-nu)^2 = (d2sq-d1sq)/eps is linear in nu, so the center is
  // unique. Only nu > 1 puts the fit points and (1,1) on one single-valued
  // lower arc; otherwise no relation p = f(q) of this shape exists.
  e.nu = 0.5 * (spec.p0 + 1.0) - (d2sq - d1sq) / (2.0 * eps * (spec.p0 - 1.0));
  if (!(e.nu > 1.0)) {
    throw fit_error("ellipse fit infeasible: center height nu = " + std::to_string(e.nu) +
                    " <= 1, the lower arc cannot reach (1,1)");
  }
  const double rhosq = d2sq + eps * (1.0 - e.nu) * (1.0 - e.nu);
  if (!(rhosq > 0.0)) throw fit_error("ellipse fit infeasible: rho^2 <= 0");
  e.rho = std::sqrt(rhosq);
  return {e, spec};
}

ConicRelation fit_line(double q1, double p1) {
  if (std::abs(1.0 - q1) < kDegenerateTol) throw fit_error("degenerate line fit: q1 = 1");
  if (!(q1 > 0.0) || !(q1 < 1.0)) throw argument_error("line fit needs 0 < q1 < 1");
  Line l;
  l.alpha = (p1 - 1.0) / (q1 - 1.0);
  l.beta = 1.0 - l.alpha;
  return {l, std::nullopt};
}

double invert(const ConicRelation& relation, double p, Branch branch) {
  return std::visit(
      [&](const auto& s) -> double {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, Parabola>) {
          const double disc = (p - s.gamma) / s.alpha;
          if (disc < 0.0) {
            throw domain_error("p below the parabola vertex: admissible p is [" +
                               std::to_string(s.gamma) + ", 1]");
          }
          return snap_to_one(s.beta + signed_sqrt_branch(branch, std::sqrt(disc)));
        } else if constexpr (std::is_same_v<S, Hyperbola>) {
          const double num = (p - s.a_t) * (p - s.a_t) - s.radius * s.radius;
          if (num < 0.0) {
            throw domain_error("p between the hyperbola vertices: admissible p is [" +
                               std::to_string(s.a_t + s.radius) + ", 1]");
          }
          return snap_to_one(s.c_t + signed_sqrt_branch(branch, std::sqrt(num / s.b_t)));
        } else if constexpr (std::is_same_v<S, Ellipse>) {
          const double disc = s.rho * s.rho - s.eps * (p - s.nu) * (p - s.nu);
          if (disc < 0.0) throw domain_error("p outside the ellipse's admissible interval");
          return snap_to_one(s.mu + signed_sqrt_branch(branch, std::sqrt(disc)));
        } else {
          if (std::abs(s.alpha) < kDegenerateTol) {
            throw domain_error("horizontal line: q is not determined by p");
          }
          return snap_to_one((p - s.beta) / s.alpha);
        }
      },
      relation.shape);
}

double evaluate(const ConicRelation& relation, double q) {
  return std::visit(
      [&](const auto& s) -> double {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, Parabola>) {
          return s.alpha * (q - s.beta) * (q - s.beta) + s.gamma;
        } else if constexpr (std::is_same_v<S, Hyperbola>) {
          const double mag = std::sqrt(s.radius * s.radius + s.b_t * (q - s.c_t) * (q - s.c_t));
          return s.a_t + (1.0 - s.a_t >= 0.0 ? mag : -mag);
        } else if constexpr (std::is_same_v<S, Ellipse>) {
          const double disc = s.rho * s.rho - (q - s.mu) * (q - s.mu);
          if (disc < 0.0) throw domain_error("q outside the ellipse's admissible interval");
          const double mag = std::sqrt(disc / s.eps);
          return s.nu + (1.0 - s.nu >= 0.0 ? mag : -mag);
        } else {
          return s.alpha * q + s.beta;
        }
      },
      relation.shape);
}

double shape_residual(const ConicRelation& relation, double q, double p) {
  return std::visit(
      [&](const auto& s) -> double {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, Parabola>) {
          return s.alpha * (q - s.beta) * (q - s.beta) + s.gamma - p;
        } else if constexpr (std::is_same_v<S, Hyperbola>) {
          return (p - s.a_t) * (p - s.a_t) - s.b_t * (q - s.c_t) * (q - s.c_t) -
                 s.radius * s.radius;
        } else if constexpr (std::is_same_v<S, Ellipse>) {
          return (q - s.mu) * (q - s.mu) + s.eps * (p - s.nu) * (p - s.nu) - s.rho * s.rho;
        } else {
          return s.alpha * q + s.beta - p;
        }
      },
      relation.shape);
}

double p_min(const ConicRelation& relation) {
  return std::visit(
      [&](const auto& s) -> double {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, Parabola>) {
          return s.gamma;
        } else if constexpr (std::is_same_v<S, Hyperbola>) {
          // ascending arc: the vertex bounds p from below; the descending
          // arc (center above 2) reaches every p > 0
          return 1.0 - s.a_t >= 0.0 ? s.a_t + s.radius : 0.0;
        } else if constexpr (std::is_same_v<S, Ellipse>) {
          throw not_applicable_error(
              "p_min is not defined for the elliptic relation; see ellipse_p_extremes");
        } else {
          return std::max(s.beta, 0.0);
        }
      },
      relation.shape);
}

std::pair<double, double> ellipse_p_extremes(const Ellipse& e) {
  const double half = e.rho / std::sqrt(e.eps);
  return {e.nu - half, e.nu + half};
}

}  // namespace qpdeg
