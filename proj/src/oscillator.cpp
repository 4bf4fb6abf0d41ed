#include "qpdeg/oscillator.hpp"

#include <cmath>

namespace qpdeg {

namespace {

constexpr double kEqualRelTol = 1e-9;     // q=p switch for the quotient form
constexpr long long kPowerSumCap = 1 << 20;  // integer exponents beyond this use the quotient

void check_point(double q, double p) {
  if (!(q > 0.0) || !(q <= 1.0) || !(p > 0.0) || !(p <= 1.0) || std::isnan(q) || std::isnan(p)) {
    throw domain_error("deformation parameters must lie in (0,1]");
  }
}

}  // namespace

DeformationPoint::DeformationPoint(double q_, double p_) : q(q_), p(p_) { check_point(q, p); }

namespace detail {

double powi(double base, int exp) {
  double r = 1.0;
  double b = base;
  for (int e = exp; e > 0; e >>= 1) {
    if (e & 1) r *= b;
    b *= b;
  }
  return r;
}

double qp_bracket_raw(double x, double q, double p) {
  const double fl = std::floor(x);
  if (x == fl && x >= 0.0 && x <= static_cast<double>(kPowerSumCap)) {
    const int m = static_cast<int>(fl);
    double sum = 0.0;
    for (int r = 0; r < m; ++r) sum += powi(q, r) * powi(p, m - 1 - r);
    return sum;
  }
  const double scale = std::max(std::abs(q), std::abs(p));
  if (std::abs(q - p) <= kEqualRelTol * scale) {
    const double mid = 0.5 * (q + p);  // evaluate the limit symmetrically in q,p
    return x * std::pow(mid, x - 1.0);
  }
  return (std::pow(q, x) - std::pow(p, x)) / (q - p);
}

double energy_raw(double n, double q, double p) {
  return 0.5 * (qp_bracket_raw(n + 1.0, q, p) + qp_bracket_raw(n, q, p));
}

double qp_bracket_dq(int m, double q, double p) {
  double sum = 0.0;
  for (int r = 1; r < m; ++r) sum += r * powi(q, r - 1) * powi(p, m - 1 - r);
  return sum;
}

}  // namespace detail

double qp_bracket(double x, const DeformationPoint& point) {
  if (!(x >= 0.0)) throw argument_error("qp_bracket requires x >= 0");
  return detail::qp_bracket_raw(x, point.q, point.p);
}

double energy(double n, const DeformationPoint& point) {
  if (!(n >= 0.0)) throw argument_error("energy requires n >= 0");
  return detail::energy_raw(n, point.q, point.p);
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  Matrix out(dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int k = 0; k < dim_; ++k) {
      const double aik = (*this)(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < dim_; ++j) out(i, j) += aik * rhs(k, j);
    }
  }
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  Matrix out(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) out(i, j) = (*this)(i, j) - rhs(i, j);
  return out;
}

Matrix Matrix::scaled(double s) const {
  Matrix out(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) out(i, j) = (*this)(i, j) * s;
  return out;
}

Matrix Matrix::transposed() const {
  Matrix out(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

double Matrix::max_abs_interior() const {
  double m = 0.0;
  for (int i = 0; i + 1 < dim_; ++i)
    for (int j = 0; j + 1 < dim_; ++j) m = std::max(m, std::abs((*this)(i, j)));
  return m;
}

FockRep build_fock_rep(const DeformationPoint& point, int dim) {
  if (dim < 2) throw argument_error("Fock truncation needs dim >= 2");
  FockRep rep;
  rep.dim = dim;
  rep.point = point;
  rep.a = Matrix(dim);
  rep.n_op = Matrix(dim);
  for (int n = 1; n < dim; ++n) {
    rep.a(n - 1, n) = std::sqrt(detail::qp_bracket_raw(n, point.q, point.p));
  }
  rep.a_dag = rep.a.transposed();
  for (int n = 0; n < dim; ++n) rep.n_op(n, n) = n;
  return rep;
}

double AlgebraResiduals::max() const {
  double m = defining_q;
  for (double v : {defining_p, number_lower, number_raise, count, count_shift}) m = std::max(m, v);
  return m;
}

AlgebraResiduals verify_algebra(const FockRep& rep) {
  const int d = rep.dim;
  const double q = rep.point.q;
  const double p = rep.point.p;

  Matrix pow_p(d), pow_q(d), brN(d), brN1(d);
  for (int n = 0; n < d; ++n) {
    pow_p(n, n) = detail::powi(p, n);
    pow_q(n, n) = detail::powi(q, n);
    brN(n, n) = detail::qp_bracket_raw(n, q, p);
    brN1(n, n) = detail::qp_bracket_raw(n + 1, q, p);
  }

  const Matrix a_adag = rep.a * rep.a_dag;
  const Matrix adag_a = rep.a_dag * rep.a;
  const Matrix na = rep.n_op * rep.a;
  const Matrix an = rep.a * rep.n_op;
  const Matrix nad = rep.n_op * rep.a_dag;
  const Matrix adn = rep.a_dag * rep.n_op;

  AlgebraResiduals r;
  r.defining_q = (a_adag - adag_a.scaled(q) - pow_p).max_abs_interior();
  r.defining_p = (a_adag - adag_a.scaled(p) - pow_q).max_abs_interior();
  r.number_lower = ((na - an) - rep.a.scaled(-1.0)).max_abs_interior();
  r.number_raise = ((nad - adn) - rep.a_dag).max_abs_interior();
  r.count = (adag_a - brN).max_abs_interior();
  r.count_shift = (a_adag - brN1).max_abs_interior();
  return r;
}

}  // namespace qpdeg
