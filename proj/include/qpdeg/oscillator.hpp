#ifndef QPDEG_OSCILLATOR_HPP
#define QPDEG_OSCILLATOR_HPP

#include <vector>

#include "qpdeg/errors.hpp"

namespace qpdeg {

/// A pair of real deformation parameters, both restricted to (0,1].
struct DeformationPoint {
  double q = 1.0;
  double p = 1.0;

  DeformationPoint() = default;
  DeformationPoint(double q_, double p_);

  DeformationPoint swapped() const { return {p, q}; }
};

/// The structure function [[x]] = (q^x - p^x)/(q - p).
///
/// Integer x is evaluated through the cancellation-free power sum
/// sum_{r<x} q^r p^(x-1-r); non-integer x uses the quotient form, switching
/// to the q=p limit x*q^(x-1) when |q-p| falls below a relative 1e-9.
double qp_bracket(double x, const DeformationPoint& point);

/// Energy of level n: (1/2)([[n+1]] + [[n]]), with hbar*omega = 1.
/// n may be real (curve plotting); only integer n is a physical level.
double energy(double n, const DeformationPoint& point);

namespace detail {

// Unchecked cores. p (or q) may be 0 here; the degeneracy-curve axis
// endpoints live on the closure of the domain.
double qp_bracket_raw(double x, double q, double p);
double energy_raw(double n, double q, double p);

// d[[m]]/dq for integer m >= 0, power-sum form.
double qp_bracket_dq(int m, double q, double p);

double powi(double base, int exp);

}  // namespace detail

/// Minimal dense square matrix for the truncated Fock representation.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int dim) : dim_(dim), v_(static_cast<std::size_t>(dim) * dim, 0.0) {}

  int dim() const { return dim_; }
  double& operator()(int r, int c) { return v_[static_cast<std::size_t>(r) * dim_ + c]; }
  double operator()(int r, int c) const { return v_[static_cast<std::size_t>(r) * dim_ + c]; }

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(double s) const;
  Matrix transposed() const;

  /// Largest |entry|, skipping the last row and column (truncation boundary).
  double max_abs_interior() const;

 private:
  int dim_ = 0;
  std::vector<double> v_;
};

/// Truncated Fock-space representation of the deformed ladder algebra.
///
/// a has sqrt([[n]]) on the first superdiagonal, a_dag is its transpose and
/// n_op is diag(0..dim-1).
struct FockRep {
  int dim = 0;
  Matrix a;
  Matrix a_dag;
  Matrix n_op;
  DeformationPoint point;
};

FockRep build_fock_rep(const DeformationPoint& point, int dim);

/// Max-norm residuals of the defining relations, truncation boundary masked.
struct AlgebraResiduals {
  double defining_q = 0.0;   // a a+ - q a+ a - p^N
  double defining_p = 0.0;   // a a+ - p a+ a - q^N
  double number_lower = 0.0; // [N,a] + a
  double number_raise = 0.0; // [N,a+] - a+
  double count = 0.0;        // a+ a - [[N]]
  double count_shift = 0.0;  // a a+ - [[N+1]]

  double max() const;
};

AlgebraResiduals verify_algebra(const FockRep& rep);

}  // namespace qpdeg

#endif
