#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace sgrover {

/// Fiber matrix of the translation-invariant 2-down discriminant of the
/// triangulated infinite tube at phase theta: 6x6 Hermitian with the
/// off-diagonal blocks -(1/3)(Omega + (1+conj(z))I) and its adjoint, Omega
/// the cyclic 3-permutation, z = exp(i theta).
Eigen::MatrixXcd symbol_d2(double theta);

/// Fiber matrix of the 1-down discriminant on the isotypical component of
/// the cyclic 3-symmetry labeled by mu_index (mu = exp(2 pi i mu_index/3)):
/// 3x3 Hermitian scaled by 1/10. mu_index in {0, 1, 2}.
Eigen::MatrixXcd symbol_d1(double theta, int mu_index);

/// Closed-form eigenvalue families for the d2 symbol at theta:
/// +-(1/3)sqrt(5+4cos t), +-(sqrt2/3)sqrt(1+cos(t+pi/3)),
/// +-(sqrt2/3)sqrt(1+cos(t-pi/3)); returned ascending (6 values).
std::vector<double> d2_closed_form(double theta);

/// Closed-form eigenvalues of the d1 symbol at (theta, mu): the flat value
/// -1/5 twice plus (2(1-cos(t+phi/2)cos(phi/2))-cos phi)/5 with
/// phi = 2 pi mu_index / 3; ascending (3 values).
std::vector<double> d1_closed_form(double theta, int mu_index);

struct BandReport {
  int dq = 0;
  std::vector<double> thetas;
  Eigen::MatrixXd curves;      // one row per theta, eigenvalues ascending
  double min = 0.0, max = 0.0;
  double closed_form_max_dev = 0.0;
  std::vector<double> flat_bands;  // values attained at every sample
};

/// Samples the symbol eigenvalues at N equispaced phases and reports the
/// band extrema, flat bands and the largest deviation from the closed
/// forms. dq selects the 2-down (6 curves) or 1-down (9 curves) family.
BandReport band(int dq, int samples, double flat_tol = 1e-8);

/// Compares the reduced down-discriminant spectrum of the periodic
/// truncation of size N against the symbol eigenvalues over the N-th roots
/// of unity. dq as in band().
bool finite_quotient_check(int dq, int N, double tol = 1e-8);

}  // namespace sgrover
