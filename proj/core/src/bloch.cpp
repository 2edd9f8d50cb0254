#include "sgrover/bloch.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sgrover/errors.hpp"
#include "sgrover/generators.hpp"
#include "sgrover/spectra.hpp"

namespace sgrover {

namespace {

using std::numbers::pi;
const std::complex<double> kI{0.0, 1.0};

Eigen::Matrix3cd omega_matrix() {
  Eigen::Matrix3cd w = Eigen::Matrix3cd::Zero();
  w(0, 2) = 1;
  w(1, 0) = 1;
  w(2, 1) = 1;
  return w;
}

std::vector<double> hermitian_eigs(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  std::vector<double> out(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + solver.eigenvalues().size());
  return out;
}

}  // namespace

Eigen::MatrixXcd symbol_d2(double theta) {
  std::complex<double> z = std::exp(kI * theta);
  Eigen::Matrix3cd omega = omega_matrix();
  Eigen::Matrix3cd upper = omega + (1.0 + std::conj(z)) * Eigen::Matrix3cd::Identity();
  Eigen::Matrix3cd lower = omega * omega + (1.0 + z) * Eigen::Matrix3cd::Identity();
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(6, 6);
  d.block<3, 3>(0, 3) = -upper / 3.0;
  d.block<3, 3>(3, 0) = -lower / 3.0;
  return d;
}

Eigen::MatrixXcd symbol_d1(double theta, int mu_index) {
  if (mu_index < 0 || mu_index > 2) throw RangeError("symbol_d1: mu_index in {0,1,2}");
  std::complex<double> z = std::exp(kI * theta);
  std::complex<double> mu = std::exp(kI * (2.0 * pi * mu_index / 3.0));
  std::complex<double> zi = std::conj(z);
  std::complex<double> mi = std::conj(mu);

  Eigen::MatrixXcd m(3, 3);
  m(0, 0) = -(mu * z + mi * zi);
  m(0, 1) = (1.0 - zi) * (1.0 - mi * zi);
  m(0, 2) = (1.0 - mi) * (1.0 - mi * zi);
  m(1, 0) = (1.0 - z) * (1.0 - mu * z);
  m(1, 1) = -(z + zi);
  m(1, 2) = (1.0 - mi) * (1.0 - z);
  m(2, 0) = (1.0 - mu) * (1.0 - mu * z);
  m(2, 1) = (1.0 - mu) * (1.0 - zi);
  m(2, 2) = -(mu + mi);
  return m / 10.0;
}

std::vector<double> d2_closed_form(double theta) {
  std::vector<double> out;
  auto push_pair = [&out](double v) {
    out.push_back(v);
    out.push_back(-v);
  };
  push_pair(std::sqrt(5.0 + 4.0 * std::cos(theta)) / 3.0);
  push_pair(std::sqrt(2.0 * std::max(0.0, 1.0 + std::cos(theta + pi / 3.0))) / 3.0);
  push_pair(std::sqrt(2.0 * std::max(0.0, 1.0 + std::cos(theta - pi / 3.0))) / 3.0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> d1_closed_form(double theta, int mu_index) {
  if (mu_index < 0 || mu_index > 2) throw RangeError("d1_closed_form: mu_index in {0,1,2}");
  double phi = 2.0 * pi * mu_index / 3.0;
  double moving =
      (2.0 * (1.0 - std::cos(theta + phi / 2.0) * std::cos(phi / 2.0)) - std::cos(phi)) / 5.0;
  std::vector<double> out{-0.2, -0.2, moving};
  std::sort(out.begin(), out.end());
  return out;
}

BandReport band(int dq, int samples, double flat_tol) {
  if (dq != 1 && dq != 2) throw RangeError("band: dq must be 1 or 2");
  if (samples < 8) throw RangeError("band: need at least 8 samples");

  BandReport rep;
  rep.dq = dq;
  const int ncurves = dq == 2 ? 6 : 9;
  rep.curves.resize(samples, ncurves);
  rep.thetas.resize(samples);

  double worst_dev = 0.0;
  for (int k = 0; k < samples; ++k) {
    double theta = 2.0 * pi * k / samples;
    rep.thetas[k] = theta;
    std::vector<double> eigs, closed;
    if (dq == 2) {
      eigs = hermitian_eigs(symbol_d2(theta));
      closed = d2_closed_form(theta);
    } else {
      for (int mu = 0; mu < 3; ++mu) {
        auto part = hermitian_eigs(symbol_d1(theta, mu));
        eigs.insert(eigs.end(), part.begin(), part.end());
        auto cpart = d1_closed_form(theta, mu);
        closed.insert(closed.end(), cpart.begin(), cpart.end());
      }
      std::sort(eigs.begin(), eigs.end());
      std::sort(closed.begin(), closed.end());
    }
    for (int j = 0; j < ncurves; ++j) {
      rep.curves(k, j) = eigs[j];
      worst_dev = std::max(worst_dev, std::abs(eigs[j] - closed[j]));
    }
  }
  rep.min = rep.curves.minCoeff();
  rep.max = rep.curves.maxCoeff();
  rep.closed_form_max_dev = worst_dev;

  // flat bands: values present at every sampled phase
  std::vector<double> candidates(rep.curves.row(0).data(),
                                 rep.curves.row(0).data() + ncurves);
  for (double v : candidates) {
    bool everywhere = true;
    for (int k = 0; k < samples && everywhere; ++k) {
      bool hit = false;
      for (int j = 0; j < ncurves; ++j)
        if (std::abs(rep.curves(k, j) - v) < flat_tol) hit = true;
      everywhere = hit;
    }
    if (everywhere) {
      bool dup = false;
      for (double f : rep.flat_bands)
        if (std::abs(f - v) < flat_tol) dup = true;
      if (!dup) rep.flat_bands.push_back(v);
    }
  }
  return rep;
}

bool finite_quotient_check(int dq, int N, double tol) {
  if (dq != 1 && dq != 2) throw RangeError("finite_quotient_check: dq must be 1 or 2");
  if (N < 3) throw RangeError("finite_quotient_check: N >= 3");

  SimplicialComplex c = make_cylinder3(N);
  std::vector<double> quotient = real_spectrum(discriminant_reduced(c, dq, Mode::Down));

  std::vector<double> symbol;
  for (int k = 0; k < N; ++k) {
    double theta = 2.0 * pi * k / N;
    if (dq == 2) {
      auto eigs = hermitian_eigs(symbol_d2(theta));
      symbol.insert(symbol.end(), eigs.begin(), eigs.end());
    } else {
      for (int mu = 0; mu < 3; ++mu) {
        auto eigs = hermitian_eigs(symbol_d1(theta, mu));
        symbol.insert(symbol.end(), eigs.begin(), eigs.end());
      }
    }
  }
  return multiset_close_real(std::move(quotient), std::move(symbol), tol);
}

}  // namespace sgrover
