#include "sgrover/spectra.hpp"

#include <algorithm>
#include <cmath>

#include "sgrover/errors.hpp"
#include "sgrover/orientation.hpp"

namespace sgrover {

namespace {

bool lex_less(std::complex<double> a, std::complex<double> b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

std::vector<std::pair<std::complex<double>, int>> cluster(
    const std::vector<std::complex<double>>& sorted, double tol) {
  std::vector<std::pair<std::complex<double>, int>> out;
  for (const auto& z : sorted) {
    if (!out.empty() && std::abs(z - out.back().first) < tol) {
      ++out.back().second;
    } else {
      out.emplace_back(z, 1);
    }
  }
  return out;
}

}  // namespace

std::vector<double> SpectrumReport::real_parts() const {
  std::vector<double> out;
  out.reserve(eigenvalues.size());
  for (const auto& z : eigenvalues) out.push_back(z.real());
  return out;
}

bool SpectrumReport::contains(std::complex<double> z, double tol) const {
  for (const auto& e : eigenvalues)
    if (std::abs(e - z) < tol) return true;
  return false;
}

SpectrumReport eig_hermitian(const Matrix& m, std::string basis_tag, double herm_tol,
                             double cluster_tol) {
  if (m.rows() != m.cols()) throw RangeError("eig_hermitian: matrix not square");
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() >= herm_tol)
    throw PreconditionError("eig_hermitian: matrix is not Hermitian within tolerance");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success) throw NumericError("eig_hermitian: eigensolver failed");
  SpectrumReport r;
  r.basis = std::move(basis_tag);
  r.cluster_tol = cluster_tol;
  for (int i = 0; i < m.rows(); ++i) r.eigenvalues.emplace_back(solver.eigenvalues()[i], 0.0);
  r.clusters = cluster(r.eigenvalues, cluster_tol);
  return r;
}

SpectrumReport eig_unitary(const Matrix& m, std::string basis_tag, double unit_tol,
                           double cluster_tol) {
  if (m.rows() != m.cols()) throw RangeError("eig_unitary: matrix not square");
  Matrix gram = m.adjoint() * m;
  gram -= Matrix::Identity(m.rows(), m.cols());
  if (gram.cwiseAbs().maxCoeff() >= unit_tol)
    throw PreconditionError("eig_unitary: matrix is not unitary within tolerance");
  Eigen::ComplexEigenSolver<Matrix> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw NumericError("eig_unitary: eigensolver failed");
  SpectrumReport r;
  r.basis = std::move(basis_tag);
  r.cluster_tol = cluster_tol;
  for (int i = 0; i < m.rows(); ++i) r.eigenvalues.push_back(solver.eigenvalues()[i]);
  std::sort(r.eigenvalues.begin(), r.eigenvalues.end(), lex_less);
  r.clusters = cluster(r.eigenvalues, cluster_tol);
  return r;
}

std::vector<double> real_spectrum(const Matrix& m) {
  return eig_hermitian(m).real_parts();
}

std::vector<std::complex<double>> lift_spectrum(const std::vector<double>& ts, double tol) {
  std::vector<std::complex<double>> out;
  for (double t : ts) {
    if (std::abs(t) > 1.0 + tol)
      throw RangeError("lift_spectrum: |t| > 1 beyond tolerance");
    double tc = std::clamp(t, -1.0, 1.0);
    double s = std::sqrt(std::max(0.0, 1.0 - tc * tc));
    if (s == 0.0) {
      out.emplace_back(tc, 0.0);
    } else {
      out.emplace_back(tc, s);
      out.emplace_back(tc, -s);
    }
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

bool multiset_close(std::vector<std::complex<double>> a, std::vector<std::complex<double>> b,
                    double tol) {
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end(), lex_less);
  std::sort(b.begin(), b.end(), lex_less);
  std::vector<char> used(b.size(), 0);
  for (const auto& x : a) {
    int best = -1;
    double best_d = tol;
    for (size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      double d = std::abs(x - b[j]);
      if (d < best_d) {
        best_d = d;
        best = static_cast<int>(j);
      }
    }
    if (best < 0) return false;
    used[best] = 1;
  }
  return true;
}

bool multiset_close_real(std::vector<double> a, std::vector<double> b, double tol) {
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) >= tol) return false;
  return true;
}

bool spec_equal_mod_zero(std::vector<double> a, std::vector<double> b, double tol) {
  auto strip = [tol](std::vector<double>& v) {
    std::erase_if(v, [tol](double x) { return std::abs(x) < tol; });
  };
  strip(a);
  strip(b);
  return multiset_close_real(std::move(a), std::move(b), tol);
}

LiftingReport check_lifting(const SimplicialComplex& c, int q, Mode mode, double tol) {
  Matrix d = discriminant_full(c, q, mode);
  EdgeOps ops = build_edge_ops(c, q, mode);
  SpectrumReport ds = eig_hermitian(d);
  SpectrumReport us = eig_unitary(ops.walk);

  LiftingReport rep;
  std::vector<char> used(us.eigenvalues.size(), 0);
  auto claim = [&](std::complex<double> z, int count) {
    int found = 0;
    for (size_t j = 0; j < us.eigenvalues.size() && found < count; ++j) {
      if (!used[j] && std::abs(us.eigenvalues[j] - z) < tol) {
        used[j] = 1;
        ++found;
      }
    }
    return found == count;
  };

  for (const auto& [t, mult] : ds.clusters) {
    double tr = t.real();
    if (std::abs(tr) >= 1.0 - tol) continue;  // +-1 handled with the residual
    double s = std::sqrt(1.0 - tr * tr);
    if (!claim({tr, s}, mult) || !claim({tr, -s}, mult)) rep.lifts_matched = false;
  }
  for (size_t j = 0; j < us.eigenvalues.size(); ++j) {
    const auto& z = us.eigenvalues[j];
    if (std::abs(z.imag()) > tol) {
      bool hit = false;
      for (const auto& [t, mult] : ds.clusters)
        if (std::abs(z.real() - t.real()) < tol) hit = true;
      if (!hit) rep.re_parts_matched = false;
    } else if (!used[j]) {
      if (std::abs(z.real() - 1.0) >= tol && std::abs(z.real() + 1.0) >= tol)
        rep.residual_pm1 = false;
    }
  }
  rep.plus_minus_i =
      us.contains({0.0, 1.0}, tol) && us.contains({0.0, -1.0}, tol);
  return rep;
}

OrientabilitySpectral orientability_spectral(const SimplicialComplex& c, double tol) {
  require_assumptions(c);
  const int n = c.dim();
  if (n < 1) throw RangeError("orientability_spectral: needs dimension >= 1");
  bool any_edge = false;
  for (int i = 0; i < c.count(n) && !any_edge; ++i)
    any_edge = !c.down_neighbors(n, i).empty();
  if (!any_edge)
    throw PreconditionError(
        "orientability_spectral: top down graph has no edges (single top cell)");
  std::vector<double> spec = real_spectrum(discriminant_reduced(c, n, Mode::Down));
  OrientabilitySpectral out;
  for (double t : spec) {
    if (std::abs(t + 1.0) < tol) out.coherent = true;
    if (std::abs(t - 1.0) < tol) out.anticoherent = true;
  }
  return out;
}

bool spectral_symmetry(const std::vector<double>& spectrum, double tol) {
  std::vector<double> neg(spectrum);
  for (double& x : neg) x = -x;
  return multiset_close_real(spectrum, std::move(neg), tol);
}

std::optional<std::vector<int>> find_antisymmetric_switching(const SimplicialComplex& c, int q) {
  auto bp = is_bipartite(c, q, Mode::Down, /*reduced=*/true);
  if (!bp) return std::nullopt;
  std::vector<int> theta(bp->color.size());
  for (size_t i = 0; i < theta.size(); ++i) theta[i] = bp->color[i] == 0 ? 1 : -1;
  return theta;
}

}  // namespace sgrover
