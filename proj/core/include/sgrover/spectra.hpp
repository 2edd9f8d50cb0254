#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "sgrover/operators.hpp"
#include "sgrover/tolerances.hpp"

namespace sgrover {

struct SpectrumReport {
  std::vector<std::complex<double>> eigenvalues;  // sorted by (re, im)
  std::vector<std::pair<std::complex<double>, int>> clusters;
  double cluster_tol = tol::kCluster;
  std::string basis;

  int dimension() const { return static_cast<int>(eigenvalues.size()); }
  std::vector<double> real_parts() const;
  bool contains(std::complex<double> z, double tol = tol::kCluster) const;
};

/// Full eigenvalue multiset of a Hermitian matrix. Checks
/// ||M - M^*||_max < herm_tol first.
SpectrumReport eig_hermitian(const Matrix& m, std::string basis_tag = {},
                             double herm_tol = 1e-10, double cluster_tol = tol::kCluster);

/// Full eigenvalue multiset of a unitary matrix (general dense solve).
/// Checks ||M^* M - I||_max < unit_tol first.
SpectrumReport eig_unitary(const Matrix& m, std::string basis_tag = {},
                           double unit_tol = 1e-10, double cluster_tol = tol::kCluster);

/// Real spectrum of a Hermitian matrix, ascending.
std::vector<double> real_spectrum(const Matrix& m);

/// Spectral lifting t -> t +- i sqrt(1 - t^2); t = +-1 maps to a single
/// point. Values with |t| <= 1 + tol are clamped, beyond is an error.
std::vector<std::complex<double>> lift_spectrum(const std::vector<double>& ts,
                                                double tol = 1e-10);

/// Tolerance-aware multiset equality (greedy nearest matching).
bool multiset_close(std::vector<std::complex<double>> a, std::vector<std::complex<double>> b,
                    double tol);
bool multiset_close_real(std::vector<double> a, std::vector<double> b, double tol);

/// True when the multisets agree after removing all values within tol of 0.
bool spec_equal_mod_zero(std::vector<double> a, std::vector<double> b, double tol = tol::kCluster);

struct LiftingReport {
  bool lifts_matched = true;      // every |t|<1 eigenvalue lifts with multiplicity
  bool re_parts_matched = true;   // every non-real walk eigenvalue projects back
  bool residual_pm1 = true;       // leftover walk eigenvalues sit at +-1
  bool plus_minus_i = true;       // +-i present (symmetric part is in the kernel)
  bool pass() const { return lifts_matched && re_parts_matched && residual_pm1 && plus_minus_i; }
};

/// Verifies the discriminant-to-walk spectral correspondence in dimension q.
LiftingReport check_lifting(const SimplicialComplex& c, int q, Mode mode,
                            double tol = tol::kCluster);

struct OrientabilitySpectral {
  bool coherent = false;      // -1 in the top down-discriminant spectrum
  bool anticoherent = false;  // +1 present
};

/// Spectral orientability test on the top-dimensional down discriminant.
/// Throws PreconditionError when the top down graph has no edges (single
/// top cell): the walk is empty and the test is not applicable.
OrientabilitySpectral orientability_spectral(const SimplicialComplex& c,
                                             double tol = tol::kCluster);

/// True when the real multiset equals its negation within tol.
bool spectral_symmetry(const std::vector<double>& spectrum, double tol = tol::kCluster);

/// Antisymmetric switching from a bipartition of the reduced down graph:
/// +1 on one class, -1 on the other, so that conjugation negates the
/// discriminant entrywise. nullopt when the graph is not bipartite.
std::optional<std::vector<int>> find_antisymmetric_switching(const SimplicialComplex& c, int q);

}  // namespace sgrover
