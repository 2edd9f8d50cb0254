#pragma once

#include <string>
#include <vector>

#include "sgrover/spectra.hpp"

namespace sgrover {

struct CheckResult {
  std::string name;
  bool pass = false;
  double value = 0.0;  // residual or distance backing the verdict
  std::string note;
};

struct CheckOptions {
  double tol_identity = tol::kIdentity;  // operator identity residuals
  double tol_cluster = tol::kCluster;    // eigenvalue matching
  double tol_walk = tol::kWalk;          // stationary-state residuals
  unsigned seed = 12345;                 // randomized switching suite
  int random_switchings = 100;
  bool unitary_spectra = true;  // run the full walk eigensolves (lifting)
};

/// Runs the full identity suite against one complex: construction
/// guarantees (unitarity, involutions, isometries), the invariance and
/// kernel statements for the discriminants, both algebraic forms of the
/// discriminants, the Laplacian relations, the ordered-walk reduction, the
/// no-(-1) bound, the +-i eigenvectors, the orientability equivalence, and
/// the switching laws. One result per check; skipped checks carry a note.
std::vector<CheckResult> run_identity_checks(const SimplicialComplex& c,
                                             const CheckOptions& opts = {});

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace sgrover
