#pragma once

#include <string>
#include <vector>

#include "sgrover/operators.hpp"
#include "sgrover/tolerances.hpp"

namespace sgrover {

enum class WalkSpaceKind { EdgeUp, EdgeDown, Ordered };

struct WalkState {
  WalkSpaceKind kind = WalkSpaceKind::EdgeUp;
  int q = -1;  // dimension of the carrying space
  Vector amp;
  int time = 0;
};

/// Applies the unitary `steps` times (repeated matrix-vector products).
WalkState evolve(const Matrix& u, WalkState state, int steps);

/// Finding probabilities per unoriented q-simplex F: squared amplitude over
/// all directed edges whose origin lies over F (both orientations).
Eigen::VectorXd probabilities_edge(const EdgeBasis& space, int simplex_count,
                                   const Vector& amp);

/// Finding probabilities per unoriented q-simplex F: squared amplitude over
/// all vertex orderings of F.
Eigen::VectorXd probabilities_ordered(const OrderedBasis& space, int simplex_count,
                                      const Vector& amp);

/// The symmetric unit vector with constant value 1/sqrt(2 |S_q|) on every
/// orientation of every q-simplex, as a value per unoriented simplex.
Eigen::VectorXd constant_plus(const SimplicialComplex& c, int q);

/// Extends a per-unoriented-simplex value symmetrically to the full oriented
/// basis (both orientations get the same value).
Vector extend_plus(const Eigen::VectorXd& f_plus);

/// Stationary edge state (1/sqrt(2))(I - i S) d^* f from a symmetric unit
/// vector f; an eigenvector of the walk with eigenvalue i. Throws
/// PreconditionError when f is not normalized or the residual exceeds
/// res_tol.
WalkState stationary_edge_state(const SimplicialComplex& c, int q, Mode mode,
                                const Eigen::VectorXd& f_plus, const EdgeOps& ops,
                                double res_tol = tol::kWalk);

/// Stationary ordered state in dimension q+1 built from a symmetric unit
/// vector in dimension q; an eigenvector of the ordered walk with
/// eigenvalue -1.
WalkState stationary_ordered_state(const SimplicialComplex& c, int q,
                                   const Eigen::VectorXd& f_plus, const GWalkOps& gops,
                                   double res_tol = tol::kWalk);

/// Stationary ordered state in dimension q from a sign-alternating unit
/// eigenvector of the up discriminant in dimension q-1 with eigenvalue 1
/// (coordinates over the default reduced basis); fixed by the ordered walk.
WalkState stationary_fpp1_state(const SimplicialComplex& c, int q,
                                const Eigen::VectorXd& f_reduced, const GWalkOps& gops,
                                double res_tol = tol::kWalk);

/// The matching edge state d^* f for the same eigenvector (eigenvalue 1 of
/// the up walk in dimension q-1).
WalkState stationary_fpp1_edge_state(const SimplicialComplex& c, int q,
                                     const Eigen::VectorXd& f_reduced, const EdgeOps& ops,
                                     double res_tol = tol::kWalk);

struct ProbabilityTable {
  std::vector<std::string> labels;  // unoriented simplices
  Eigen::MatrixXd rows;             // one row per time step 0..n_max

  double max_row_sum_error() const;
  double max_row_deviation() const;  // stationarity: max |row_n - row_0|
};

struct StationarityReport {
  ProbabilityTable table;           // the walk driving the report
  ProbabilityTable companion;       // second table when the identity pairs two walks
  double max_row_dev = 0.0;
  double identity_residual = 0.0;
  bool stationary = false;
  bool identity_ok = false;
};

/// Up-walk table from a symmetric initial vector plus the paired
/// ordered-walk table; checks the time-independence and the splitting
/// identity between them at every step.
StationarityReport stationarity_up(const SimplicialComplex& c, int q,
                                   const Eigen::VectorXd& f_plus, int n_max,
                                   double tol = tol::kWalk);

/// Down-walk table from a symmetric initial vector; checks stationarity and
/// the closed-form row values.
StationarityReport stationarity_down(const SimplicialComplex& c, int q,
                                     const Eigen::VectorXd& f_plus, int n_max,
                                     double tol = tol::kWalk);

/// Ordered-walk table in dimension q driven by an eigenvalue-1 eigenvector
/// of the up discriminant in dimension q-1; checks the boundary-sum
/// identity against the paired up walk.
StationarityReport stationarity_fpp1(const SimplicialComplex& c, int q,
                                     const Eigen::VectorXd& f_reduced, int n_max,
                                     double tol = tol::kWalk);

}  // namespace sgrover
