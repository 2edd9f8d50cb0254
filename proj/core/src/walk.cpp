#include "sgrover/walk.hpp"

#include <cmath>

#include "sgrover/errors.hpp"

namespace sgrover {

namespace {

const std::complex<double> kI{0.0, 1.0};

double factorial(int n) {
  double f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

std::vector<std::string> simplex_labels(const SimplicialComplex& c, int q) {
  std::vector<std::string> out;
  out.reserve(c.count(q));
  for (int i = 0; i < c.count(q); ++i) out.push_back(c.simplex_label(q, i));
  return out;
}

void check_unit(const Vector& v, const char* who) {
  if (std::abs(v.norm() - 1.0) > 1e-10)
    throw PreconditionError(std::string(who) + ": vector is not normalized");
}

void check_residual(double res, double tol, const char* who) {
  if (res > tol)
    throw PreconditionError(std::string(who) + ": eigenvector residual " + std::to_string(res));
}

/// f over the full oriented basis from reduced coordinates over the default
/// orientation (value v on the even representative, -v on the odd one).
Vector extend_minus(const Eigen::VectorXd& f_reduced) {
  Vector f(2 * f_reduced.size());
  for (int i = 0; i < f_reduced.size(); ++i) {
    f[2 * i] = f_reduced[i];
    f[2 * i + 1] = -f_reduced[i];
  }
  return f;
}

}  // namespace

WalkState evolve(const Matrix& u, WalkState state, int steps) {
  if (steps < 0) throw RangeError("evolve: negative step count");
  if (u.cols() != state.amp.size()) throw RangeError("evolve: space mismatch");
  for (int n = 0; n < steps; ++n) state.amp = u * state.amp;
  state.time += steps;
  return state;
}

Eigen::VectorXd probabilities_edge(const EdgeBasis& space, int simplex_count,
                                   const Vector& amp) {
  if (space.size() != amp.size()) throw RangeError("probabilities_edge: space mismatch");
  Eigen::VectorXd p = Eigen::VectorXd::Zero(simplex_count);
  for (int e = 0; e < space.size(); ++e)
    p[space.edges[e].first / 2] += std::norm(amp[e]);
  return p;
}

Eigen::VectorXd probabilities_ordered(const OrderedBasis& space, int simplex_count,
                                      const Vector& amp) {
  if (space.size() != amp.size()) throw RangeError("probabilities_ordered: space mismatch");
  Eigen::VectorXd p = Eigen::VectorXd::Zero(simplex_count);
  for (int s = 0; s < space.size(); ++s) p[space.simplex_of[s]] += std::norm(amp[s]);
  return p;
}

Eigen::VectorXd constant_plus(const SimplicialComplex& c, int q) {
  return Eigen::VectorXd::Constant(c.count(q), 1.0 / std::sqrt(2.0 * c.count(q)));
}

Vector extend_plus(const Eigen::VectorXd& f_plus) {
  Vector f(2 * f_plus.size());
  for (int i = 0; i < f_plus.size(); ++i) f[2 * i] = f[2 * i + 1] = f_plus[i];
  return f;
}

WalkState stationary_edge_state(const SimplicialComplex& c, int q, Mode mode,
                                const Eigen::VectorXd& f_plus, const EdgeOps& ops,
                                double res_tol) {
  if (f_plus.size() != c.count(q)) throw RangeError("stationary_edge_state: size mismatch");
  Vector f = extend_plus(f_plus);
  check_unit(f, "stationary_edge_state");
  Vector psi = (ops.d.adjoint() * f - kI * (ops.shift * (ops.d.adjoint() * f))) / std::sqrt(2.0);
  check_residual((ops.walk * psi - kI * psi).norm(), res_tol, "stationary_edge_state");
  return WalkState{mode == Mode::Up ? WalkSpaceKind::EdgeUp : WalkSpaceKind::EdgeDown, q, psi, 0};
}

WalkState stationary_ordered_state(const SimplicialComplex& c, int q,
                                   const Eigen::VectorXd& f_plus, const GWalkOps& gops,
                                   double res_tol) {
  if (gops.space_prev.q != q) throw RangeError("stationary_ordered_state: walk/f mismatch");
  if (f_plus.size() != c.count(q)) throw RangeError("stationary_ordered_state: size mismatch");
  const double scale = std::sqrt(2.0) / std::sqrt(factorial(q + 1));
  Vector g(gops.space_prev.size());
  for (int s = 0; s < gops.space_prev.size(); ++s)
    g[s] = scale * f_plus[gops.space_prev.simplex_of[s]];
  check_unit(g, "stationary_ordered_state");
  Vector h = gops.alpha * g;
  check_residual((gops.walk * h + h).norm(), res_tol, "stationary_ordered_state");
  return WalkState{WalkSpaceKind::Ordered, q + 1, h, 0};
}

WalkState stationary_fpp1_state(const SimplicialComplex& c, int q,
                                const Eigen::VectorXd& f_reduced, const GWalkOps& gops,
                                double res_tol) {
  if (gops.space.q != q) throw RangeError("stationary_fpp1_state: walk/f mismatch");
  if (f_reduced.size() != c.count(q - 1)) throw RangeError("stationary_fpp1_state: size mismatch");
  Matrix d_up = discriminant_reduced(c, q - 1, Mode::Up);
  if ((d_up * f_reduced - f_reduced.cast<std::complex<double>>()).norm() > 1e-10)
    throw PreconditionError("stationary_fpp1_state: f is not an eigenvalue-1 eigenvector");
  const double scale = std::sqrt(2.0) / std::sqrt(factorial(q));
  Vector r(gops.space_prev.size());
  for (int s = 0; s < gops.space_prev.size(); ++s) {
    int idx = gops.space_prev.simplex_of[s];
    int par = sort_parity(std::span<const VertexId>(gops.space_prev.tuples[s]));
    r[s] = scale * (par ? -f_reduced[idx] : f_reduced[idx]);
  }
  check_unit(r, "stationary_fpp1_state");
  Vector h = gops.alpha * r;
  check_residual((gops.walk * h - h).norm(), res_tol, "stationary_fpp1_state");
  return WalkState{WalkSpaceKind::Ordered, q, h, 0};
}

WalkState stationary_fpp1_edge_state(const SimplicialComplex& /*c*/, int q,
                                     const Eigen::VectorXd& f_reduced, const EdgeOps& ops,
                                     double res_tol) {
  if (ops.space.q != q - 1 || ops.space.mode != Mode::Up)
    throw RangeError("stationary_fpp1_edge_state: needs the up walk in dimension q-1");
  Vector f = extend_minus(f_reduced);
  check_unit(f, "stationary_fpp1_edge_state");
  Vector phi = ops.d.adjoint() * f;
  check_residual((ops.walk * phi - phi).norm(), res_tol, "stationary_fpp1_edge_state");
  return WalkState{WalkSpaceKind::EdgeUp, q - 1, phi, 0};
}

double ProbabilityTable::max_row_sum_error() const {
  double worst = 0.0;
  for (int n = 0; n < rows.rows(); ++n) worst = std::max(worst, std::abs(rows.row(n).sum() - 1.0));
  return worst;
}

double ProbabilityTable::max_row_deviation() const {
  double worst = 0.0;
  for (int n = 1; n < rows.rows(); ++n)
    worst = std::max(worst, (rows.row(n) - rows.row(0)).cwiseAbs().maxCoeff());
  return worst;
}

namespace {

ProbabilityTable edge_table(const SimplicialComplex& c, const EdgeOps& ops, WalkState state,
                            int n_max) {
  ProbabilityTable t;
  t.labels = simplex_labels(c, ops.space.q);
  t.rows.resize(n_max + 1, c.count(ops.space.q));
  for (int n = 0; n <= n_max; ++n) {
    t.rows.row(n) = probabilities_edge(ops.space, c.count(ops.space.q), state.amp);
    if (n < n_max) state = evolve(ops.walk, std::move(state), 1);
  }
  return t;
}

ProbabilityTable ordered_table(const SimplicialComplex& c, const GWalkOps& gops, WalkState state,
                               int n_max) {
  ProbabilityTable t;
  t.labels = simplex_labels(c, gops.space.q);
  t.rows.resize(n_max + 1, c.count(gops.space.q));
  for (int n = 0; n <= n_max; ++n) {
    t.rows.row(n) = probabilities_ordered(gops.space, c.count(gops.space.q), state.amp);
    if (n < n_max) state = evolve(gops.walk, std::move(state), 1);
  }
  return t;
}

}  // namespace

StationarityReport stationarity_up(const SimplicialComplex& c, int q,
                                   const Eigen::VectorXd& f_plus, int n_max, double tol) {
  EdgeOps ops = build_edge_ops(c, q, Mode::Up);
  GWalkOps gops = build_g_walk(c, q + 1);
  WalkState psi = stationary_edge_state(c, q, Mode::Up, f_plus, ops, tol);
  WalkState h = stationary_ordered_state(c, q, f_plus, gops, tol);

  StationarityReport rep;
  rep.table = edge_table(c, ops, psi, n_max);
  rep.companion = ordered_table(c, gops, h, n_max);
  rep.max_row_dev = std::max(rep.table.max_row_deviation(), rep.companion.max_row_deviation());
  rep.stationary = rep.max_row_dev < tol;

  // row split: the edge probability equals the cofacet average of the
  // ordered probabilities plus the symmetric remainder
  double worst = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    for (int i = 0; i < c.count(q); ++i) {
      double sum = 0.0;
      for (int cf : c.cofacets(q, i)) sum += rep.companion.rows(n, cf);
      double rhs = sum / (2.0 * (q + 1)) + (static_cast<double>(q) / (q + 1)) * f_plus[i] * f_plus[i];
      worst = std::max(worst, std::abs(rep.table.rows(n, i) - rhs));
    }
  }
  rep.identity_residual = worst;
  rep.identity_ok = worst < tol;
  return rep;
}

StationarityReport stationarity_down(const SimplicialComplex& c, int q,
                                     const Eigen::VectorXd& f_plus, int n_max, double tol) {
  EdgeOps ops = build_edge_ops(c, q, Mode::Down);
  WalkState eta_state = stationary_edge_state(c, q, Mode::Down, f_plus, ops, tol);

  StationarityReport rep;
  rep.table = edge_table(c, ops, eta_state, n_max);
  rep.max_row_dev = rep.table.max_row_deviation();
  rep.stationary = rep.max_row_dev < tol;

  double worst = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    for (int i = 0; i < c.count(q); ++i) {
      double rhs = f_plus[i] * f_plus[i];
      for (int j : c.down_neighbors(q, i))
        rhs += f_plus[j] * f_plus[j] / c.deg_down(q, j);
      worst = std::max(worst, std::abs(rep.table.rows(n, i) - rhs));
    }
  }
  rep.identity_residual = worst;
  rep.identity_ok = worst < tol;
  return rep;
}

StationarityReport stationarity_fpp1(const SimplicialComplex& c, int q,
                                     const Eigen::VectorXd& f_reduced, int n_max, double tol) {
  GWalkOps gops = build_g_walk(c, q);
  EdgeOps ops = build_edge_ops(c, q - 1, Mode::Up);
  WalkState h = stationary_fpp1_state(c, q, f_reduced, gops, tol);
  WalkState phi = stationary_fpp1_edge_state(c, q, f_reduced, ops, tol);

  StationarityReport rep;
  rep.table = ordered_table(c, gops, h, n_max);
  rep.companion = edge_table(c, ops, phi, n_max);
  rep.max_row_dev = std::max(rep.table.max_row_deviation(), rep.companion.max_row_deviation());
  rep.stationary = rep.max_row_dev < tol;

  // boundary sum: ordered probability at F against the up-degree-weighted
  // edge probabilities over the faces of F
  double worst = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    for (int fi = 0; fi < c.count(q); ++fi) {
      const auto& verts = c.simplices(q)[fi].verts;
      double rhs = 0.0;
      std::vector<VertexId> face;
      for (size_t drop = 0; drop < verts.size(); ++drop) {
        face.clear();
        for (size_t k = 0; k < verts.size(); ++k)
          if (k != drop) face.push_back(verts[k]);
        int ti = *c.index_of(q - 1, face);
        rhs += rep.companion.rows(n, ti) / c.deg_up(q - 1, ti);
      }
      worst = std::max(worst, std::abs(rep.table.rows(n, fi) - rhs));
    }
  }
  rep.identity_residual = worst;
  rep.identity_ok = worst < tol;
  return rep;
}

}  // namespace sgrover
