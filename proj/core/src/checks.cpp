#include "sgrover/checks.hpp"

#include <cmath>
#include <random>

#include "sgrover/errors.hpp"
#include "sgrover/orientation.hpp"
#include "sgrover/walk.hpp"

namespace sgrover {

namespace {

const std::complex<double> kI{0.0, 1.0};

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

std::string qtag(int q, Mode mode) {
  return std::string(mode == Mode::Up ? "up" : "down") + " q=" + std::to_string(q);
}

bool has_edges(const SimplicialComplex& c, int q, Mode mode) {
  for (int i = 0; i < c.count(q); ++i) {
    const auto& nbrs = mode == Mode::Up ? c.up_neighbors(q, i) : c.down_neighbors(q, i);
    if (!nbrs.empty()) return true;
  }
  return false;
}

bool min_down_degree_positive(const SimplicialComplex& c, int q) {
  for (int i = 0; i < c.count(q); ++i)
    if (c.deg_down(q, i) == 0) return false;
  return true;
}

}  // namespace

bool all_pass(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

std::vector<CheckResult> run_identity_checks(const SimplicialComplex& c,
                                             const CheckOptions& opts) {
  require_assumptions(c);
  std::vector<CheckResult> out;
  const int dim = c.dim();
  auto add = [&out](std::string name, bool pass, double value, std::string note = {}) {
    out.push_back(CheckResult{std::move(name), pass, value, std::move(note)});
  };

  auto modes_for = [&](int q) {
    std::vector<Mode> modes;
    if (q <= dim - 1) modes.push_back(Mode::Up);
    if (q >= 1) modes.push_back(Mode::Down);
    return modes;
  };

  // --- construction guarantees and discriminant structure -----------------
  for (int q = 0; q <= dim; ++q) {
    for (Mode mode : modes_for(q)) {
      if (!has_edges(c, q, mode)) {
        add("edge-walk " + qtag(q, mode), true, 0.0, "skipped: empty edge set");
        continue;
      }
      EdgeOps ops = build_edge_ops(c, q, mode);
      const int ne = ops.space.size();
      double r_unitary = max_abs(ops.walk.adjoint() * ops.walk - Matrix::Identity(ne, ne));
      add("unitarity " + qtag(q, mode), r_unitary < opts.tol_identity, r_unitary);
      double r_shift = max_abs(ops.shift * ops.shift - Matrix::Identity(ne, ne));
      add("shift involution " + qtag(q, mode), r_shift == 0.0, r_shift);
      double r_iso = max_abs(ops.d * ops.d.adjoint() -
                             Matrix::Identity(ops.vertex_space.size(), ops.vertex_space.size()));
      add("edge isometry " + qtag(q, mode), r_iso < opts.tol_identity, r_iso);

      Matrix d_full = discriminant_full(c, q, mode);
      double r_two_routes = max_abs(d_full - ops.d * ops.shift * ops.d.adjoint());
      add("discriminant forms agree " + qtag(q, mode), r_two_routes < opts.tol_identity,
          r_two_routes);

      Matrix p_minus = projector_minus(c, q);
      double r_inv = max_abs(d_full - p_minus * d_full * p_minus);
      add("minus-space invariance " + qtag(q, mode), r_inv < opts.tol_identity, r_inv);
      double r_ker = max_abs(d_full * projector_plus(c, q));
      add("symmetric kernel " + qtag(q, mode), r_ker < opts.tol_identity, r_ker);

      // +-i eigenvectors built from the symmetric subspace
      Eigen::VectorXd f = constant_plus(c, q);
      Vector ff = extend_plus(f);
      Vector dsf = ops.d.adjoint() * ff;
      Vector psi_p = (dsf - kI * (ops.shift * dsf)) / std::sqrt(2.0);
      Vector psi_m = (dsf + kI * (ops.shift * dsf)) / std::sqrt(2.0);
      double r_i = std::max((ops.walk * psi_p - kI * psi_p).norm(),
                            (ops.walk * psi_m + kI * psi_m).norm());
      add("plus-minus-i eigenvectors " + qtag(q, mode), r_i < opts.tol_cluster, r_i);

      if (opts.unitary_spectra) {
        LiftingReport lift = check_lifting(c, q, mode, opts.tol_cluster);
        add("spectral lifting " + qtag(q, mode), lift.pass(), 0.0);
      }
    }
  }

  // --- ordered-space walks --------------------------------------------------
  for (int q = 1; q <= dim; ++q) {
    GWalkOps g = build_g_walk(c, q);
    const int n = g.space.size();
    double r_proj = max_abs(g.proj * g.proj - g.proj);
    add("antisymmetrizer idempotent q=" + std::to_string(q), r_proj < opts.tol_identity, r_proj);
    double r_iso = max_abs(g.alpha.adjoint() * g.alpha -
                           Matrix::Identity(g.space_prev.size(), g.space_prev.size()));
    add("ordered isometry q=" + std::to_string(q), r_iso < opts.tol_identity, r_iso);
    double r_unit = max_abs(g.walk.adjoint() * g.walk - Matrix::Identity(n, n));
    add("ordered unitarity q=" + std::to_string(q), r_unit < opts.tol_identity, r_unit);

    Matrix dg = g.alpha.adjoint() * g.shift * g.alpha;
    OrientedBasis red = reduced_oriented_basis(c, q - 1);
    Matrix j_minus = antisym_embedding(c, q - 1, red);
    Matrix m = j_minus.adjoint() * dg * j_minus;
    Matrix dup = discriminant_reduced(c, q - 1, Mode::Up);
    const double scale = 2.0 * q / (q + 1.0);
    Matrix id = Matrix::Identity(m.rows(), m.cols());
    double r_reduce = max_abs((id - m) - scale * (id - dup));
    add("ordered-walk reduction q=" + std::to_string(q), r_reduce < opts.tol_identity, r_reduce);

    if (q >= 2) {
      Matrix j_plus = sym_embedding(c, q - 1);
      double r_plus = max_abs(dg * j_plus + j_plus);
      add("ordered-walk symmetric part q=" + std::to_string(q), r_plus < opts.tol_identity,
          r_plus);
    }
  }

  // --- algebraic forms and Laplacian relations ------------------------------
  for (int q = 0; q <= dim - 1; ++q) {
    Matrix dup = discriminant_reduced(c, q, Mode::Up);
    Matrix a = a_op(c, q);
    Matrix id = Matrix::Identity(dup.rows(), dup.cols());
    double r_a = max_abs(dup - (a.adjoint() * a - id) / (q + 1.0));
    add("discriminant via scaled coboundary " + qtag(q, Mode::Up), r_a < opts.tol_identity, r_a);

    Matrix lap = laplacian_up(c, q);
    Eigen::VectorXd ax = inv_sqrt_deg(c, q, Mode::Up);
    Matrix scaled = ax.asDiagonal() * lap * ax.asDiagonal();
    double r_l = max_abs(dup - (scaled - id) / (q + 1.0));
    add("laplacian relation " + qtag(q, Mode::Up), r_l < opts.tol_identity, r_l);
  }
  for (int q = 1; q <= dim; ++q) {
    if (!min_down_degree_positive(c, q)) {
      add("discriminant via scaled coboundary " + qtag(q, Mode::Down), true, 0.0,
          "skipped: zero down degree");
      continue;
    }
    Matrix ddown = discriminant_reduced(c, q, Mode::Down);
    Matrix b = b_op(c, q - 1);
    Eigen::VectorXd ay = inv_sqrt_deg(c, q, Mode::Down);
    Matrix a2 = (ay.array() * ay.array()).matrix().asDiagonal();
    double r_b = max_abs(ddown - (b * b.adjoint() - (q + 1.0) * a2));
    add("discriminant via scaled coboundary " + qtag(q, Mode::Down), r_b < opts.tol_identity,
        r_b);

    Matrix lap = laplacian_down(c, q);
    Matrix id = Matrix::Identity(ddown.rows(), ddown.cols());
    Matrix rhs = ay.asDiagonal() * (lap - (q + 1.0) * id) * ay.asDiagonal();
    double r_l = max_abs(ddown - rhs);
    add("laplacian relation " + qtag(q, Mode::Down), r_l < opts.tol_identity, r_l);
  }
  for (int q = 0; q + 1 <= dim - 1; ++q) {
    Matrix d1 = coboundary(c, q);
    Matrix d2 = coboundary(c, q + 1);
    double r = max_abs(d2 * d1);
    add("coboundary squares to zero q=" + std::to_string(q), r < opts.tol_identity, r);
  }

  // --- no eigenvalue -1 for the up discriminants, q >= 1 --------------------
  for (int q = 1; q <= dim - 1; ++q) {
    std::vector<double> spec = real_spectrum(discriminant_reduced(c, q, Mode::Up));
    double dist = 2.0;
    for (double t : spec) dist = std::min(dist, std::abs(t + 1.0));
    add("no -1 eigenvalue " + qtag(q, Mode::Up), dist > opts.tol_cluster, dist);
  }

  // --- regular-degree spectral comparison ------------------------------------
  for (int q = 0; q + 1 <= dim; ++q) {
    int L = c.deg_up(q, 0);
    bool regular = L > 0;
    for (int i = 0; i < c.count(q); ++i) regular = regular && c.deg_up(q, i) == L;
    if (!regular) continue;
    Matrix up = discriminant_reduced(c, q, Mode::Up);
    Matrix down = discriminant_reduced(c, q + 1, Mode::Down);
    Matrix idu = Matrix::Identity(up.rows(), up.cols());
    Matrix idd = Matrix::Identity(down.rows(), down.cols());
    std::vector<double> lhs =
        real_spectrum((q + 2.0) * idd + (L - 1.0) * (q + 2.0) * down);
    std::vector<double> rhs = real_spectrum(L * idu + L * (q + 1.0) * up);
    bool ok = spec_equal_mod_zero(lhs, rhs, opts.tol_cluster);
    add("degree-regular spectra mod zero q=" + std::to_string(q), ok, 0.0,
        "L=" + std::to_string(L));
  }

  // --- orientability: spectral against combinatorial -------------------------
  if (dim >= 1 && has_edges(c, dim, Mode::Down)) {
    OrientabilitySpectral spec = orientability_spectral(c, opts.tol_cluster);
    bool comb_coherent = orientation_search(c, OrientationTarget::Coherent).has_value();
    bool comb_anti = orientation_search(c, OrientationTarget::Anticoherent).has_value();
    add("orientability coherent", spec.coherent == comb_coherent, 0.0,
        spec.coherent ? "coherent" : "not coherent");
    add("orientability anticoherent", spec.anticoherent == comb_anti, 0.0,
        spec.anticoherent ? "anticoherent" : "not anticoherent");
  } else if (dim >= 1) {
    add("orientability coherent", true, 0.0, "skipped: top down graph has no edges");
  }

  // --- switching laws ---------------------------------------------------------
  std::mt19937 rng(opts.seed);
  for (int q = 1; q <= dim; ++q) {
    if (!has_edges(c, q, Mode::Down)) continue;
    Matrix d = discriminant_reduced(c, q, Mode::Down);
    std::vector<double> base = real_spectrum(d);
    bool ok = true;
    std::bernoulli_distribution coin(0.5);
    for (int trial = 0; trial < opts.random_switchings && ok; ++trial) {
      std::vector<int> theta(d.rows());
      for (auto& t : theta) t = coin(rng) ? 1 : -1;
      ok = multiset_close_real(base, real_spectrum(apply_switching(d, theta)),
                               opts.tol_cluster);
    }
    add("switching invariance " + qtag(q, Mode::Down), ok, 0.0,
        std::to_string(opts.random_switchings) + " random switchings");

    auto theta = find_antisymmetric_switching(c, q);
    if (theta) {
      double r = max_abs(apply_switching(d, *theta) + d);
      add("antisymmetric switching " + qtag(q, Mode::Down), r == 0.0, r, "bipartite");
      bool sym = spectral_symmetry(base, opts.tol_cluster);
      add("spectral symmetry " + qtag(q, Mode::Down), sym, 0.0);
    }
  }

  return out;
}

}  // namespace sgrover
