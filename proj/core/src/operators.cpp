#include "sgrover/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sgrover/errors.hpp"

namespace sgrover {

namespace {

double factorial(int n) {
  double f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

/// Weight 1/sqrt(2(q+1)deg_X) resp. 1/sqrt(2 deg_Y) per unoriented simplex.
Eigen::VectorXd edge_weights(const SimplicialComplex& c, int q, Mode mode) {
  Eigen::VectorXd w(c.count(q));
  for (int i = 0; i < c.count(q); ++i) {
    double deg = mode == Mode::Up ? 2.0 * (q + 1) * c.deg_up(q, i) : 2.0 * c.deg_down(q, i);
    w[i] = deg > 0 ? 1.0 / std::sqrt(deg) : 0.0;
  }
  return w;
}

int eta_by_index(const SimplicialComplex& c, int q, Mode mode, const OrientedSimplex& t1,
                 const OrientedSimplex& t2) {
  (void)q;
  return eta(c, t1, t2, mode);
}

}  // namespace

Matrix build_alpha(const SimplicialComplex& c, int q) {
  require_assumptions(c);
  if (q < 1 || q > c.dim()) throw RangeError("build_alpha: need 1 <= q <= dim");
  OrderedBasis rows = ordered_basis(c, q);
  OrderedBasis cols = ordered_basis(c, q - 1);
  Matrix a = Matrix::Zero(rows.size(), cols.size());
  for (int s = 0; s < rows.size(); ++s) {
    std::span<const VertexId> tuple(rows.tuples[s]);
    auto prefix = tuple.first(tuple.size() - 1);
    int t = cols.index(prefix);
    std::vector<VertexId> sorted(prefix.begin(), prefix.end());
    std::sort(sorted.begin(), sorted.end());
    int deg = c.deg_up(q - 1, *c.index_of(q - 1, sorted));
    a(s, t) = 1.0 / std::sqrt(static_cast<double>(deg));
  }
  return a;
}

GWalkOps build_g_walk(const SimplicialComplex& c, int q) {
  require_assumptions(c);
  if (q < 1 || q > c.dim()) throw RangeError("build_g_walk: need 1 <= q <= dim");
  GWalkOps ops;
  ops.space = ordered_basis(c, q);
  ops.space_prev = ordered_basis(c, q - 1);
  ops.alpha = build_alpha(c, q);

  const int n = ops.space.size();
  const double fact = factorial(q + 1);
  ops.proj = Matrix::Zero(n, n);
  std::vector<int> perm(q + 1);
  for (int s = 0; s < n; ++s) {
    const auto& tuple = ops.space.tuples[s];
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<VertexId> image(q + 1);
    do {
      for (int k = 0; k <= q; ++k) image[k] = tuple[perm[k]];
      int j = ops.space.index(image);
      double sign = sort_parity(std::span<const int>(perm)) ? -1.0 : 1.0;
      ops.proj(s, j) += sign / fact;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  ops.shift = 2.0 * ops.proj - Matrix::Identity(n, n);
  ops.coin = 2.0 * (ops.alpha * ops.alpha.adjoint()) - Matrix::Identity(n, n);
  ops.walk = ops.shift * ops.coin;
  return ops;
}

Matrix discriminant_g(const SimplicialComplex& c, int q) {
  GWalkOps ops = build_g_walk(c, q);
  return ops.alpha.adjoint() * ops.shift * ops.alpha;
}

EdgeOps build_edge_ops(const SimplicialComplex& c, int q, Mode mode) {
  require_assumptions(c);
  EdgeOps ops;
  ops.space = edge_basis(c, q, mode);
  ops.vertex_space = full_oriented_basis(c, q);
  if (ops.space.edges.empty()) throw RangeError("build_edge_ops: empty edge set");

  const int ne = ops.space.size();
  const int nv = ops.vertex_space.size();
  Eigen::VectorXd w = edge_weights(c, q, mode);

  ops.d = Matrix::Zero(nv, ne);
  for (int e = 0; e < ne; ++e) {
    int from = ops.space.edges[e].first;
    ops.d(from, e) = w[from / 2];
  }

  ops.shift = Matrix::Zero(ne, ne);
  for (int e = 0; e < ne; ++e) {
    auto [i, j] = ops.space.edges[e];
    int rev = ops.space.index(j, i);
    int sign = eta_by_index(c, q, mode, ops.vertex_space.elems[i], ops.vertex_space.elems[j]);
    // (S g)(t1, t2) = eta(t1, t2) g(t2, t1)
    ops.shift(e, rev) = sign;
  }

  ops.coin = 2.0 * (ops.d.adjoint() * ops.d) - Matrix::Identity(ne, ne);
  ops.walk = ops.shift * ops.coin;
  return ops;
}

Matrix discriminant_full(const SimplicialComplex& c, int q, Mode mode) {
  require_assumptions(c);
  if (mode == Mode::Up && (q < 0 || q > c.dim() - 1))
    throw RangeError("discriminant_full: up mode needs 0 <= q <= dim-1");
  if (mode == Mode::Down && (q < 1 || q > c.dim()))
    throw RangeError("discriminant_full: down mode needs 1 <= q <= dim");

  OrientedBasis full = full_oriented_basis(c, q);
  Eigen::VectorXd w = edge_weights(c, q, mode);
  Matrix d = Matrix::Zero(full.size(), full.size());
  for (int i = 0; i < c.count(q); ++i) {
    const auto& nbrs = mode == Mode::Up ? c.up_neighbors(q, i) : c.down_neighbors(q, i);
    for (int j : nbrs) {
      for (int p = 0; p < 2; ++p) {
        for (int r = 0; r < 2; ++r) {
          int a = 2 * i + p, b = 2 * j + r;
          int sign = eta_by_index(c, q, mode, full.elems[a], full.elems[b]);
          d(a, b) = sign * w[i] * w[j];
        }
      }
    }
  }
  return d;
}

Matrix discriminant_reduced(const SimplicialComplex& c, int q, Mode mode) {
  return discriminant_reduced(c, q, mode, reduced_oriented_basis(c, q));
}

Matrix discriminant_reduced(const SimplicialComplex& c, int q, Mode mode,
                            const OrientedBasis& basis) {
  require_assumptions(c);
  if (mode == Mode::Up && (q < 0 || q > c.dim() - 1))
    throw RangeError("discriminant_reduced: up mode needs 0 <= q <= dim-1");
  if (mode == Mode::Down && (q < 1 || q > c.dim()))
    throw RangeError("discriminant_reduced: down mode needs 1 <= q <= dim");
  if (basis.q != q || !basis.reduced) throw RangeError("discriminant_reduced: basis mismatch");

  const int n = basis.size();
  std::vector<int> simplex_idx(n);
  for (int i = 0; i < n; ++i) simplex_idx[i] = *c.index_of(q, basis.elems[i].verts);
  std::vector<int> position(c.count(q));
  for (int i = 0; i < n; ++i) position[simplex_idx[i]] = i;

  Matrix d = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const auto& nbrs =
        mode == Mode::Up ? c.up_neighbors(q, simplex_idx[i]) : c.down_neighbors(q, simplex_idx[i]);
    for (int jdx : nbrs) {
      int j = position[jdx];
      int sign = eta_by_index(c, q, mode, basis.elems[i], basis.elems[j]);
      double denom;
      if (mode == Mode::Up) {
        denom = (q + 1) * std::sqrt(static_cast<double>(c.deg_up(q, simplex_idx[i])) *
                                    c.deg_up(q, jdx));
      } else {
        denom = std::sqrt(static_cast<double>(c.deg_down(q, simplex_idx[i])) *
                          c.deg_down(q, jdx));
      }
      d(i, j) = sign / denom;
    }
  }
  return d;
}

Matrix coboundary(const SimplicialComplex& c, int q) {
  require_assumptions(c);
  if (q < 0 || q > c.dim() - 1) throw RangeError("coboundary: need 0 <= q <= dim-1");
  Matrix b = Matrix::Zero(c.count(q + 1), c.count(q));
  for (int si = 0; si < c.count(q + 1); ++si) {
    OrientedSimplex sigma{c.simplices(q + 1)[si].verts, 0};
    for (size_t drop = 0; drop < sigma.verts.size(); ++drop) {
      std::vector<VertexId> face;
      for (size_t k = 0; k < sigma.verts.size(); ++k)
        if (k != drop) face.push_back(sigma.verts[k]);
      int ti = *c.index_of(q, face);
      b(si, ti) = (drop % 2 == 0) ? 1.0 : -1.0;
    }
  }
  return b;
}

Matrix laplacian_up(const SimplicialComplex& c, int q) {
  require_assumptions(c);
  if (q < 0 || q > c.dim()) throw RangeError("laplacian_up: dimension out of range");
  if (q == c.dim()) return Matrix::Zero(c.count(q), c.count(q));
  Matrix b = coboundary(c, q);
  return b.adjoint() * b;
}

Matrix laplacian_down(const SimplicialComplex& c, int q) {
  require_assumptions(c);
  if (q < 1 || q > c.dim()) throw RangeError("laplacian_down: need 1 <= q <= dim");
  Matrix b = coboundary(c, q - 1);
  return b * b.adjoint();
}

Matrix laplacian(const SimplicialComplex& c, int q) {
  Matrix l = laplacian_up(c, q);
  if (q >= 1) l += laplacian_down(c, q);
  return l;
}

Eigen::VectorXd inv_sqrt_deg(const SimplicialComplex& c, int q, Mode mode) {
  if (q < 0 || q > c.dim()) throw RangeError("inv_sqrt_deg: dimension out of range");
  Eigen::VectorXd v(c.count(q));
  for (int i = 0; i < c.count(q); ++i) {
    int deg = mode == Mode::Up ? c.deg_up(q, i) : c.deg_down(q, i);
    if (deg <= 0) throw RangeError("inv_sqrt_deg: zero degree in dimension " + std::to_string(q));
    v[i] = 1.0 / std::sqrt(static_cast<double>(deg));
  }
  return v;
}

Matrix a_op(const SimplicialComplex& c, int q) {
  Matrix b = coboundary(c, q);
  return b * inv_sqrt_deg(c, q, Mode::Up).asDiagonal();
}

Matrix b_op(const SimplicialComplex& c, int q) {
  Matrix b = coboundary(c, q);
  return inv_sqrt_deg(c, q + 1, Mode::Down).asDiagonal() * b;
}

Eigen::VectorXd f_sigma(const SimplicialComplex& c, const OrientedSimplex& sigma) {
  const int q = sigma.dim() - 1;
  if (q < 0 || sigma.dim() > c.dim()) throw RangeError("f_sigma: dimension out of range");
  if (!c.contains(sigma.verts)) throw RangeError("f_sigma: simplex not in complex");
  Eigen::VectorXd v = Eigen::VectorXd::Zero(c.count(q));
  for (size_t drop = 0; drop < sigma.verts.size(); ++drop) {
    std::vector<VertexId> face;
    for (size_t k = 0; k < sigma.verts.size(); ++k)
      if (k != drop) face.push_back(sigma.verts[k]);
    int ti = *c.index_of(q, face);
    double s = (drop % 2 == 0) ? 1.0 : -1.0;
    v[ti] = sigma.parity ? -s : s;
  }
  return v;
}

Matrix apply_switching(const Matrix& d, const std::vector<int>& theta) {
  if (static_cast<int>(theta.size()) != d.rows() || d.rows() != d.cols())
    throw RangeError("apply_switching: size mismatch");
  for (int t : theta)
    if (t != 1 && t != -1) throw PreconditionError("apply_switching: entries must be +-1");
  Matrix out = d;
  for (int i = 0; i < d.rows(); ++i)
    for (int j = 0; j < d.cols(); ++j)
      if ((theta[i] == -1) != (theta[j] == -1)) out(i, j) = -out(i, j);
  return out;
}

Matrix projector_minus(const SimplicialComplex& c, int q) {
  const int n = 2 * c.count(q);
  Matrix p = Matrix::Zero(n, n);
  for (int k = 0; k < c.count(q); ++k) {
    p(2 * k, 2 * k) = 0.5;
    p(2 * k + 1, 2 * k + 1) = 0.5;
    p(2 * k, 2 * k + 1) = -0.5;
    p(2 * k + 1, 2 * k) = -0.5;
  }
  return p;
}

Matrix projector_plus(const SimplicialComplex& c, int q) {
  const int n = 2 * c.count(q);
  return Matrix::Identity(n, n) - projector_minus(c, q);
}

Matrix antisym_embedding(const SimplicialComplex& c, int q, const OrientedBasis& reduced) {
  OrderedBasis ob = ordered_basis(c, q);
  const double norm = 1.0 / std::sqrt(factorial(q + 1));
  Matrix j = Matrix::Zero(ob.size(), reduced.size());
  std::vector<int> col_of(c.count(q));
  std::vector<int> par_of(c.count(q));
  for (int b = 0; b < reduced.size(); ++b) {
    int idx = *c.index_of(q, reduced.elems[b].verts);
    col_of[idx] = b;
    par_of[idx] = reduced.elems[b].parity;
  }
  for (int s = 0; s < ob.size(); ++s) {
    int idx = ob.simplex_of[s];
    int par = sort_parity(std::span<const VertexId>(ob.tuples[s]));
    j(s, col_of[idx]) = (par == par_of[idx]) ? norm : -norm;
  }
  return j;
}

Matrix sym_embedding(const SimplicialComplex& c, int q) {
  OrderedBasis ob = ordered_basis(c, q);
  const double norm = 1.0 / std::sqrt(factorial(q + 1));
  Matrix j = Matrix::Zero(ob.size(), c.count(q));
  for (int s = 0; s < ob.size(); ++s) j(s, ob.simplex_of[s]) = norm;
  return j;
}

}  // namespace sgrover
