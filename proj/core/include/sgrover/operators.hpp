#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "sgrover/spaces.hpp"

namespace sgrover {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Isometry from the ordered (q-1)-space into the ordered q-space: append a
/// completing vertex, weighted by 1/sqrt(deg of the extended prefix).
/// Satisfies alpha^* alpha = I. Valid for 1 <= q <= dim.
Matrix build_alpha(const SimplicialComplex& c, int q);

struct GWalkOps {
  OrderedBasis space;       // dimension q
  OrderedBasis space_prev;  // dimension q-1
  Matrix alpha;             // space_prev -> space
  Matrix proj;              // antisymmetrizer on the q-space
  Matrix shift;             // 2 proj - I
  Matrix coin;              // 2 alpha alpha^* - I
  Matrix walk;              // shift * coin
};

/// Ordered-space walk in dimension q with the reflection shift. 1 <= q <= dim.
GWalkOps build_g_walk(const SimplicialComplex& c, int q);

/// Discriminant of the ordered-space walk, alpha^* shift alpha, Hermitian on
/// the ordered (q-1)-space.
Matrix discriminant_g(const SimplicialComplex& c, int q);

struct EdgeOps {
  EdgeBasis space;
  OrientedBasis vertex_space;  // full oriented basis in dimension q
  Matrix d;                    // edge space -> oriented space
  Matrix shift;                // signed edge reversal
  Matrix coin;                 // 2 d^* d - I
  Matrix walk;                 // shift * coin
};

/// Up/down walk operators on the directed edge space. Throws RangeError when
/// q is out of range or the edge set is empty.
EdgeOps build_edge_ops(const SimplicialComplex& c, int q, Mode mode);

/// Discriminant on the full oriented basis, entrywise:
///   up:   eta(t,t') / (2(q+1) sqrt(deg_X(t) deg_X(t'))),
///   down: eta(t,t') / (2 sqrt(deg_Y(t) deg_Y(t'))).
/// Real symmetric; zero matrix when the neighbor graph has no edges.
Matrix discriminant_full(const SimplicialComplex& c, int q, Mode mode);

/// Discriminant restricted to the sign-alternating subspace in the basis of
/// difference vectors over the chosen orientations (entries doubled against
/// the full-basis form).
Matrix discriminant_reduced(const SimplicialComplex& c, int q, Mode mode);
Matrix discriminant_reduced(const SimplicialComplex& c, int q, Mode mode,
                            const OrientedBasis& basis);

/// Coboundary on reduced bases: rows dimension q+1, cols dimension q,
/// entries sgn(sigma, tau). Valid for 0 <= q <= dim-1.
Matrix coboundary(const SimplicialComplex& c, int q);

/// delta_q^* delta_q; the zero map in the top dimension.
Matrix laplacian_up(const SimplicialComplex& c, int q);
/// delta_{q-1} delta_{q-1}^*; valid for q >= 1.
Matrix laplacian_down(const SimplicialComplex& c, int q);
/// Sum of both parts (missing parts at the boundary dimensions are zero).
Matrix laplacian(const SimplicialComplex& c, int q);

/// Diagonal of deg^{-1/2} in dimension q. Throws RangeError when any degree
/// vanishes (e.g. the up-degree in the top dimension).
Eigen::VectorXd inv_sqrt_deg(const SimplicialComplex& c, int q, Mode mode);

/// delta_q scaled by the up-degrees on the source side.
Matrix a_op(const SimplicialComplex& c, int q);
/// delta_q scaled by the down-degrees on the target side.
Matrix b_op(const SimplicialComplex& c, int q);

/// Signature vector of a (q+1)-simplex over the default reduced q-basis:
/// entries sgn(sigma, tau).
Eigen::VectorXd f_sigma(const SimplicialComplex& c, const OrientedSimplex& sigma);

/// Conjugation by a +-1 diagonal; preserves the eigenvalue multiset.
Matrix apply_switching(const Matrix& d, const std::vector<int>& theta);

/// Projectors on the full oriented basis onto the sign-alternating (minus)
/// and symmetric (plus) subspaces.
Matrix projector_minus(const SimplicialComplex& c, int q);
Matrix projector_plus(const SimplicialComplex& c, int q);

/// Orthonormal embedding of the reduced sign-alternating basis into the
/// ordered space (columns indexed like `reduced`).
Matrix antisym_embedding(const SimplicialComplex& c, int q, const OrientedBasis& reduced);
/// Orthonormal embedding of the symmetric subspace (one column per
/// unoriented simplex) into the ordered space.
Matrix sym_embedding(const SimplicialComplex& c, int q);

}  // namespace sgrover
