#pragma once

#include <map>
#include <string>

#include "sgrover/simplicial_complex.hpp"

namespace sgrover {

/// Full complex on n vertices (all nonempty subsets), n >= 2.
SimplicialComplex make_simplex(int n);

/// k-skeleton of the full complex on n vertices, 0 <= k <= n-1.
SimplicialComplex make_skeleton(int n, int k);

/// Boundary of the 3-dimensional simplex: skeleton(4, 2).
SimplicialComplex make_sphere();

/// Five-triangle 2-complex used as the non-bipartite down-walk example.
SimplicialComplex make_fig5();

/// Triangulated closed strip: 2m triangles on the vertex grid Z_m x {0,1},
/// each square split by the (i,0)-(i+1,1) diagonal. m >= 3.
SimplicialComplex make_cylinder_strip(int m);

/// Same strip glued with a flip on the wrapping column. m >= 3.
SimplicialComplex make_moebius_strip(int m);

/// Periodic truncation of the triangulated infinite tube on Z_3 x Z_N:
/// triangles rho(l,n) = {(l,n),(l,n+1),(l+1,n+1)} and
/// sigma(l,n) = {(l,n),(l+1,n+1),(l+1,n)}, 6N in total. N >= 3.
SimplicialComplex make_cylinder3(int N);

/// Name-and-parameter dispatcher backing the CLI --gen flag. Recognized
/// names: simplex, skeleton, sphere, fig5, cylinder-strip, moebius-strip,
/// cylinder3. Parameters: n, k, m, N as required by the generator.
SimplicialComplex make_generated(const std::string& name, const std::map<std::string, int>& params);

/// Vertex id of the tube vertex (l, n); the generators above assign labels
/// deterministically, this resolves them back.
VertexId cylinder3_vertex(const SimplicialComplex& c, int l, int n, int N);

}  // namespace sgrover
