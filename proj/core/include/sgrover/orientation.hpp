#pragma once

#include <optional>
#include <vector>

#include "sgrover/simplicial_complex.hpp"

namespace sgrover {

enum class OrientationTarget { Coherent, Anticoherent };

/// One chosen orientation per top-dimensional simplex, as a parity bit
/// against the even (sorted) representative.
struct OrientationAssignment {
  int q = -1;
  std::vector<int> parity;  // indexed like simplices(q)

  OrientedSimplex chosen(const SimplicialComplex& c, int idx) const {
    return OrientedSimplex{c.simplices(q)[idx].verts, parity[idx]};
  }
};

/// Searches for an orientation of the top-dimensional simplices whose shift
/// signature is -1 (coherent) or +1 (anticoherent) across every
/// down-neighboring pair. Parity constraint propagation over the dual graph;
/// returns nullopt when a contradiction cycle exists. Requires a pure,
/// strongly connected complex.
std::optional<OrientationAssignment> orientation_search(const SimplicialComplex& c,
                                                        OrientationTarget target);

/// Checks the chosen orientation: eta over every down-neighboring pair of
/// chosen representatives equals -1 (coherent) resp. +1 (anticoherent).
bool orientation_is(const SimplicialComplex& c, const OrientationAssignment& o,
                    OrientationTarget target);

struct Bipartition {
  // color per unoriented simplex index (the reduced graph); the full graph
  // classes are the orientation-symmetric expansions
  std::vector<int> color;
};

/// Two-colors the reduced up/down neighbor graph in dimension q. For the
/// full graph (reduced=false) the classes are required to be
/// orientation-symmetric, which holds exactly when the reduced graph is
/// bipartite. Returns nullopt when the graph is not bipartite. A graph with
/// no edges is bipartite.
std::optional<Bipartition> is_bipartite(const SimplicialComplex& c, int q, Mode mode,
                                        bool reduced = true);

}  // namespace sgrover
