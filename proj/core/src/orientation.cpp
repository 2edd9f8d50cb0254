#include "sgrover/orientation.hpp"

#include <deque>

#include "sgrover/errors.hpp"

namespace sgrover {

std::optional<OrientationAssignment> orientation_search(const SimplicialComplex& c,
                                                        OrientationTarget target) {
  require_assumptions(c);
  const int n = c.dim();
  const int cells = c.count(n);
  const int want = (target == OrientationTarget::Coherent) ? -1 : 1;

  OrientationAssignment out;
  out.q = n;
  out.parity.assign(cells, 0);
  if (n == 0) return out;  // no down-neighbor pairs among vertices

  // Flipping the orientation of either endpoint flips eta, so the constraint
  // eta(chosen_a, chosen_b) = want becomes a parity relation between the two
  // flip bits. BFS propagation; any inconsistent edge closes a bad cycle.
  std::vector<int> flip(cells, -1);
  auto base_eta = [&](int a, int b) {
    OrientedSimplex ta{c.simplices(n)[a].verts, 0};
    OrientedSimplex tb{c.simplices(n)[b].verts, 0};
    return eta(c, ta, tb, Mode::Down);
  };

  for (int start = 0; start < cells; ++start) {
    if (flip[start] >= 0) continue;
    flip[start] = 0;
    std::deque<int> bfs{start};
    while (!bfs.empty()) {
      int cur = bfs.front();
      bfs.pop_front();
      for (int nb : c.down_neighbors(n, cur)) {
        // eta(chosen) = (-1)^(flip_cur + flip_nb) * base; require == want
        int rel = (base_eta(cur, nb) == want) ? 0 : 1;
        int expect = flip[cur] ^ rel;
        if (flip[nb] < 0) {
          flip[nb] = expect;
          bfs.push_back(nb);
        } else if (flip[nb] != expect) {
          return std::nullopt;
        }
      }
    }
  }
  out.parity = std::move(flip);
  return out;
}

bool orientation_is(const SimplicialComplex& c, const OrientationAssignment& o,
                    OrientationTarget target) {
  const int n = o.q;
  const int want = (target == OrientationTarget::Coherent) ? -1 : 1;
  for (int i = 0; i < c.count(n); ++i) {
    for (int j : c.down_neighbors(n, i)) {
      if (j < i) continue;
      if (eta(c, o.chosen(c, i), o.chosen(c, j), Mode::Down) != want) return false;
    }
  }
  return true;
}

std::optional<Bipartition> is_bipartite(const SimplicialComplex& c, int q, Mode mode,
                                        bool reduced) {
  (void)reduced;  // full-graph classes are the symmetric expansion of these
  if (q < (mode == Mode::Down ? 1 : 0) || q > c.dim() - (mode == Mode::Up ? 1 : 0))
    throw RangeError("is_bipartite: dimension out of range");
  const int m = c.count(q);
  auto neighbors = [&](int i) -> const std::vector<int>& {
    return mode == Mode::Up ? c.up_neighbors(q, i) : c.down_neighbors(q, i);
  };

  Bipartition bp;
  bp.color.assign(m, -1);
  for (int start = 0; start < m; ++start) {
    if (bp.color[start] >= 0) continue;
    bp.color[start] = 0;
    std::deque<int> bfs{start};
    while (!bfs.empty()) {
      int cur = bfs.front();
      bfs.pop_front();
      for (int nb : neighbors(cur)) {
        if (bp.color[nb] < 0) {
          bp.color[nb] = 1 - bp.color[cur];
          bfs.push_back(nb);
        } else if (bp.color[nb] == bp.color[cur]) {
          return std::nullopt;
        }
      }
    }
  }
  return bp;
}

}  // namespace sgrover
