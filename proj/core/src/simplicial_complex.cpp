#include "sgrover/simplicial_complex.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "sgrover/errors.hpp"

namespace sgrover {

namespace {

std::string pack_key(std::span<const VertexId> verts) {
  std::string key;
  key.reserve(verts.size() * 4);
  for (VertexId v : verts) {
    key.append(reinterpret_cast<const char*>(&v), sizeof(VertexId));
  }
  return key;
}

}  // namespace

int sort_parity(std::span<const VertexId> ordered) {
  int inv = 0;
  for (size_t i = 0; i < ordered.size(); ++i)
    for (size_t j = i + 1; j < ordered.size(); ++j)
      if (ordered[i] > ordered[j]) ++inv;
  return inv & 1;
}

OrientedSimplex make_oriented(std::span<const VertexId> ordered) {
  OrientedSimplex t;
  t.parity = sort_parity(ordered);
  t.verts.assign(ordered.begin(), ordered.end());
  std::sort(t.verts.begin(), t.verts.end());
  if (std::adjacent_find(t.verts.begin(), t.verts.end()) != t.verts.end())
    throw ValidationError("repeated vertex in ordered simplex");
  return t;
}

OrientedSimplex make_oriented(std::initializer_list<VertexId> ordered) {
  return make_oriented(std::span<const VertexId>(ordered.begin(), ordered.size()));
}

OrientedSimplex opposite(OrientedSimplex t) {
  t.parity ^= 1;
  return t;
}

int sgn(const OrientedSimplex& sigma, const OrientedSimplex& tau) {
  if (sigma.dim() != tau.dim() + 1)
    throw RangeError("sgn: dim(sigma) must equal dim(tau) + 1");
  // locate the single vertex of sigma missing from tau
  int dropped = -1;
  size_t ti = 0;
  for (size_t si = 0; si < sigma.verts.size(); ++si) {
    if (ti < tau.verts.size() && sigma.verts[si] == tau.verts[ti]) {
      ++ti;
    } else if (dropped < 0) {
      dropped = static_cast<int>(si);
    } else {
      return 0;
    }
  }
  if (ti != tau.verts.size()) return 0;
  int s = (dropped % 2 == 0) ? 1 : -1;
  if (sigma.parity) s = -s;
  if (tau.parity) s = -s;
  return s;
}

SimplicialComplex SimplicialComplex::from_facets(
    const std::vector<std::vector<std::string>>& facets) {
  if (facets.empty()) throw ValidationError("no facets given");
  SimplicialComplex c;
  std::vector<std::set<std::vector<VertexId>>> seen;

  for (const auto& facet : facets) {
    if (facet.empty()) throw ValidationError("empty facet");
    std::vector<VertexId> ids;
    ids.reserve(facet.size());
    for (const auto& tok : facet) {
      auto it = c.label_ids_.find(tok);
      if (it == c.label_ids_.end()) {
        VertexId id = static_cast<VertexId>(c.labels_.size());
        c.labels_.push_back(tok);
        it = c.label_ids_.emplace(tok, id).first;
      }
      ids.push_back(it->second);
    }
    std::vector<VertexId> sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ValidationError("duplicate vertex within a facet");

    const int k = static_cast<int>(sorted.size());
    if (static_cast<int>(seen.size()) < k) seen.resize(k);
    // downward closure: every nonempty subset is a simplex
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      std::vector<VertexId> sub;
      for (int b = 0; b < k; ++b)
        if (mask & (1u << b)) sub.push_back(sorted[b]);
      seen[sub.size() - 1].insert(std::move(sub));
    }
  }

  c.by_dim_.resize(seen.size());
  for (size_t d = 0; d < seen.size(); ++d)
    for (const auto& verts : seen[d]) c.by_dim_[d].push_back(Simplex{verts});
  c.finalize();
  return c;
}

SimplicialComplex SimplicialComplex::parse(std::string_view text) {
  std::vector<std::vector<std::string>> facets;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string tok;
    while (ls >> tok) toks.push_back(tok);
    if (!toks.empty()) facets.push_back(std::move(toks));
  }
  if (facets.empty()) throw ValidationError("facet file contains no facets");
  return from_facets(facets);
}

void SimplicialComplex::finalize() {
  const int top = dim();
  index_.resize(top + 1);
  for (int q = 0; q <= top; ++q) {
    // by_dim_[q] comes out of a std::set, already in lexicographic order
    for (size_t i = 0; i < by_dim_[q].size(); ++i)
      index_[q].emplace(pack_key(by_dim_[q][i].verts), static_cast<int>(i));
  }

  cofacets_.assign(top + 1, {});
  up_adj_.assign(top + 1, {});
  down_adj_.assign(top + 1, {});
  for (int q = 0; q <= top; ++q) {
    cofacets_[q].assign(by_dim_[q].size(), {});
    up_adj_[q].assign(by_dim_[q].size(), {});
    down_adj_[q].assign(by_dim_[q].size(), {});
  }

  // cofacet lists: drop one vertex of each (q+1)-simplex
  for (int q = 0; q < top; ++q) {
    const auto& upper = by_dim_[q + 1];
    for (size_t ui = 0; ui < upper.size(); ++ui) {
      std::vector<VertexId> face;
      for (size_t drop = 0; drop < upper[ui].verts.size(); ++drop) {
        face.clear();
        for (size_t k = 0; k < upper[ui].verts.size(); ++k)
          if (k != drop) face.push_back(upper[ui].verts[k]);
        auto idx = index_of(q, face);
        cofacets_[q][*idx].push_back(static_cast<int>(ui));
      }
    }
  }

  // up adjacency: q-faces of a common (q+1)-simplex are pairwise up neighbors;
  // the common cofacet of a pair is unique, so no deduplication is needed
  for (int q = 0; q < top; ++q) {
    const auto& upper = by_dim_[q + 1];
    for (const auto& sigma : upper) {
      std::vector<int> faces;
      std::vector<VertexId> face;
      for (size_t drop = 0; drop < sigma.verts.size(); ++drop) {
        face.clear();
        for (size_t k = 0; k < sigma.verts.size(); ++k)
          if (k != drop) face.push_back(sigma.verts[k]);
        faces.push_back(*index_of(q, face));
      }
      for (int a : faces)
        for (int b : faces)
          if (a != b) up_adj_[q][a].push_back(b);
    }
    for (auto& nbrs : up_adj_[q]) std::sort(nbrs.begin(), nbrs.end());
  }

  // down adjacency: q-simplices sharing a (q-1)-face; the shared face of a
  // pair is their intersection, hence unique
  for (int q = 1; q <= top; ++q) {
    for (size_t mi = 0; mi < by_dim_[q - 1].size(); ++mi) {
      const auto& cofs = cofacets_[q - 1][mi];
      for (int a : cofs)
        for (int b : cofs)
          if (a != b) down_adj_[q][a].push_back(b);
    }
    for (auto& nbrs : down_adj_[q]) std::sort(nbrs.begin(), nbrs.end());
  }

  // validation report
  report_ = ValidationReport{};
  report_.dim = top;
  report_.simplex_counts.resize(top + 1);
  report_.facet_counts.assign(top + 1, 0);
  for (int q = 0; q <= top; ++q) {
    report_.simplex_counts[q] = count(q);
    for (size_t i = 0; i < by_dim_[q].size(); ++i) {
      int nc = (q < top) ? static_cast<int>(cofacets_[q][i].size()) : 0;
      report_.max_cofacet_count = std::max(report_.max_cofacet_count, nc);
      if (nc == 0) ++report_.facet_counts[q];
    }
  }

  // purity: every simplex is a face of a top-dimensional one
  report_.pure = true;
  {
    std::vector<std::vector<char>> covered(top + 1);
    for (int q = 0; q <= top; ++q) covered[q].assign(by_dim_[q].size(), 0);
    std::fill(covered[top].begin(), covered[top].end(), 1);
    for (int q = top - 1; q >= 0; --q)
      for (size_t i = 0; i < by_dim_[q].size(); ++i)
        for (int cf : cofacets_[q][i])
          if (covered[q + 1][cf]) {
            covered[q][i] = 1;
            break;
          }
    for (int q = 0; q <= top; ++q)
      for (char cv : covered[q])
        if (!cv) report_.pure = false;
  }

  // strong connectivity of the top-dimensional dual graph. A 0-dimensional
  // complex is strongly connected by convention (all vertices share the
  // empty face).
  if (top == 0) {
    report_.strongly_connected = true;
  } else {
    const size_t n = by_dim_[top].size();
    std::vector<char> vis(n, 0);
    std::deque<int> bfs{0};
    vis[0] = 1;
    size_t reached = 1;
    while (!bfs.empty()) {
      int cur = bfs.front();
      bfs.pop_front();
      for (int nb : down_adj_[top][cur])
        if (!vis[nb]) {
          vis[nb] = 1;
          ++reached;
          bfs.push_back(nb);
        }
    }
    report_.strongly_connected = (reached == n);
  }
}

std::optional<VertexId> SimplicialComplex::vertex_id(std::string_view label) const {
  auto it = label_ids_.find(std::string(label));
  if (it == label_ids_.end()) return std::nullopt;
  return it->second;
}

int SimplicialComplex::count(int q) const {
  if (q < 0 || q > dim()) return 0;
  return static_cast<int>(by_dim_[q].size());
}

const std::vector<Simplex>& SimplicialComplex::simplices(int q) const {
  if (q < 0 || q > dim()) throw RangeError("simplices: dimension out of range");
  return by_dim_[q];
}

std::optional<int> SimplicialComplex::index_of(int q,
                                               std::span<const VertexId> sorted_verts) const {
  if (q < 0 || q > dim()) return std::nullopt;
  auto it = index_[q].find(pack_key(sorted_verts));
  if (it == index_[q].end()) return std::nullopt;
  return it->second;
}

bool SimplicialComplex::contains(std::span<const VertexId> sorted_verts) const {
  return index_of(static_cast<int>(sorted_verts.size()) - 1, sorted_verts).has_value();
}

int SimplicialComplex::deg_up(int q, int idx) const {
  if (q < 0 || q > dim()) throw RangeError("deg_up: dimension out of range");
  if (q == dim()) return 0;
  return static_cast<int>(cofacets_[q][idx].size());
}

int SimplicialComplex::deg_down(int q, int idx) const {
  if (q < 1 || q > dim()) throw RangeError("deg_down: dimension out of range");
  return static_cast<int>(down_adj_[q][idx].size());
}

const std::vector<int>& SimplicialComplex::up_neighbors(int q, int idx) const {
  if (q < 0 || q > dim()) throw RangeError("up_neighbors: dimension out of range");
  return up_adj_[q][idx];
}

const std::vector<int>& SimplicialComplex::down_neighbors(int q, int idx) const {
  if (q < 1 || q > dim()) throw RangeError("down_neighbors: dimension out of range");
  return down_adj_[q][idx];
}

const std::vector<int>& SimplicialComplex::cofacets(int q, int idx) const {
  if (q < 0 || q >= dim()) throw RangeError("cofacets: dimension out of range");
  return cofacets_[q][idx];
}

std::string SimplicialComplex::simplex_label(int q, int idx) const {
  const auto& s = simplices(q)[idx];
  std::string out;
  for (size_t i = 0; i < s.verts.size(); ++i) {
    if (i) out += ' ';
    out += labels_[s.verts[i]];
  }
  return out;
}

std::string SimplicialComplex::oriented_label(const OrientedSimplex& t) const {
  std::string out = t.parity ? "-[" : "+[";
  for (size_t i = 0; i < t.verts.size(); ++i) {
    if (i) out += ' ';
    out += labels_[t.verts[i]];
  }
  out += ']';
  return out;
}

ValidationReport validate(const SimplicialComplex& c) { return c.validation(); }

void require_assumptions(const SimplicialComplex& c) {
  if (c.assumption_override()) return;
  const auto& r = c.validation();
  if (!r.pure) throw ValidationError("complex is not pure");
  if (!r.strongly_connected) throw ValidationError("complex is not strongly connected");
}

namespace {

int checked_index(const SimplicialComplex& c, const OrientedSimplex& t, const char* who) {
  auto idx = c.index_of(t.dim(), t.verts);
  if (!idx) throw RangeError(std::string(who) + ": simplex not in complex");
  return *idx;
}

}  // namespace

OrientedSimplex common_cofacet(const SimplicialComplex& c, const OrientedSimplex& t1,
                               const OrientedSimplex& t2) {
  if (t1.dim() != t2.dim()) throw RangeError("common_cofacet: dimension mismatch");
  std::vector<VertexId> un;
  std::set_union(t1.verts.begin(), t1.verts.end(), t2.verts.begin(), t2.verts.end(),
                 std::back_inserter(un));
  if (static_cast<int>(un.size()) != t1.dim() + 2 || !c.contains(un))
    throw RangeError("common_cofacet: not up neighbors");
  return OrientedSimplex{std::move(un), 0};
}

OrientedSimplex common_face(const SimplicialComplex& c, const OrientedSimplex& t1,
                            const OrientedSimplex& t2) {
  if (t1.dim() != t2.dim()) throw RangeError("common_face: dimension mismatch");
  std::vector<VertexId> in;
  std::set_intersection(t1.verts.begin(), t1.verts.end(), t2.verts.begin(), t2.verts.end(),
                        std::back_inserter(in));
  if (static_cast<int>(in.size()) != t1.dim() || t1.verts == t2.verts)
    throw RangeError("common_face: not down neighbors");
  (void)c;
  return OrientedSimplex{std::move(in), 0};
}

int degree(const SimplicialComplex& c, const OrientedSimplex& t, Mode mode) {
  int idx = checked_index(c, t, "degree");
  return mode == Mode::Up ? c.deg_up(t.dim(), idx) : c.deg_down(t.dim(), idx);
}

int eta(const SimplicialComplex& c, const OrientedSimplex& t1, const OrientedSimplex& t2,
        Mode mode) {
  if (mode == Mode::Up) {
    OrientedSimplex sigma = common_cofacet(c, t1, t2);
    return sgn(sigma, t1) * sgn(sigma, t2);
  }
  OrientedSimplex mu = common_face(c, t1, t2);
  return sgn(t1, mu) * sgn(t2, mu);
}

}  // namespace sgrover
