#include "sgrover/spaces.hpp"

#include <algorithm>

#include "sgrover/errors.hpp"

namespace sgrover {

namespace {

std::string pack_tuple(std::span<const VertexId> verts) {
  std::string key;
  key.reserve(verts.size() * 4);
  for (VertexId v : verts) key.append(reinterpret_cast<const char*>(&v), sizeof(VertexId));
  return key;
}

long long pack_pair(int a, int b) { return (static_cast<long long>(a) << 32) | static_cast<unsigned>(b); }

}  // namespace

int OrientedBasis::index(const SimplicialComplex& c, const OrientedSimplex& t) const {
  auto idx = c.index_of(q, t.verts);
  if (!idx) return -1;
  if (!reduced) return 2 * *idx + t.parity;
  // reduced bases are one-per-simplex but in caller order; fall back to scan
  for (size_t i = 0; i < elems.size(); ++i)
    if (elems[i] == t) return static_cast<int>(i);
  return -1;
}

std::vector<std::string> OrientedBasis::labels(const SimplicialComplex& c) const {
  std::vector<std::string> out;
  out.reserve(elems.size());
  for (const auto& t : elems) out.push_back(c.oriented_label(t));
  return out;
}

OrientedBasis full_oriented_basis(const SimplicialComplex& c, int q) {
  if (q < 0 || q > c.dim()) throw RangeError("full_oriented_basis: dimension out of range");
  OrientedBasis b;
  b.q = q;
  b.reduced = false;
  b.elems.reserve(2 * c.count(q));
  for (const auto& s : c.simplices(q)) {
    b.elems.push_back(OrientedSimplex{s.verts, 0});
    b.elems.push_back(OrientedSimplex{s.verts, 1});
  }
  return b;
}

OrientedBasis reduced_oriented_basis(const SimplicialComplex& c, int q) {
  if (q < 0 || q > c.dim()) throw RangeError("reduced_oriented_basis: dimension out of range");
  OrientedBasis b;
  b.q = q;
  b.reduced = true;
  b.elems.reserve(c.count(q));
  for (const auto& s : c.simplices(q)) b.elems.push_back(OrientedSimplex{s.verts, 0});
  return b;
}

OrientedBasis reduced_basis_from(const SimplicialComplex& c, std::vector<OrientedSimplex> elems) {
  if (elems.empty()) throw RangeError("reduced_basis_from: empty basis");
  const int q = elems.front().dim();
  if (static_cast<int>(elems.size()) != c.count(q))
    throw RangeError("reduced_basis_from: need one orientation per simplex");
  std::vector<char> seen(c.count(q), 0);
  for (const auto& t : elems) {
    if (t.dim() != q) throw RangeError("reduced_basis_from: mixed dimensions");
    auto idx = c.index_of(q, t.verts);
    if (!idx || seen[*idx]) throw RangeError("reduced_basis_from: not one per simplex");
    seen[*idx] = 1;
  }
  OrientedBasis b;
  b.q = q;
  b.reduced = true;
  b.elems = std::move(elems);
  return b;
}

int EdgeBasis::index(int from, int to) const {
  auto it = pos.find(pack_pair(from, to));
  return it == pos.end() ? -1 : it->second;
}

int EdgeBasis::reversed(int e) const { return index(edges[e].second, edges[e].first); }

std::vector<std::string> EdgeBasis::labels(const SimplicialComplex& c,
                                           const OrientedBasis& full) const {
  std::vector<std::string> out;
  out.reserve(edges.size());
  for (auto [a, b] : edges)
    out.push_back(c.oriented_label(full.elems[a]) + " -> " + c.oriented_label(full.elems[b]));
  return out;
}

EdgeBasis edge_basis(const SimplicialComplex& c, int q, Mode mode) {
  if (mode == Mode::Up && (q < 0 || q > c.dim() - 1))
    throw RangeError("edge_basis: up mode needs 0 <= q <= dim-1");
  if (mode == Mode::Down && (q < 1 || q > c.dim()))
    throw RangeError("edge_basis: down mode needs 1 <= q <= dim");
  EdgeBasis b;
  b.mode = mode;
  b.q = q;
  for (int i = 0; i < c.count(q); ++i) {
    const auto& nbrs = mode == Mode::Up ? c.up_neighbors(q, i) : c.down_neighbors(q, i);
    for (int p = 0; p < 2; ++p) {
      int from = 2 * i + p;
      for (int j : nbrs)
        for (int r = 0; r < 2; ++r) b.edges.emplace_back(from, 2 * j + r);
    }
  }
  std::sort(b.edges.begin(), b.edges.end());
  for (size_t e = 0; e < b.edges.size(); ++e)
    b.pos.emplace(pack_pair(b.edges[e].first, b.edges[e].second), static_cast<int>(e));
  return b;
}

int OrderedBasis::index(std::span<const VertexId> tuple) const {
  auto it = pos.find(pack_tuple(tuple));
  return it == pos.end() ? -1 : it->second;
}

std::vector<std::string> OrderedBasis::labels(const SimplicialComplex& c) const {
  std::vector<std::string> out;
  out.reserve(tuples.size());
  for (const auto& t : tuples) {
    std::string s = "(";
    for (size_t i = 0; i < t.size(); ++i) {
      if (i) s += ' ';
      s += c.vertex_labels()[t[i]];
    }
    s += ')';
    out.push_back(std::move(s));
  }
  return out;
}

OrderedBasis ordered_basis(const SimplicialComplex& c, int q) {
  if (q < 0 || q > c.dim()) throw RangeError("ordered_basis: dimension out of range");
  OrderedBasis b;
  b.q = q;
  for (int i = 0; i < c.count(q); ++i) {
    std::vector<VertexId> perm = c.simplices(q)[i].verts;
    do {
      b.tuples.push_back(perm);
      b.simplex_of.push_back(i);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  for (size_t t = 0; t < b.tuples.size(); ++t)
    b.pos.emplace(pack_tuple(b.tuples[t]), static_cast<int>(t));
  return b;
}

}  // namespace sgrover
