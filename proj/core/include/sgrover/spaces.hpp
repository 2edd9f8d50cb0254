#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "sgrover/simplicial_complex.hpp"

namespace sgrover {

/// Basis of an oriented-simplex space in dimension q, either the full
/// space (both orientations; even before odd per simplex, simplices in
/// lexicographic order) or a reduced one (one chosen orientation each).
struct OrientedBasis {
  int q = -1;
  bool reduced = false;
  std::vector<OrientedSimplex> elems;

  int size() const { return static_cast<int>(elems.size()); }
  /// Index of the element with the same underlying simplex and parity;
  /// -1 when absent (reduced bases hold only one orientation).
  int index(const SimplicialComplex& c, const OrientedSimplex& t) const;
  std::vector<std::string> labels(const SimplicialComplex& c) const;
};

OrientedBasis full_oriented_basis(const SimplicialComplex& c, int q);

/// Default reduced basis: the even (sorted-order) representative of every
/// simplex, in lexicographic order.
OrientedBasis reduced_oriented_basis(const SimplicialComplex& c, int q);

/// Reduced basis with caller-chosen orientations and ordering; validated to
/// contain exactly one orientation per q-simplex of the complex.
OrientedBasis reduced_basis_from(const SimplicialComplex& c, std::vector<OrientedSimplex> elems);

/// Directed edges of the up/down neighbor graph over the full oriented
/// basis, lexicographic in (origin index, destination index). Contains all
/// four orientation combinations per unoriented neighbor pair, both
/// directions.
struct EdgeBasis {
  Mode mode = Mode::Up;
  int q = -1;
  std::vector<std::pair<int, int>> edges;  // indices into the full oriented basis
  std::unordered_map<long long, int> pos;

  int size() const { return static_cast<int>(edges.size()); }
  int index(int from, int to) const;
  /// Position of the reversed edge.
  int reversed(int e) const;
  std::vector<std::string> labels(const SimplicialComplex& c, const OrientedBasis& full) const;
};

EdgeBasis edge_basis(const SimplicialComplex& c, int q, Mode mode);

/// Basis of the ordered-simplex space: all (q+1)! vertex orderings of each
/// q-simplex, grouped by simplex, orderings lexicographic.
struct OrderedBasis {
  int q = -1;
  std::vector<std::vector<VertexId>> tuples;
  std::vector<int> simplex_of;  // unoriented simplex index per tuple
  std::unordered_map<std::string, int> pos;

  int size() const { return static_cast<int>(tuples.size()); }
  int index(std::span<const VertexId> tuple) const;
  std::vector<std::string> labels(const SimplicialComplex& c) const;
};

OrderedBasis ordered_basis(const SimplicialComplex& c, int q);

}  // namespace sgrover
