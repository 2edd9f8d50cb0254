#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sgrover {

using VertexId = int;

/// A simplex stored as its strictly increasing vertex-id tuple.
struct Simplex {
  std::vector<VertexId> verts;

  int dim() const { return static_cast<int>(verts.size()) - 1; }
  bool operator==(const Simplex&) const = default;
  auto operator<=>(const Simplex&) const = default;
};

/// Orientation class of a simplex: the sorted vertex tuple plus the parity
/// of the permutation taking a representative ordering to the sorted one.
/// parity 0 is the even class of the increasing order, parity 1 its mirror.
struct OrientedSimplex {
  std::vector<VertexId> verts;  // strictly increasing
  int parity = 0;               // 0 or 1

  int dim() const { return static_cast<int>(verts.size()) - 1; }
  bool operator==(const OrientedSimplex&) const = default;
};

/// Parity (0 even / 1 odd) of the permutation sorting `ordered`.
int sort_parity(std::span<const VertexId> ordered);

/// Canonical form of an ordered vertex tuple. Throws on repeated vertices.
OrientedSimplex make_oriented(std::span<const VertexId> ordered);
OrientedSimplex make_oriented(std::initializer_list<VertexId> ordered);

OrientedSimplex opposite(OrientedSimplex t);

/// Incidence signature between an oriented (q)-simplex and an oriented
/// (q-1)-simplex: (-1)^j when tau is sigma with the j-th vertex dropped,
/// 0 when [tau] is not a face of [sigma]. Satisfies
/// sgn(bar sigma, tau) = sgn(sigma, bar tau) = -sgn(sigma, tau).
int sgn(const OrientedSimplex& sigma, const OrientedSimplex& tau);

enum class Mode { Up, Down };

struct ValidationReport {
  int dim = -1;
  bool pure = false;
  bool strongly_connected = false;
  int max_cofacet_count = 0;
  std::vector<int> simplex_counts;  // |S_q| per dimension
  std::vector<int> facet_counts;    // maximal simplices per dimension

  bool ok() const { return pure && strongly_connected; }
};

/// Finite abstract simplicial complex, closed under taking faces.
/// Immutable after construction; all queries are safe for concurrent reads.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Downward closure of the given facets. Vertex ids are assigned by first
  /// appearance of a label. Throws ValidationError on empty input, empty
  /// facets or a repeated vertex within a facet.
  static SimplicialComplex from_facets(const std::vector<std::vector<std::string>>& facets);

  /// Facet-file format: one facet per line, whitespace-separated vertex
  /// tokens, '#' starts a comment, blank lines ignored.
  static SimplicialComplex parse(std::string_view text);

  int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
  int vertex_count() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& vertex_labels() const { return labels_; }
  std::optional<VertexId> vertex_id(std::string_view label) const;

  /// |S_q|; zero outside [0, dim].
  int count(int q) const;
  const std::vector<Simplex>& simplices(int q) const;
  std::optional<int> index_of(int q, std::span<const VertexId> sorted_verts) const;
  bool contains(std::span<const VertexId> sorted_verts) const;

  /// deg_X: number of (q+1)-simplices containing simplex #idx of dimension q.
  int deg_up(int q, int idx) const;
  /// deg_Y: number of q-simplices sharing a (q-1)-face with simplex #idx.
  /// Defined for q >= 1.
  int deg_down(int q, int idx) const;

  const std::vector<int>& up_neighbors(int q, int idx) const;
  const std::vector<int>& down_neighbors(int q, int idx) const;
  /// Indices (in dimension q+1) of the cofacets of simplex #idx.
  const std::vector<int>& cofacets(int q, int idx) const;

  /// Original labels joined by spaces, e.g. "0 1 3".
  std::string simplex_label(int q, int idx) const;
  std::string oriented_label(const OrientedSimplex& t) const;

  const ValidationReport& validation() const { return report_; }
  void set_assumption_override(bool v) { override_ = v; }
  bool assumption_override() const { return override_; }

 private:
  void finalize();

  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> label_ids_;
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<std::unordered_map<std::string, int>> index_;  // key: packed verts
  std::vector<std::vector<std::vector<int>>> cofacets_;
  std::vector<std::vector<std::vector<int>>> up_adj_;
  std::vector<std::vector<std::vector<int>>> down_adj_;
  ValidationReport report_;
  bool override_ = false;
};

/// Re-scan the complex and produce a fresh report (identical to the cached
/// one; kept as an explicit operation).
ValidationReport validate(const SimplicialComplex& c);

/// Throws ValidationError unless the complex is pure and strongly connected
/// or carries the explicit override flag.
void require_assumptions(const SimplicialComplex& c);

/// Unique common cofacet of two up-neighboring oriented q-simplices,
/// returned in its even orientation. Throws RangeError when the pair is not
/// up-neighboring.
OrientedSimplex common_cofacet(const SimplicialComplex& c, const OrientedSimplex& t1,
                               const OrientedSimplex& t2);

/// Unique common face of two down-neighboring oriented q-simplices.
OrientedSimplex common_face(const SimplicialComplex& c, const OrientedSimplex& t1,
                            const OrientedSimplex& t2);

/// deg_X / deg_Y of the underlying simplex (orientation-independent).
int degree(const SimplicialComplex& c, const OrientedSimplex& t, Mode mode);

/// Shift signature over an edge of the up or down graph:
///   up:   sgn(sigma, t1) * sgn(sigma, t2) with sigma the common cofacet,
///   down: sgn(t1, mu) * sgn(t2, mu) with mu the common face.
/// Independent of the orientation chosen for sigma / mu.
int eta(const SimplicialComplex& c, const OrientedSimplex& t1, const OrientedSimplex& t2,
        Mode mode);

}  // namespace sgrover
