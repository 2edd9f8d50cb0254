#include "sgrover/generators.hpp"

#include <vector>

#include "sgrover/errors.hpp"

namespace sgrover {

namespace {

using Facets = std::vector<std::vector<std::string>>;

std::string grid_label(int i, int level) {
  return (level == 0 ? "b" : "t") + std::to_string(i);
}

std::string tube_label(int l, int n) { return std::to_string(l) + "." + std::to_string(n); }

int get_param(const std::map<std::string, int>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw RangeError("generator parameter '" + key + "' missing");
  return it->second;
}

}  // namespace

SimplicialComplex make_simplex(int n) {
  if (n < 2) throw RangeError("simplex: n >= 2 required");
  Facets facets(1);
  for (int v = 0; v < n; ++v) facets[0].push_back(std::to_string(v));
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex make_skeleton(int n, int k) {
  if (n < 2 || k < 0 || k > n - 1) throw RangeError("skeleton: need n >= 2, 0 <= k <= n-1");
  Facets facets;
  // all (k+1)-subsets of {0..n-1} in lexicographic order
  std::vector<int> pick(k + 1);
  for (int i = 0; i <= k; ++i) pick[i] = i;
  while (true) {
    std::vector<std::string> facet;
    for (int v : pick) facet.push_back(std::to_string(v));
    facets.push_back(std::move(facet));
    int pos = k;
    while (pos >= 0 && pick[pos] == n - 1 - (k - pos)) --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (int i = pos + 1; i <= k; ++i) pick[i] = pick[i - 1] + 1;
  }
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex make_sphere() { return make_skeleton(4, 2); }

SimplicialComplex make_fig5() {
  return SimplicialComplex::from_facets({{"0", "1", "2"},
                                         {"2", "1", "4"},
                                         {"1", "3", "4"},
                                         {"0", "1", "3"},
                                         {"2", "1", "3"}});
}

SimplicialComplex make_cylinder_strip(int m) {
  if (m < 3) throw RangeError("cylinder-strip: m >= 3 required");
  Facets facets;
  for (int i = 0; i < m; ++i) {
    int j = (i + 1) % m;
    facets.push_back({grid_label(i, 0), grid_label(j, 0), grid_label(j, 1)});
    facets.push_back({grid_label(i, 0), grid_label(j, 1), grid_label(i, 1)});
  }
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex make_moebius_strip(int m) {
  if (m < 3) throw RangeError("moebius-strip: m >= 3 required");
  Facets facets;
  for (int i = 0; i < m; ++i) {
    // right-hand column of square i; the wrapping column comes back flipped
    std::string rb = (i + 1 < m) ? grid_label(i + 1, 0) : grid_label(0, 1);
    std::string rt = (i + 1 < m) ? grid_label(i + 1, 1) : grid_label(0, 0);
    facets.push_back({grid_label(i, 0), rb, rt});
    facets.push_back({grid_label(i, 0), rt, grid_label(i, 1)});
  }
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex make_cylinder3(int N) {
  if (N < 3) throw RangeError("cylinder3: N >= 3 required");
  Facets facets;
  for (int l = 0; l < 3; ++l) {
    for (int n = 0; n < N; ++n) {
      int l1 = (l + 1) % 3;
      int n1 = (n + 1) % N;
      facets.push_back({tube_label(l, n), tube_label(l, n1), tube_label(l1, n1)});
      facets.push_back({tube_label(l, n), tube_label(l1, n1), tube_label(l1, n)});
    }
  }
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex make_generated(const std::string& name,
                                 const std::map<std::string, int>& params) {
  if (name == "simplex") return make_simplex(get_param(params, "n"));
  if (name == "skeleton") return make_skeleton(get_param(params, "n"), get_param(params, "k"));
  if (name == "sphere") return make_sphere();
  if (name == "fig5") return make_fig5();
  if (name == "cylinder-strip") return make_cylinder_strip(get_param(params, "m"));
  if (name == "moebius-strip") return make_moebius_strip(get_param(params, "m"));
  if (name == "cylinder3") return make_cylinder3(get_param(params, "N"));
  throw RangeError("unknown generator '" + name + "'");
}

VertexId cylinder3_vertex(const SimplicialComplex& c, int l, int n, int N) {
  auto id = c.vertex_id(tube_label(((l % 3) + 3) % 3, ((n % N) + N) % N));
  if (!id) throw RangeError("cylinder3_vertex: no such vertex");
  return *id;
}

}  // namespace sgrover
