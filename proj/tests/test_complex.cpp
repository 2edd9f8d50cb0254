#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "sgrover/errors.hpp"
#include "sgrover/generators.hpp"
#include "sgrover/orientation.hpp"
#include "sgrover/simplicial_complex.hpp"

using namespace sgrover;

namespace {

// independent adjacency oracle: two simplices are up neighbors when their
// union is a stored simplex one dimension higher, down neighbors when they
// share all but one vertex
bool oracle_up(const SimplicialComplex& c, const Simplex& a, const Simplex& b) {
  std::vector<VertexId> un;
  std::set_union(a.verts.begin(), a.verts.end(), b.verts.begin(), b.verts.end(),
                 std::back_inserter(un));
  return a.verts != b.verts && static_cast<int>(un.size()) == a.dim() + 2 && c.contains(un);
}

bool oracle_down(const Simplex& a, const Simplex& b) {
  std::vector<VertexId> in;
  std::set_intersection(a.verts.begin(), a.verts.end(), b.verts.begin(), b.verts.end(),
                        std::back_inserter(in));
  return a.verts != b.verts && static_cast<int>(in.size()) == a.dim();
}

OrientedSimplex by_labels(const SimplicialComplex& c, std::vector<std::string> labels) {
  std::vector<VertexId> ids;
  for (const auto& l : labels) ids.push_back(*c.vertex_id(l));
  return make_oriented(std::span<const VertexId>(ids));
}

}  // namespace

TEST_CASE("facet parsing with closure") {
  auto c = SimplicialComplex::parse("0 1 2\n1 2 3\n0 1 3\n0 2 3");
  CHECK(c.dim() == 2);
  CHECK(c.count(2) == 4);
  CHECK(c.count(1) == 6);
  CHECK(c.count(0) == 4);

  auto single = SimplicialComplex::parse("0");
  CHECK(single.dim() == 0);
  CHECK(single.count(0) == 1);

  auto fig5 = SimplicialComplex::parse("0 1 2\n2 1 4\n1 3 4\n0 1 3\n2 1 3");
  CHECK(fig5.count(2) == 5);

  // every face of every stored simplex is stored
  for (int q = 1; q <= fig5.dim(); ++q) {
    for (const auto& s : fig5.simplices(q)) {
      for (size_t drop = 0; drop < s.verts.size(); ++drop) {
        std::vector<VertexId> face;
        for (size_t k = 0; k < s.verts.size(); ++k)
          if (k != drop) face.push_back(s.verts[k]);
        CHECK(fig5.contains(face));
      }
    }
  }
}

TEST_CASE("parsing handles comments, blank lines, and bad facets") {
  auto c = SimplicialComplex::parse("# header\n\n0 1 2  # a facet\n\n  \n1 2 3\n");
  CHECK(c.count(2) == 2);
  CHECK_THROWS_AS(SimplicialComplex::parse("0 1 0"), ValidationError);
  CHECK_THROWS_AS(SimplicialComplex::parse("# nothing\n\n"), ValidationError);
  CHECK_THROWS_AS(SimplicialComplex::from_facets({{}}), ValidationError);
}

TEST_CASE("vertex ids follow first appearance") {
  auto c = SimplicialComplex::parse("b a\nc a");
  CHECK(c.vertex_id("b") == 0);
  CHECK(c.vertex_id("a") == 1);
  CHECK(c.vertex_id("c") == 2);
  CHECK_FALSE(c.vertex_id("d").has_value());
}

TEST_CASE("generator counts") {
  auto s4 = make_simplex(4);
  CHECK(s4.dim() == 3);
  CHECK(s4.count(2) == 4);
  CHECK(s4.count(1) == 6);

  auto sphere = make_sphere();
  CHECK(sphere.dim() == 2);
  CHECK(sphere.count(2) == 4);
  // the sphere is the 2-skeleton of the full complex on 4 vertices
  auto skel = make_skeleton(4, 2);
  for (int q = 0; q <= 2; ++q) CHECK(skel.simplices(q) == sphere.simplices(q));

  CHECK(make_cylinder_strip(4).count(2) == 8);
  CHECK(make_moebius_strip(5).count(2) == 10);
  CHECK(make_cylinder3(4).count(2) == 24);

  CHECK_THROWS_AS(make_cylinder_strip(2), RangeError);
  CHECK_THROWS_AS(make_simplex(1), RangeError);
  CHECK_THROWS_AS(make_cylinder3(2), RangeError);
  CHECK_THROWS_AS(make_generated("nope", {}), RangeError);
}

TEST_CASE("strip top-dimensional down graph is a cycle") {
  const int m = 4;
  auto c = make_cylinder_strip(m);
  REQUIRE(c.count(2) == 2 * m);
  // oracle: count shared-edge pairs from scratch and walk the cycle
  int edges = 0;
  for (int i = 0; i < c.count(2); ++i) {
    int deg = 0;
    for (int j = 0; j < c.count(2); ++j)
      if (i != j && oracle_down(c.simplices(2)[i], c.simplices(2)[j])) ++deg;
    CHECK(deg == 2);
    edges += deg;
    CHECK(c.deg_down(2, i) == deg);
  }
  CHECK(edges == 2 * 2 * m);
  // connected 2-regular graph on 2m nodes = one 2m-cycle
  CHECK(c.validation().strongly_connected);
}

TEST_CASE("tube: every edge lies in exactly two triangles") {
  for (int N : {3, 5}) {
    auto c = make_cylinder3(N);
    for (int i = 0; i < c.count(1); ++i) CHECK(c.deg_up(1, i) == 2);
    CHECK(c.count(1) == 9 * N);
    CHECK(c.count(0) == 3 * N);
  }
}

TEST_CASE("validation report") {
  auto sphere = make_sphere();
  CHECK(sphere.validation().pure);
  CHECK(sphere.validation().strongly_connected);
  CHECK(sphere.validation().dim == 2);

  auto fig5 = make_fig5();
  CHECK(fig5.validation().pure);
  CHECK(fig5.validation().strongly_connected);
  // oracle: breadth-first search over the shared-edge graph of triangles
  {
    std::set<int> seen{0};
    std::vector<int> stack{0};
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (int j = 0; j < fig5.count(2); ++j)
        if (!seen.count(j) && oracle_down(fig5.simplices(2)[cur], fig5.simplices(2)[j])) {
          seen.insert(j);
          stack.push_back(j);
        }
    }
    CHECK(seen.size() == static_cast<size_t>(fig5.count(2)));
  }

  auto disjoint = SimplicialComplex::parse("0 1 2\n3 4 5");
  CHECK_FALSE(disjoint.validation().strongly_connected);
  CHECK(disjoint.validation().pure);

  auto impure = SimplicialComplex::parse("0 1 2\n3 4");
  CHECK_FALSE(impure.validation().pure);

  CHECK_THROWS_AS(require_assumptions(disjoint), ValidationError);
  disjoint.set_assumption_override(true);
  CHECK_NOTHROW(require_assumptions(disjoint));
}

TEST_CASE("signature of oriented face pairs") {
  auto s012 = make_oriented({0, 1, 2});
  CHECK(sgn(s012, make_oriented({1, 2})) == 1);
  CHECK(sgn(s012, make_oriented({0, 2})) == -1);
  CHECK(sgn(s012, make_oriented({0, 1})) == 1);
  CHECK(sgn(s012, make_oriented({3, 4})) == 0);
  CHECK_THROWS_AS(sgn(s012, make_oriented({0})), RangeError);

  // antisymmetry under either orientation flip, exhaustively on the sphere
  auto sphere = make_sphere();
  for (const auto& tri : sphere.simplices(2)) {
    for (const auto& edge : sphere.simplices(1)) {
      for (int p = 0; p < 2; ++p) {
        for (int r = 0; r < 2; ++r) {
          OrientedSimplex sig{tri.verts, p};
          OrientedSimplex tau{edge.verts, r};
          CHECK(sgn(opposite(sig), tau) == -sgn(sig, tau));
          CHECK(sgn(sig, opposite(tau)) == -sgn(sig, tau));
        }
      }
    }
  }
}

TEST_CASE("ordered tuples map to orientation classes by sort parity") {
  CHECK(make_oriented({2, 1, 4}).parity == 1);
  CHECK(make_oriented({1, 2, 4}).parity == 0);
  CHECK(make_oriented({2, 1, 3}).parity == 1);
  CHECK(opposite(opposite(make_oriented({0, 1}))) == make_oriented({0, 1}));
  CHECK_THROWS_AS(make_oriented({1, 1, 2}), ValidationError);
}

TEST_CASE("common cofacet and common face") {
  auto sphere = make_sphere();
  auto cof = common_cofacet(sphere, make_oriented({0, 1}), make_oriented({0, 2}));
  CHECK(cof.verts == std::vector<VertexId>{0, 1, 2});

  // triangles of the five-triangle complex have no cofacets
  auto fig5 = make_fig5();
  CHECK_THROWS_AS(
      common_cofacet(fig5, by_labels(fig5, {"0", "1", "2"}), by_labels(fig5, {"2", "1", "4"})),
      RangeError);

  // no containing simplex: union has four vertices
  auto s4 = make_simplex(4);
  CHECK_THROWS_AS(common_cofacet(s4, make_oriented({0, 1}), make_oriented({2, 3})), RangeError);

  auto face = common_face(fig5, by_labels(fig5, {"0", "1", "2"}), by_labels(fig5, {"2", "1", "4"}));
  CHECK(face.verts == std::vector<VertexId>{*fig5.vertex_id("1"), *fig5.vertex_id("2")});
  CHECK_THROWS_AS(
      common_face(fig5, by_labels(fig5, {"0", "1", "2"}), by_labels(fig5, {"1", "3", "4"})),
      RangeError);
}

TEST_CASE("degrees") {
  auto sphere = make_sphere();
  CHECK(degree(sphere, make_oriented({0, 1}), Mode::Up) == 2);

  auto fig5 = make_fig5();
  // oracle: enumerate triangles sharing an edge with {2,1,3} by set arithmetic
  auto t5 = by_labels(fig5, {"2", "1", "3"});
  Simplex t5s{t5.verts};
  int nbrs = 0;
  for (const auto& tri : fig5.simplices(2))
    if (oracle_down(t5s, tri)) ++nbrs;
  CHECK(nbrs == 4);
  CHECK(degree(fig5, t5, Mode::Down) == 4);

  // full complex on n vertices: closed-form degrees in every dimension
  for (int n = 3; n <= 6; ++n) {
    auto c = make_simplex(n);
    for (int q = 0; q <= n - 2; ++q) {
      for (int i = 0; i < c.count(q); ++i) {
        CHECK(c.deg_up(q, i) == n - q - 1);
        if (q >= 1) CHECK(c.deg_down(q, i) == (q + 1) * (n - q - 1));
      }
    }
  }
}

TEST_CASE("eta values and symmetries") {
  auto fig5 = make_fig5();
  auto t1 = by_labels(fig5, {"0", "1", "2"});
  auto t2 = by_labels(fig5, {"2", "1", "4"});
  CHECK(eta(fig5, t1, t2, Mode::Down) == -1);  // hand evaluation via the sgn rules

  auto sphere = make_sphere();
  for (int i = 0; i < sphere.count(1); ++i) {
    for (int j : sphere.up_neighbors(1, i)) {
      for (int p = 0; p < 2; ++p) {
        OrientedSimplex a{sphere.simplices(1)[i].verts, p};
        OrientedSimplex b{sphere.simplices(1)[j].verts, 0};
        CHECK(eta(sphere, a, b, Mode::Up) == eta(sphere, b, a, Mode::Up));
        CHECK(eta(sphere, opposite(a), b, Mode::Up) == -eta(sphere, a, b, Mode::Up));
        CHECK(eta(sphere, a, opposite(b), Mode::Up) == -eta(sphere, a, b, Mode::Up));
      }
    }
  }
  CHECK_THROWS_AS(eta(sphere, make_oriented({0, 1}), make_oriented({2, 3}), Mode::Up),
                  RangeError);
}

TEST_CASE("neighbor structure invariants") {
  for (const auto& c : {make_sphere(), make_fig5(), make_cylinder_strip(5)}) {
    for (int q = 0; q <= c.dim(); ++q) {
      for (int i = 0; i < c.count(q); ++i) {
        if (q <= c.dim() - 1) {
          for (int j : c.up_neighbors(q, i)) {
            auto nb = c.up_neighbors(q, j);
            CHECK(std::find(nb.begin(), nb.end(), i) != nb.end());
            // up neighbors are down neighbors
            if (q >= 1) {
              auto dn = c.down_neighbors(q, i);
              CHECK(std::find(dn.begin(), dn.end(), j) != dn.end());
            }
            CHECK(oracle_up(c, c.simplices(q)[i], c.simplices(q)[j]));
          }
        }
        if (q >= 1) {
          for (int j : c.down_neighbors(q, i))
            CHECK(oracle_down(c.simplices(q)[i], c.simplices(q)[j]));
        }
      }
    }
  }
}

TEST_CASE("orientation search") {
  for (int N : {3, 4, 6}) {
    auto tube = make_cylinder3(N);
    auto coherent = orientation_search(tube, OrientationTarget::Coherent);
    REQUIRE(coherent.has_value());
    CHECK(orientation_is(tube, *coherent, OrientationTarget::Coherent));

    // the triangle orientations written in the rho/sigma pattern are coherent
    for (int l = 0; l < 3; ++l) {
      for (int n = 0; n < N; ++n) {
        auto rho = make_oriented({cylinder3_vertex(tube, l, n, N),
                                  cylinder3_vertex(tube, l, n + 1, N),
                                  cylinder3_vertex(tube, l + 1, n + 1, N)});
        auto sig_a = make_oriented({cylinder3_vertex(tube, l, n, N),
                                    cylinder3_vertex(tube, l + 1, n + 1, N),
                                    cylinder3_vertex(tube, l + 1, n, N)});
        auto sig_b = make_oriented({cylinder3_vertex(tube, l, n + 1, N),
                                    cylinder3_vertex(tube, l + 1, n + 2, N),
                                    cylinder3_vertex(tube, l + 1, n + 1, N)});
        auto sig_c = make_oriented({cylinder3_vertex(tube, l - 1, n, N),
                                    cylinder3_vertex(tube, l, n + 1, N),
                                    cylinder3_vertex(tube, l, n, N)});
        CHECK(eta(tube, rho, sig_a, Mode::Down) == -1);
        CHECK(eta(tube, rho, sig_b, Mode::Down) == -1);
        CHECK(eta(tube, rho, sig_c, Mode::Down) == -1);
      }
    }
  }

  for (int m : {3, 5, 8}) {
    CHECK_FALSE(orientation_search(make_moebius_strip(m), OrientationTarget::Coherent));
    auto strip_coherent = orientation_search(make_cylinder_strip(m), OrientationTarget::Coherent);
    REQUIRE(strip_coherent.has_value());
    CHECK(orientation_is(make_cylinder_strip(m), *strip_coherent, OrientationTarget::Coherent));
  }

  auto sphere_orient = orientation_search(make_sphere(), OrientationTarget::Coherent);
  REQUIRE(sphere_orient.has_value());
  CHECK(orientation_is(make_sphere(), *sphere_orient, OrientationTarget::Coherent));
  CHECK_FALSE(orientation_search(make_sphere(), OrientationTarget::Anticoherent));

  auto bad = SimplicialComplex::parse("0 1 2\n3 4 5");
  CHECK_THROWS_AS(orientation_search(bad, OrientationTarget::Coherent), ValidationError);
}

TEST_CASE("bipartite neighbor graphs") {
  auto strip = make_cylinder_strip(4);
  auto bp = is_bipartite(strip, 2, Mode::Down);
  REQUIRE(bp.has_value());
  // classes split the triangles into the two halves of each square
  for (int i = 0; i < strip.count(2); ++i)
    for (int j : strip.down_neighbors(2, i)) CHECK(bp->color[i] != bp->color[j]);

  CHECK(is_bipartite(make_moebius_strip(5), 2, Mode::Down).has_value());
  CHECK_FALSE(is_bipartite(make_sphere(), 1, Mode::Up).has_value());
  CHECK_FALSE(is_bipartite(make_fig5(), 2, Mode::Down).has_value());
}

TEST_CASE("vertex degrees in the neighbor graphs match the closed forms") {
  // an oriented simplex has 2(q+1)deg_X(tau) outgoing up edges and
  // 2 deg_Y(tau) outgoing down edges; with both target orientations counted,
  // the unoriented neighbor lists must have (q+1)deg_X resp. deg_Y entries
  for (const auto& c : {make_sphere(), make_fig5(), make_simplex(5)}) {
    for (int q = 0; q <= c.dim(); ++q) {
      for (int i = 0; i < c.count(q); ++i) {
        if (q <= c.dim() - 1)
          CHECK(static_cast<int>(c.up_neighbors(q, i).size()) == (q + 1) * c.deg_up(q, i));
        if (q >= 1)
          CHECK(static_cast<int>(c.down_neighbors(q, i).size()) == c.deg_down(q, i));
      }
    }
  }
}
