#include <doctest.h>

#include <random>

#include "cutlattice/metrics.hpp"
#include "cutlattice/tiling.hpp"
#include "oracles.hpp"

using namespace cutlattice;

TEST_CASE("apsp matches Floyd-Warshall") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + rng() % 12;
    Skeleton g = make_skeleton("rand", n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) g.add_edge(u, v);
    g.sort_adjacency();
    auto d = apsp(g);
    auto fw = oracles::floyd_warshall(g);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        int got = d(u, v) == DistanceMatrix::kInf ? -1 : d(u, v);
        CHECK(got == fw[u][v]);
      }
  }
}

TEST_CASE("apsp metric axioms on generated graphs") {
  for (const char* name : {"{3,5}", "{5,3}"}) {
    Skeleton g = platonic(parse_schlafli(name)).g;
    auto d = apsp(g);
    for (int u = 0; u < g.n; ++u) {
      CHECK(d(u, u) == 0);
      for (int v = 0; v < g.n; ++v) {
        CHECK(d(u, v) == d(v, u));
        CHECK((d(u, v) == 1) == g.has_edge(u, v));
        for (int w = 0; w < g.n; ++w) CHECK(d(u, w) <= d(u, v) + d(v, w));
      }
    }
  }
}

TEST_CASE("icosahedron metric") {
  Skeleton g = platonic(parse_schlafli("{3,5}")).g;
  CHECK(diameter(g) == 3);
  auto d = apsp(g);
  for (int v = 0; v < g.n; ++v) {
    int antipodes = 0;
    for (int u = 0; u < g.n; ++u) antipodes += d(v, u) == 3;
    CHECK(antipodes == 1);
  }
}

TEST_CASE("complete graph distances") {
  auto d = apsp(complete_graph(5));
  for (int u = 0; u < 5; ++u)
    for (int v = 0; v < 5; ++v) CHECK(d(u, v) == (u == v ? 0 : 1));
}

TEST_CASE("girth basics") {
  CHECK(girth(polytope_family(PolytopeFamily::Cube, 3)) == 4);
  CHECK(girth(cycle(9)) == 9);
  CHECK(girth(path(5)) == kNoCycle);
  CHECK(girth(petersen()) == 5);
}

TEST_CASE("girth matches oracle on random graphs") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 3 + rng() % 12;
    Skeleton g = make_skeleton("rand", n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 4 == 0) g.add_edge(u, v);
    g.sort_adjacency();
    CHECK(girth(g) == oracles::brute_girth(g, false));
  }
}

TEST_CASE("bipartite skeletons have even cycles only") {
  for (const char* sym : {"{4,3}", "{6,3}", "{4,4}"}) {
    Patch p = make_patch(parse_schlafli(sym), 2);
    REQUIRE(is_bipartite(p.g));
    int g = girth(p.g);
    CHECK(g % 2 == 0);
  }
}

TEST_CASE("isometric subgraphs") {
  SUBCASE("paths in a 12-cycle") {
    Skeleton c12 = cycle(12);
    Skeleton p6 = path(6);
    std::vector<int> map6 = {0, 1, 2, 3, 4, 5, 6};
    CHECK(is_isometric_subgraph(p6, c12, map6));
    Skeleton p7 = path(7);
    std::vector<int> map7 = {0, 1, 2, 3, 4, 5, 6, 7};
    CHECK(!is_isometric_subgraph(p7, c12, map7));
  }
  SUBCASE("two antipodal pairs and a common neighbor in beta_4") {
    Skeleton b4 = cocktail_party(4);
    // Pairs (0,1), (2,3) are non-adjacent; vertex 4 sees all of them.
    Skeleton h = make_skeleton("h", 5);
    for (int u = 0; u < 5; ++u)
      for (int v = u + 1; v < 5; ++v)
        if (!(u == 0 && v == 1) && !(u == 2 && v == 3)) h.add_edge(u, v);
    h.sort_adjacency();
    std::vector<int> map = {0, 1, 2, 3, 4};
    CHECK(is_isometric_subgraph(h, b4, map));  // induced, diameter 2
  }
  SUBCASE("rejects non-induced maps") {
    Skeleton tri = complete_graph(3);
    Skeleton p2 = path(2);
    std::vector<int> map = {0, 1, 2};
    CHECK_THROWS_AS(is_isometric_subgraph(p2, tri, map), Error);
    std::vector<int> dup = {0, 1, 1};
    CHECK_THROWS_AS(is_isometric_subgraph(p2, tri, dup), Error);
  }
}

TEST_CASE("distance matrix serialization invariant") {
  Patch p = make_patch(parse_schlafli("{4,4}"), 2, 0);
  auto d = apsp(p.g);
  CHECK(d.connected());
  CHECK(d(0, 0) == 0);
}
