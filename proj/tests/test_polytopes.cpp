#include <doctest.h>

#include <set>

#include "cutlattice/metrics.hpp"
#include "cutlattice/tiling.hpp"

using namespace cutlattice;

TEST_CASE("600-cell") {
  Skeleton g = regular_4polytope("600-cell");
  CHECK(g.n == 120);
  CHECK(g.edge_count() == 720);
  for (int v = 0; v < g.n; ++v) CHECK(g.degree(v) == 12);
  REQUIRE(g.coords.has_value());
  // Neighbors of a vertex span an icosahedron.
  Skeleton link = make_skeleton("link", 12);
  const auto& nb = g.adj[0];
  for (int i = 0; i < 12; ++i)
    for (int j = i + 1; j < 12; ++j)
      if (g.has_edge(nb[i], nb[j])) link.add_edge(i, j);
  link.sort_adjacency();
  CHECK(isomorphic(link, platonic(parse_schlafli("{3,5}")).g));
}

TEST_CASE("24-cell") {
  Skeleton g = regular_4polytope("24-cell");
  CHECK(g.n == 24);
  CHECK(g.edge_count() == 96);
  for (int v = 0; v < g.n; ++v) CHECK(g.degree(v) == 8);
}

TEST_CASE("120-cell as the dual of the 600-cell") {
  Skeleton g = regular_4polytope("120-cell");
  CHECK(g.n == 600);
  CHECK(g.edge_count() == 1200);
  for (int v = 0; v < g.n; ++v) CHECK(g.degree(v) == 4);
  CHECK(girth(g) == 5);  // pentagonal faces
  CHECK(is_bipartite(g) == false);
}

TEST_CASE("stellated 120-cell skeleton {5/2,5,3}") {
  Skeleton g = star_4polytope(parse_schlafli("{5/2,5,3}"));
  CHECK(g.n == 120);
  CHECK(g.edge_count() == 1200);
  for (int v = 0; v < g.n; ++v) CHECK(g.degree(v) == 20);
  // Same skeleton for {5,5/2,3}.
  Skeleton h = star_4polytope(parse_schlafli("{5,5/2,3}"));
  CHECK(g.adj == h.adj);

  // Centers of face-adjacent dodecahedral cells (= 600-cell neighbors) lie
  // at distance 2 here.
  Skeleton c600 = regular_4polytope("600-cell");
  auto d = bfs_from(g, 0);
  int checked = 0;
  for (int u : c600.adj[0]) {
    CHECK(d[u] == 2);
    ++checked;
  }
  CHECK(checked == 12);
}

TEST_CASE("star-4-polytope isomorphism classes") {
  CHECK(star_4polytope(parse_schlafli("{5/2,3,3}")).adj ==
        regular_4polytope("120-cell").adj);
  CHECK(star_4polytope(parse_schlafli("{3,3,5/2}")).adj ==
        regular_4polytope("600-cell").adj);
  CHECK(star_4polytope(parse_schlafli("{3,5,5/2}")).adj ==
        regular_4polytope("600-cell").adj);
  CHECK_THROWS_AS(star_4polytope(parse_schlafli("{5/2,4,3}")), Error);
  CHECK_THROWS_AS(regular_4polytope("8-cell"), Error);
}
