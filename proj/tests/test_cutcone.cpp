#include <doctest.h>

#include "cutlattice/cutcone.hpp"
#include "cutlattice/tiling.hpp"
#include "oracles.hpp"

using namespace cutlattice;

TEST_CASE("C5 at scale 2: the five adjacent-pair cuts") {
  Skeleton g = cycle(5);
  auto r = cutcone_decompose(g, 2);
  REQUIRE(r.exists);
  auto d = apsp(g);
  CHECK(decomposition_matches(*r.decomposition, d));
  // Odd cycles are l1-rigid: the decomposition is the 5 cuts that each
  // separate two cyclically adjacent vertices.
  REQUIRE(r.decomposition->cuts.size() == 5);
  for (const auto& c : r.decomposition->cuts) {
    CHECK(c.mult == 1);
    REQUIRE(c.side.size() == 2);
    int a = c.side[0], b = c.side[1];
    CHECK((b - a == 1 || (a == 0 && b == 4)));
  }
  // The independent brute-force search agrees that a decomposition exists.
  auto brute = oracles::brute_cut_decomposition(g, 2);
  REQUIRE(brute.has_value());
  CHECK(decomposition_matches(*brute, d));
}

TEST_CASE("gamma_3 decomposes at scale 1 into coordinate cuts") {
  Skeleton g = polytope_family(PolytopeFamily::Cube, 3);
  auto r = cutcone_decompose(g, 1);
  REQUIRE(r.exists);
  CHECK(r.decomposition->total_multiplicity() == 3);
}

TEST_CASE("parity obstruction: odd triangles kill scale 1 instantly") {
  CHECK(!cutcone_decompose(complete_graph(4), 1).exists);
  CHECK(!cutcone_decompose(cycle(5), 1).exists);
  CHECK(!cutcone_decompose(petersen(), 1).exists);
}

TEST_CASE("beta_5 has no scale-2 decomposition but one at scale 4") {
  Skeleton g = cocktail_party(5);
  auto none = cutcone_decompose(g, 2);
  CHECK(!none.exists);

  auto four = cutcone_decompose(g, 4);
  REQUIRE(four.exists);
  CHECK(decomposition_matches(*four.decomposition, apsp(g)));
  CHECK(four.decomposition->total_multiplicity() == 8);
}

TEST_CASE("beta_4 at scale 2") {
  auto r = cutcone_decompose(cocktail_party(4), 2);
  REQUIRE(r.exists);
  CHECK(r.decomposition->total_multiplicity() == 4);
}

TEST_CASE("n_max is enforced") {
  CHECK_THROWS_AS(cutcone_decompose(cocktail_party(8), 2, 12), Error);
}

TEST_CASE("agrees with brute oracle on tiny graphs") {
  for (int n : {3, 4, 5}) {
    Skeleton g = cycle(n);
    for (int scale : {1, 2}) {
      CAPTURE(n);
      CAPTURE(scale);
      auto lib = cutcone_decompose(g, scale);
      auto brute = oracles::brute_cut_decomposition(g, scale);
      CHECK(lib.exists == brute.has_value());
    }
  }
}
