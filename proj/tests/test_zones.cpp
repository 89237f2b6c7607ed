#include <doctest.h>

#include "cutlattice/tiling.hpp"
#include "cutlattice/zones.hpp"

using namespace cutlattice;

TEST_CASE("square lattice zones: scale 1, straight lines") {
  Patch p = make_patch(parse_schlafli("{4,4}"), 3);
  auto z = zone_embed(p);
  REQUIRE(z.ok);
  CHECK(z.embedding.scale == 1);
  REQUIRE(z.families.has_value());
  CHECK(z.family_count == 2);
  // Zone count bounds the dimension.
  CHECK(z.embedding.dim <= static_cast<int>(z.cuts.cuts.size()));
}

TEST_CASE("hexagonal tiling zones: scale 1, three families") {
  Patch p = make_patch(parse_schlafli("{6,3}"), 3);
  auto z = zone_embed(p);
  REQUIRE(z.ok);
  CHECK(z.embedding.scale == 1);
  REQUIRE(z.families.has_value());
  CHECK(z.family_count == 3);
}

TEST_CASE("triangular tiling zones: scale 2, three families") {
  Patch p = make_patch(parse_schlafli("{3,6}"), 3);
  auto z = zone_embed(p);
  REQUIRE(z.ok);
  CHECK(z.embedding.scale == 2);
  REQUIRE(z.families.has_value());
  CHECK(z.family_count == 3);
}

TEST_CASE("icosahedron on the sphere: scale 2 into 6 coordinates") {
  Patch p = platonic(parse_schlafli("{3,5}"));
  auto z = zone_embed(p);
  REQUIRE(z.ok);
  CHECK(z.embedding.scale == 2);
  CHECK(z.embedding.dim == 6);
}

TEST_CASE("dodecahedron on the sphere: scale 2 into 10 coordinates") {
  Patch p = platonic(parse_schlafli("{5,3}"));
  auto z = zone_embed(p);
  REQUIRE(z.ok);
  CHECK(z.embedding.scale == 2);
  CHECK(z.embedding.dim == 10);
}

TEST_CASE("cube and tetrahedron zones") {
  auto zc = zone_embed(platonic(parse_schlafli("{4,3}")));
  REQUIRE(zc.ok);
  CHECK(zc.embedding.scale == 1);
  CHECK(zc.embedding.dim == 3);

  auto zt = zone_embed(platonic(parse_schlafli("{3,3}")));
  REQUIRE(zt.ok);
  CHECK(zt.embedding.scale == 2);
}

TEST_CASE("hyperbolic patches embed at scale 2 via zones") {
  for (const char* sym : {"{7,3}", "{5,4}"}) {
    CAPTURE(sym);
    Patch p = make_patch(parse_schlafli(sym), 2);
    auto z = zone_embed(p);
    REQUIRE(z.ok);
    CHECK(z.embedding.scale == 2);
  }
}

TEST_CASE("hyperbolic even-faced patch embeds at scale 1") {
  Patch p = make_patch(parse_schlafli("{4,5}"), 2);
  auto z = zone_embed(p);
  REQUIRE(z.ok);
  CHECK(z.embedding.scale == 1);
}

TEST_CASE("cuts returned by the zone embedder match the embedding") {
  Patch p = make_patch(parse_schlafli("{4,4}"), 2, 2);
  auto z = zone_embed(p);
  REQUIRE(z.ok);
  Embedding from_cuts = embedding_from_decomposition(p.g.n, z.cuts);
  CHECK(equivalent_embeddings(z.embedding, from_cuts));
}

TEST_CASE("zone embedder reports failure without faces") {
  Patch p;
  p.g = complete_graph(4);
  auto z = zone_embed(p);
  CHECK(!z.ok);
}
