#include <doctest.h>

#include "cutlattice/json_io.hpp"
#include "cutlattice/tiling.hpp"
#include "cutlattice/zones.hpp"

using namespace cutlattice;

TEST_CASE("skeleton JSON round trip") {
  Skeleton g = petersen();
  Json j = skeleton_to_json(g);
  auto back = graph_from_json(j);
  CHECK(back.g.n == g.n);
  CHECK(back.g.adj == g.adj);
  CHECK(back.g.name == g.name);
  CHECK(!back.patch.has_value());
}

TEST_CASE("patch JSON keeps faces and core and restores rotation") {
  Patch p = make_patch(parse_schlafli("{6,3}"), 2);
  Json j = patch_to_json(p);
  auto back = graph_from_json(j);
  REQUIRE(back.patch.has_value());
  CHECK(back.patch->faces == p.faces);
  CHECK(back.g.core == p.g.core);
  // Zones work identically on the reloaded patch.
  auto z1 = zone_embed(p);
  auto z2 = zone_embed(*back.patch);
  REQUIRE(z1.ok);
  REQUIRE(z2.ok);
  CHECK(z1.embedding.labels == z2.embedding.labels);
}

TEST_CASE("stable field order") {
  Json j = skeleton_to_json(complete_graph(3));
  auto it = j.begin();
  CHECK(it.key() == "name");
  ++it;
  CHECK(it.key() == "n");
  ++it;
  CHECK(it.key() == "adj");
}

TEST_CASE("embedding JSON round trip") {
  Embedding e = catalog_embedding("K6");
  Embedding back = embedding_from_json(embedding_to_json(e));
  CHECK(back.scale == e.scale);
  CHECK(back.dim == e.dim);
  CHECK(back.labels == e.labels);
}

TEST_CASE("cut decomposition JSON round trip") {
  CutDecomposition d;
  d.scale = 2;
  d.cuts.push_back({{0, 1, 2}, 3});
  d.cuts.push_back({{1}, 1});
  auto back = cuts_from_json(cuts_to_json(d));
  CHECK(back.scale == 2);
  REQUIRE(back.cuts.size() == 2);
  CHECK(back.cuts[0].side == std::vector<int>{0, 1, 2});
  CHECK(back.cuts[0].mult == 3);
}

TEST_CASE("malformed JSON raises parse errors") {
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": 2})")), Error);
  CHECK_THROWS_AS(embedding_from_json(Json::parse(R"({"scale": 1})")), Error);
  CHECK_THROWS_AS(
      embedding_from_json(Json::parse(R"({"scale":1,"dim":3,"labels":["01"]})")), Error);
  // Asymmetric adjacency.
  CHECK_THROWS_AS(
      graph_from_json(Json::parse(R"({"name":"x","n":2,"adj":[[1],[]]})")), Error);
}

TEST_CASE("distance matrix encodings") {
  Skeleton g = path(2);
  auto d = apsp(g);
  Json j = distance_matrix_to_json(d);
  CHECK(j["n"] == 3);
  CHECK(j["d"][0][2] == 2);
  std::string csv = distance_matrix_to_csv(d);
  CHECK(csv == "0,1,2\n1,0,1\n2,1,0\n");
}

TEST_CASE("table2 exports") {
  Json t = table2_to_json();
  CHECK(t.size() == 36);
  std::string grid = table2_to_text();
  CHECK(grid.find("21") != std::string::npos);
}
