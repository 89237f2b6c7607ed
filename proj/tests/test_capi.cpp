#include <doctest.h>

#include <json.hpp>
#include <string>

#include "cutlattice.h"

using nlohmann::json;

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  clat_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("C API: symbols") {
  char* out = nullptr;
  REQUIRE(clat_symbol_canonical(" { 5/2 , 5 } ", &out) == CLAT_OK);
  CHECK(take(out) == "{5/2,5}");
  REQUIRE(clat_symbol_classify("{7,3}", &out) == CLAT_OK);
  CHECK(take(out) == "hyperbolic");
  CHECK(clat_symbol_canonical("{5/5,3}", &out) == CLAT_ERR_CONSTRAINT);
  CHECK(std::string(clat_last_error()).find("gcd") != std::string::npos);
}

TEST_CASE("C API: generate, counts, JSON round trip") {
  clat_graph* g = nullptr;
  REQUIRE(clat_generate("{7,3}", 2, 3, 0, &g) == CLAT_OK);
  int n = 0;
  long long e = 0;
  REQUIRE(clat_graph_counts(g, &n, &e) == CLAT_OK);
  CHECK(n > 20);
  char* js = nullptr;
  REQUIRE(clat_graph_to_json(g, &js) == CLAT_OK);
  std::string dumped = take(js);
  clat_graph_free(g);

  clat_graph* back = nullptr;
  REQUIRE(clat_graph_from_json(dumped.c_str(), &back) == CLAT_OK);
  int n2 = 0;
  REQUIRE(clat_graph_counts(back, &n2, nullptr) == CLAT_OK);
  CHECK(n2 == n);

  char* zones = nullptr;
  REQUIRE(clat_zone_embed(back, &zones) == CLAT_OK);
  json z = json::parse(take(zones));
  CHECK(z["ok"].get<bool>());
  CHECK(z["embedding"]["scale"] == 2);
  clat_graph_free(back);
}

TEST_CASE("C API: metrics") {
  clat_graph* g = nullptr;
  REQUIRE(clat_generate("petersen", -1, -1, 0, &g) == CLAT_OK);
  int girth_value = 0, diam_value = 0;
  REQUIRE(clat_girth(g, 0, &girth_value) == CLAT_OK);
  REQUIRE(clat_diameter(g, &diam_value) == CLAT_OK);
  CHECK(girth_value == 5);
  CHECK(diam_value == 2);
  char* csv = nullptr;
  REQUIRE(clat_distances_csv(g, &csv) == CLAT_OK);
  CHECK(take(csv).substr(0, 3) == "0,1");
  clat_graph_free(g);

  int stable = 0;
  REQUIRE(clat_distance_stability("{4,4}", 3, -1, &stable) == CLAT_OK);
  CHECK(stable == 1);
}

TEST_CASE("C API: hypermetric search and certificates") {
  clat_graph* g = nullptr;
  REQUIRE(clat_generate("K5-K3", -1, -1, 0, &g) == CLAT_OK);
  char* certs = nullptr;
  int violated = 0;
  REQUIRE(clat_hypermetric_search(g, 5, "first", 0, 1, &certs, &violated) == CLAT_OK);
  CHECK(violated == 1);
  json j = json::parse(take(certs));
  REQUIRE(j.size() == 1);
  CHECK(j[0]["lhs"] == 7);
  CHECK(j[0]["rhs"] == 6);
  clat_graph_free(g);
}

TEST_CASE("C API: catalog and verify") {
  clat_graph* g = nullptr;
  REQUIRE(clat_catalog_graph("icosahedron", &g) == CLAT_OK);
  char* emb = nullptr;
  REQUIRE(clat_catalog_embedding("icosahedron", &emb) == CLAT_OK);
  std::string embedding = take(emb);
  char* res = nullptr;
  REQUIRE(clat_embed_verify(g, embedding.c_str(), 0, &res) == CLAT_OK);
  CHECK(json::parse(take(res))["valid"].get<bool>());
  clat_graph_free(g);
}

TEST_CASE("C API: cutcone, partial cube, remark4") {
  clat_graph* g = nullptr;
  REQUIRE(clat_generate("C5", -1, -1, 0, &g) == CLAT_OK);
  char* out = nullptr;
  REQUIRE(clat_cutcone(g, 2, 12, &out) == CLAT_OK);
  CHECK(json::parse(take(out))["exists"].get<bool>());
  REQUIRE(clat_partial_cube(g, &out) == CLAT_OK);
  CHECK(!json::parse(take(out))["is_partial_cube"].get<bool>());
  clat_graph_free(g);

  REQUIRE(clat_remark4(4, &out) == CLAT_OK);
  json r = json::parse(take(out));
  CHECK(r["lambda_n"] == 6);
  CHECK(r["target_dim"] == 10);
}

TEST_CASE("C API: atlas and table2") {
  char* out = nullptr;
  REQUIRE(clat_atlas_status("{4,3,5}", &out) == CLAT_OK);
  json a = json::parse(take(out));
  CHECK(a["status"] == "embeddable");
  REQUIRE(clat_table2(&out) == CLAT_OK);
  CHECK(json::parse(take(out)).size() == 36);
  REQUIRE(clat_table2_entry("5/2", "3", &out) == CLAT_OK);
  CHECK(json::parse(take(out))["density"] == 7);
  CHECK(clat_table2_entry("4", "4", &out) == CLAT_ERR_DOMAIN);
}

TEST_CASE("C API: error reporting") {
  clat_graph* g = nullptr;
  CHECK(clat_generate("{9/2,8}", -1, -1, 0, &g) == CLAT_ERR_CONSTRAINT);
  CHECK(clat_generate("no-such-graph", -1, -1, 0, &g) == CLAT_ERR_DOMAIN);
  CHECK(std::string(clat_last_error()).find("no-such-graph") != std::string::npos);
  CHECK(clat_graph_from_json("{broken", &g) == CLAT_ERR_PARSE);
}
