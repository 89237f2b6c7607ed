#include <doctest.h>

#include "cutlattice/atlas.hpp"

using namespace cutlattice;

static AtlasEntry status(const char* s) { return atlas_status(parse_schlafli(s)); }

TEST_CASE("planar rules") {
  CHECK(status("{4,4}").status == AtlasStatus::Embeddable);
  CHECK(status("{4,4}").scale == 1);
  CHECK(status("{3,6}").scale == 2);
  CHECK(status("{6,3}").dim == 3);
  CHECK(status("{7,3}").status == AtlasStatus::Embeddable);
  CHECK(status("{7,3}").scale == 2);
  CHECK(status("{8,3}").scale == 1);
  CHECK(status("{inf,3}").scale == 1);
  CHECK(status("{2,9}").dim == 1);
  CHECK(status("{9,2}").scale == 2);
  CHECK(status("{10,2}").dim == 5);
  CHECK(status("{3,5}").dim == 6);
  CHECK(status("{3,5}").scale == 2);
  CHECK(status("{5,3}").dim == 10);
}

TEST_CASE("planar star honeycombs") {
  CHECK(status("{7/2,7}").status == AtlasStatus::NonEmbeddable);
  CHECK(status("{11/2,11}").status == AtlasStatus::NonEmbeddable);
  CHECK(status("{7,7/2}").status == AtlasStatus::Embeddable);
  CHECK(status("{7,7/2}").scale == 2);
  CHECK(status("{5/2,5}").status == AtlasStatus::Embeddable);
  CHECK(status("{5/2,5}").dim == 6);
  CHECK(status("{5/2,3}").dim == 10);
  CHECK(status("{3,5/2}").dim == 6);
}

TEST_CASE("dimension 3 statuses") {
  CHECK(status("{4,3,5}").status == AtlasStatus::Embeddable);
  CHECK(status("{4,3,5}").family.find("gamma") != std::string::npos);
  CHECK(status("{5,3,5}").status == AtlasStatus::NonEmbeddable);
  CHECK(status("{6,3,4}").status == AtlasStatus::Embeddable);
  CHECK(status("{3,4,3}").status == AtlasStatus::NonEmbeddable);
  CHECK(status("{3,4,3}").reason.find("5-gonal") != std::string::npos);
  CHECK(status("{3,3,5}").reason.find("7-gonal") != std::string::npos);
  CHECK(status("{4,4,4}").status == AtlasStatus::Embeddable);
  CHECK(status("{3,6,3}").status == AtlasStatus::NonEmbeddable);
}

TEST_CASE("the ten star-4-polytopes are all non-embeddable") {
  for (const char* s : {"{5/2,5,3}", "{5,5/2,3}", "{5/2,3,3}", "{3,3,5/2}", "{3,5,5/2}",
                        "{5,5/2,5}", "{5/2,5,5/2}", "{5,3,5/2}", "{5/2,3,5}", "{3,5/2,5}"})
    CHECK(status(s).status == AtlasStatus::NonEmbeddable);
}

TEST_CASE("dimensions 4 and 5") {
  CHECK(status("{3,3,3,4}").status == AtlasStatus::Embeddable);
  CHECK(status("{3,3,3,4}").scale == 4);
  CHECK(status("{4,3,3,5}").status == AtlasStatus::Embeddable);
  CHECK(status("{3,4,3,3}").status == AtlasStatus::NonEmbeddable);
  CHECK(status("{3,3,4,3}").status == AtlasStatus::NonEmbeddable);
  CHECK(status("{5/2,5,3,3}").status == AtlasStatus::NonEmbeddable);
  CHECK(status("{4,3,3,4,3}").status == AtlasStatus::Embeddable);
  CHECK(status("{3,3,3,4,3}").status == AtlasStatus::NonEmbeddable);
  CHECK(status("{3,3,3,3,3}").status == AtlasStatus::Embeddable);
}

TEST_CASE("infinite families beyond the tables") {
  CHECK(status("{3,3,3,3,3,3}").status == AtlasStatus::Embeddable);  // alpha_7
  CHECK(status("{4,3,3,3,3,3}").dim == 7);                           // gamma_7
  CHECK(status("{4,3,3,3,3,4}").dim == 6);                           // delta_6
  CHECK(status("{3,3,3,3,3,4}").scale == 4);                         // beta_7: mu_7 = 4
}

TEST_CASE("out of catalog") {
  CHECK(status("{7,3,4}").status == AtlasStatus::OutOfCatalog);
  CHECK(status("{9/2,9,3}").status == AtlasStatus::OutOfCatalog);
}

TEST_CASE("recorded notes exist") {
  auto notes = atlas_notes();
  CHECK(notes.size() >= 4);
  bool skew = false;
  for (const auto& n : notes) skew = skew || n.find("{4,6|4}") != std::string::npos;
  CHECK(skew);
}
