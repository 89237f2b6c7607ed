#include <doctest.h>

#include <map>
#include <numeric>

#include "cutlattice/riemann.hpp"

using namespace cutlattice;

TEST_CASE("the 36 representations") {
  auto t = enumerate_table2();
  REQUIRE(t.size() == 36);

  std::map<std::string, int> per_base;
  for (const auto& e : t) ++per_base[e.base];
  CHECK(per_base.size() == 9);
  for (const auto& [base, count] : per_base) CHECK(count == 4);

  int genus4 = 0, genus0 = 0;
  for (const auto& e : t) {
    int g = genus(e);
    if (g == 4) {
      ++genus4;
      CHECK(e.cell.p == 5);
      CHECK(e.vertex_figure.p == 5);
    }
    if (g == 0) ++genus0;
  }
  CHECK(genus4 == 8);
  CHECK(genus0 == 28);
}

TEST_CASE("spot densities") {
  auto find = [](int m, int i, int n, int j) {
    for (const auto& e : enumerate_table2())
      if (e.cell == Fraction{m, i} && e.vertex_figure == Fraction{n, j}) return e;
    FAIL("entry not found");
    return RepresentationEntry{};
  };
  CHECK(density(find(3, 1, 5, 1)) == 1);
  CHECK(density(find(5, 2, 3, 1)) == 7);
  CHECK(density(find(3, 2, 3, 2)) == 5);
  CHECK(density(find(5, 4, 5, 2)) == 21);
  CHECK(density(find(5, 4, 5, 3)) == 27);
  CHECK(density(find(3, 2, 5, 4)) == 29);
}

TEST_CASE("doubled polygons have density = turning number") {
  CHECK(density(doubled_polygon_entry(true, make_fraction(5, 3))) == 3);
  CHECK(density(doubled_polygon_entry(false, make_fraction(5, 3))) == 3);
  CHECK(density(doubled_polygon_entry(true, make_fraction(2, 1))) == 1);
  for (int m = 3; m <= 17; ++m)
    for (int q = 1; q < m; ++q) {
      if (std::gcd(m, q) != 1) continue;
      CHECK(density(doubled_polygon_entry(true, make_fraction(m, q))) == q);
      CHECK(genus(doubled_polygon_entry(true, make_fraction(m, q))) == 0);
    }
}

TEST_CASE("density rejects malformed rows") {
  RepresentationEntry bad;
  bad.cell = make_fraction(3, 1);
  bad.vertex_figure = make_fraction(3, 1);
  bad.V = 4;
  bad.E = 7;  // not a tetrahedron edge count: density becomes non-integral
  bad.F = 4;
  CHECK_THROWS_AS(density(bad), Error);
}

TEST_CASE("table lookup") {
  CHECK(table2_lookup(make_fraction(3, 1), make_fraction(5, 4)).has_value());
  CHECK(!table2_lookup(make_fraction(4, 1), make_fraction(4, 1)).has_value());
  CHECK(!table2_lookup(make_fraction(4, 1), make_fraction(5, 1)).has_value());
  auto dbl = table2_lookup(make_fraction(2, 1), make_fraction(5, 3));
  REQUIRE(dbl.has_value());
  CHECK(density(*dbl) == 3);
}
