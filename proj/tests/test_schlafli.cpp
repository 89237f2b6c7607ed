#include <doctest.h>

#include <random>

#include "cutlattice/schlafli.hpp"

using namespace cutlattice;

TEST_CASE("parse star symbols") {
  auto s = parse_schlafli("{5/2,5}");
  REQUIRE(s.rank() == 2);
  CHECK(*s.entries[0].frac == Fraction{5, 2});
  CHECK(*s.entries[1].frac == Fraction{5, 1});

  auto c = parse_schlafli("{4,4}");
  CHECK(*c.entries[0].frac == Fraction{4, 1});
  CHECK(*c.entries[1].frac == Fraction{4, 1});
}

TEST_CASE("parse rejects bad fractions") {
  CHECK_THROWS_AS(parse_schlafli("{5/5,3}"), Error);   // gcd != 1
  CHECK_THROWS_AS(parse_schlafli("{3/4,3}"), Error);   // q >= p
  CHECK_THROWS_AS(parse_schlafli("{1,3}"), Error);     // p < 2
  CHECK_THROWS_AS(parse_schlafli("5,3}"), Error);      // missing brace
  CHECK_THROWS_AS(parse_schlafli("{5,3"), Error);
  CHECK_THROWS_AS(parse_schlafli("{5,,3}"), Error);
  CHECK_THROWS_AS(parse_schlafli("{5,3}x"), Error);
}

TEST_CASE("parse error reports a position") {
  try {
    parse_schlafli("{5,?}");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("infinity entries") {
  auto s = parse_schlafli("{inf,2}");
  CHECK(s.entries[0].infinite());
  CHECK(format(s) == "{inf,2}");
  auto u = parse_schlafli("{∞,2}");
  CHECK(u == s);
}

TEST_CASE("format is canonical and whitespace-tolerant") {
  CHECK(format(parse_schlafli(" { 5/2 , 5 , 3 } ")) == "{5/2,5,3}");
  CHECK(format(parse_schlafli("{4}")) == "{4}");
}

TEST_CASE("round trip on random valid symbols") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    SchlafliSymbol s;
    int len = 1 + rng() % 4;
    for (int i = 0; i < len; ++i) {
      if (rng() % 6 == 0) {
        s.entries.push_back(SchlafliEntry{});
        continue;
      }
      int p = 2 + rng() % 11;
      std::vector<int> qs;
      for (int q = 1; q < p; ++q)
        if (std::gcd(p, q) == 1) qs.push_back(q);
      s.entries.push_back(SchlafliEntry{make_fraction(p, qs[rng() % qs.size()])});
    }
    CHECK(parse_schlafli(format(s)) == s);
  }
}

TEST_CASE("classify by curvature") {
  CHECK(classify(parse_schlafli("{3,5}")) == Curvature::Spherical);
  CHECK(classify(parse_schlafli("{4,4}")) == Curvature::Euclidean);
  CHECK(classify(parse_schlafli("{7,3}")) == Curvature::Hyperbolic);
  CHECK(classify(parse_schlafli("{2,17}")) == Curvature::Spherical);
  CHECK(classify(parse_schlafli("{2,inf}")) == Curvature::Euclidean);
  CHECK(classify(parse_schlafli("{inf,2}")) == Curvature::Euclidean);
  CHECK(classify(parse_schlafli("{inf,3}")) == Curvature::Hyperbolic);
  CHECK(classify(parse_schlafli("{inf,inf}")) == Curvature::Hyperbolic);
  CHECK_THROWS_AS(classify(parse_schlafli("{5/2,5}")), Error);
  CHECK_THROWS_AS(classify(parse_schlafli("{3,3,3}")), Error);
}

TEST_CASE("classify agrees with the sign of 1/m + 1/k - 1/2") {
  for (int m = 2; m <= 12; ++m)
    for (int k = 2; k <= 12; ++k) {
      SchlafliSymbol s{{SchlafliEntry{make_fraction(m, 1)}, SchlafliEntry{make_fraction(k, 1)}}};
      double v = 1.0 / m + 1.0 / k - 0.5;
      Curvature want = v > 1e-12   ? Curvature::Spherical
                       : v < -1e-12 ? Curvature::Hyperbolic
                                    : Curvature::Euclidean;
      CHECK(classify(s) == want);
    }
}

TEST_CASE("large star fractions are representable") {
  auto f = make_fraction(5, 3);
  CHECK(f.large());
  CHECK(!make_fraction(5, 2).large());
}
