#include "cutlattice/riemann.hpp"

#include <algorithm>
#include <array>

namespace cutlattice {

namespace {

struct BaseCounts {
  int V, E, F;
};

// Underlying abstract surface by the integer parts (m, n) of cell and vertex
// figure; the star variants share their convex relatives' counts.
BaseCounts base_for(int m, int n) {
  if (m == 3 && n == 3) return {4, 6, 4};
  if (m == 3 && n == 4) return {6, 12, 8};
  if (m == 4 && n == 3) return {8, 12, 6};
  if (m == 3 && n == 5) return {12, 30, 20};
  if (m == 5 && n == 3) return {20, 30, 12};
  if (m == 5 && n == 5) return {12, 30, 12};
  fail(ErrorKind::Domain, "base_for: no regular polyhedron with these polygon orders");
}

const char* nine_name(int m, int i, int n, int j) {
  if (m == 3 && n == 3) return "tetrahedron";
  if (m == 3 && n == 4) return "octahedron";
  if (m == 4 && n == 3) return "cube";
  if (m == 3 && n == 5) return (j == 1 || j == 4) ? "icosahedron" : "great icosahedron";
  if (m == 5 && n == 3) return (i == 1 || i == 4) ? "dodecahedron" : "great stellated dodecahedron";
  if (m == 5 && n == 5)
    return (i == 1 || i == 4) ? "great dodecahedron" : "small stellated dodecahedron";
  return "?";
}

struct StoredCell {
  int m, i, n, j, density;
};

// Table of the 36 representations: (cell, vertex figure, density).
constexpr std::array<StoredCell, 36> kTable36 = {{
    // tetrahedron
    {3, 1, 3, 1, 1},
    {3, 1, 3, 2, 3},
    {3, 2, 3, 1, 3},
    {3, 2, 3, 2, 5},
    // octahedron
    {3, 1, 4, 1, 1},
    {3, 1, 4, 3, 7},
    {3, 2, 4, 1, 5},
    {3, 2, 4, 3, 11},
    // cube
    {4, 1, 3, 1, 1},
    {4, 1, 3, 2, 5},
    {4, 3, 3, 1, 7},
    {4, 3, 3, 2, 11},
    // icosahedron
    {3, 1, 5, 1, 1},
    {3, 1, 5, 4, 19},
    {3, 2, 5, 1, 11},
    {3, 2, 5, 4, 29},
    // great icosahedron
    {3, 1, 5, 2, 7},
    {3, 1, 5, 3, 13},
    {3, 2, 5, 2, 17},
    {3, 2, 5, 3, 23},
    // dodecahedron
    {5, 1, 3, 1, 1},
    {5, 1, 3, 2, 11},
    {5, 4, 3, 1, 19},
    {5, 4, 3, 2, 29},
    // great stellated dodecahedron
    {5, 2, 3, 1, 7},
    {5, 2, 3, 2, 17},
    {5, 3, 3, 1, 13},
    {5, 3, 3, 2, 23},
    // great dodecahedron
    {5, 1, 5, 2, 3},
    {5, 1, 5, 3, 9},
    {5, 4, 5, 2, 21},
    {5, 4, 5, 3, 27},
    // small stellated dodecahedron
    {5, 2, 5, 1, 3},
    {5, 2, 5, 4, 21},
    {5, 3, 5, 1, 9},
    {5, 3, 5, 4, 27},
}};

}  // namespace

int density(const RepresentationEntry& e) {
  // E * (i/m + j/n - 1/2) with denominator 2mn.
  long long m = e.cell.p, i = e.cell.q, n = e.vertex_figure.p, j = e.vertex_figure.q;
  long long num = static_cast<long long>(e.E) * (2 * i * n + 2 * j * m - m * n);
  long long den = 2 * m * n;
  if (num <= 0 || num % den != 0)
    fail(ErrorKind::Constraint, "density: not a positive integer for (" + format(e.cell) +
                                    ", " + format(e.vertex_figure) + ")");
  return static_cast<int>(num / den);
}

int genus(const RepresentationEntry& e) {
  int chi = e.V - e.E + e.F;
  if ((2 - chi) % 2 != 0 || chi > 2)
    fail(ErrorKind::Constraint, "genus: bad Euler characteristic");
  return (2 - chi) / 2;
}

std::vector<RepresentationEntry> enumerate_table2() {
  std::vector<RepresentationEntry> out;
  for (const auto& c : kTable36) {
    RepresentationEntry e;
    e.cell = make_fraction(c.m, c.i);
    e.vertex_figure = make_fraction(c.n, c.j);
    BaseCounts b = base_for(c.m, c.n);
    e.base = nine_name(c.m, c.i, c.n, c.j);
    e.V = b.V;
    e.E = b.E;
    e.F = b.F;
    e.stored_density = c.density;
    int computed = density(e);
    if (computed != e.stored_density)
      fail(ErrorKind::Internal, "enumerate_table2: density mismatch at (" +
                                    format(e.cell) + ", " + format(e.vertex_figure) +
                                    "): computed " + std::to_string(computed) +
                                    ", stored " + std::to_string(e.stored_density));
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    auto key = [](const RepresentationEntry& e) {
      return std::array<int, 4>{e.cell.p, e.cell.q, e.vertex_figure.p, e.vertex_figure.q};
    };
    return key(a) < key(b);
  });
  return out;
}

RepresentationEntry doubled_polygon_entry(bool cell_is_digon, const Fraction& f) {
  RepresentationEntry e;
  if (cell_is_digon) {
    e.cell = make_fraction(2, 1);
    e.vertex_figure = f;
  } else {
    e.cell = f;
    e.vertex_figure = make_fraction(2, 1);
  }
  e.base = "doubled " + format(f) + "-gon";
  int m = f.p;
  e.V = m;
  e.E = m;
  e.F = 2;
  e.stored_density = f.q;
  return e;
}

std::optional<RepresentationEntry> table2_lookup(const Fraction& cell,
                                                 const Fraction& vf) {
  if (cell.p == 2) return doubled_polygon_entry(true, vf);
  if (vf.p == 2) return doubled_polygon_entry(false, cell);
  for (const auto& c : kTable36)
    if (c.m == cell.p && c.i == cell.q && c.n == vf.p && c.j == vf.q) {
      for (auto& e : enumerate_table2())
        if (e.cell == cell && e.vertex_figure == vf) return e;
    }
  return std::nullopt;
}

}  // namespace cutlattice
