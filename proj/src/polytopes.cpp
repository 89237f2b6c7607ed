#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "cutlattice/tiling.hpp"

namespace cutlattice {

namespace {

// Element a + b*phi of the golden ring Z[phi], phi^2 = phi + 1. Doubling the
// standard unit coordinates keeps every 600-cell vertex inside Z[phi], so all
// inner products are exact integers in this ring.
struct Zphi {
  long long a = 0, b = 0;

  friend Zphi operator+(Zphi x, Zphi y) { return {x.a + y.a, x.b + y.b}; }
  friend Zphi operator-(Zphi x, Zphi y) { return {x.a - y.a, x.b - y.b}; }
  friend Zphi operator*(Zphi x, Zphi y) {
    return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
  }
  friend bool operator==(const Zphi&, const Zphi&) = default;
  friend auto operator<=>(const Zphi&, const Zphi&) = default;

  double value() const { return a + b * 1.6180339887498948482; }
};

using Vec4 = std::array<Zphi, 4>;

Zphi dot(const Vec4& x, const Vec4& y) {
  Zphi s;
  for (int i = 0; i < 4; ++i) s = s + x[i] * y[i];
  return s;
}

// The 120 icosians, doubled: 8 permutations of (+-2,0,0,0), 16 sign choices
// of (+-1,+-1,+-1,+-1), 96 even permutations of (+-phi, +-1, +-(phi-1), 0).
std::vector<Vec4> doubled_icosians() {
  const Zphi zero{0, 0}, one{1, 0}, two{2, 0}, phi{0, 1}, phim1{-1, 1};
  std::vector<Vec4> pts;
  for (int pos = 0; pos < 4; ++pos)
    for (int s = -1; s <= 1; s += 2) {
      Vec4 v{zero, zero, zero, zero};
      v[pos] = Zphi{2 * s, 0};
      pts.push_back(v);
    }
  for (int mask = 0; mask < 16; ++mask) {
    Vec4 v;
    for (int i = 0; i < 4; ++i) v[i] = (mask >> i) & 1 ? Zphi{-1, 0} : one;
    pts.push_back(v);
  }
  std::array<int, 4> perm = {0, 1, 2, 3};
  std::vector<std::array<int, 4>> even_perms;
  do {
    int inv = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (perm[i] > perm[j]) ++inv;
    if (inv % 2 == 0) even_perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (const auto& pm : even_perms)
    for (int mask = 0; mask < 8; ++mask) {
      std::array<Zphi, 4> base = {phi, one, phim1, zero};
      int bit = 0;
      for (int i = 0; i < 3; ++i)
        if ((mask >> bit++) & 1) base[i] = Zphi{-base[i].a, -base[i].b};
      Vec4 v;
      for (int i = 0; i < 4; ++i) v[pm[i]] = base[i];
      pts.push_back(v);
    }
  std::sort(pts.begin(), pts.end());
  if (pts.size() != 120) fail(ErrorKind::Internal, "doubled_icosians: bad count");
  return pts;
}

Skeleton graph_from_coords(const std::string& name, const std::vector<Vec4>& pts,
                           Zphi edge_ip) {
  Skeleton g = make_skeleton(name, static_cast<int>(pts.size()));
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      if (dot(pts[i], pts[j]) == edge_ip)
        g.add_edge(static_cast<int>(i), static_cast<int>(j));
  g.sort_adjacency();
  std::vector<std::vector<double>> coords;
  for (const auto& p : pts)
    coords.push_back({p[0].value() / 2, p[1].value() / 2, p[2].value() / 2,
                      p[3].value() / 2});
  g.coords = std::move(coords);
  return g;
}

Skeleton cell_600() {
  // Nearest vertices of the 600-cell are at angle 36 degrees: doubled inner
  // product 2*phi.
  return graph_from_coords("600-cell", doubled_icosians(), Zphi{0, 2});
}

Skeleton cell_24() {
  std::vector<Vec4> pts;
  const Zphi zero{0, 0};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int si = -1; si <= 1; si += 2)
        for (int sj = -1; sj <= 1; sj += 2) {
          Vec4 v{zero, zero, zero, zero};
          v[i] = Zphi{si, 0};
          v[j] = Zphi{sj, 0};
          pts.push_back(v);
        }
  std::sort(pts.begin(), pts.end());
  return graph_from_coords("24-cell", pts, Zphi{1, 0});
}

// Tetrahedral cells of the 600-cell = 4-cliques of its skeleton; the dual
// 120-cell joins cells sharing a triangular face. Built this way, duality is
// directly testable against the coordinates.
Skeleton cell_120() {
  Skeleton c600 = cell_600();
  std::vector<std::array<int, 4>> cells;
  for (int a = 0; a < c600.n; ++a)
    for (int b : c600.adj[a]) {
      if (b < a) continue;
      for (int c : c600.adj[b]) {
        if (c < b || !c600.has_edge(a, c)) continue;
        for (int d : c600.adj[c]) {
          if (d < c || !c600.has_edge(a, d) || !c600.has_edge(b, d)) continue;
          cells.push_back({a, b, c, d});
        }
      }
    }
  std::sort(cells.begin(), cells.end());
  if (cells.size() != 600) fail(ErrorKind::Internal, "cell_120: expected 600 tetrahedra");

  Skeleton g = make_skeleton("120-cell", 600);
  std::map<std::array<int, 3>, std::vector<int>> by_face;
  for (size_t i = 0; i < cells.size(); ++i) {
    const auto& c = cells[i];
    for (int drop = 0; drop < 4; ++drop) {
      std::array<int, 3> f;
      int k = 0;
      for (int j = 0; j < 4; ++j)
        if (j != drop) f[k++] = c[j];
      by_face[f].push_back(static_cast<int>(i));
    }
  }
  for (const auto& [face, cs] : by_face) {
    if (cs.size() != 2) fail(ErrorKind::Internal, "cell_120: face not shared by 2 cells");
    g.add_edge(cs[0], cs[1]);
  }
  g.sort_adjacency();
  return g;
}

Skeleton stellated_120() {
  // Skeleton of {5/2,5,3} (and of {5,5/2,3}): the 120 icosians with edges at
  // unit inner product 1/2 (doubled: 2). The class is validated by its
  // counts: 120 vertices, 1200 edges, 20-regular.
  Skeleton g = graph_from_coords("{5/2,5,3}", doubled_icosians(), Zphi{2, 0});
  if (g.edge_count() != 1200)
    fail(ErrorKind::Internal, "stellated_120: wrong edge class");
  return g;
}

}  // namespace

Skeleton regular_4polytope(const std::string& name) {
  if (name == "24-cell") return cell_24();
  if (name == "600-cell") return cell_600();
  if (name == "120-cell") return cell_120();
  fail(ErrorKind::Domain, "regular_4polytope: unknown name '" + name + "'");
}

Skeleton star_4polytope(const SchlafliSymbol& sym) {
  if (sym.rank() != 3)
    fail(ErrorKind::Domain, "star_4polytope: need a rank-3 symbol, got " + format(sym));
  std::string s = format(sym);
  auto with_name = [&](Skeleton g) {
    g.name = s;
    g.symbol = s;
    return g;
  };
  // The ten Schlafli-Hess star-4-polytopes, by skeleton isomorphism class.
  if (s == "{5/2,5,3}" || s == "{5,5/2,3}") return with_name(stellated_120());
  if (s == "{5/2,3,3}") return with_name(cell_120());
  if (s == "{3,3,5/2}" || s == "{3,5,5/2}" || s == "{5,5/2,5}" || s == "{5/2,5,5/2}" ||
      s == "{5,3,5/2}" || s == "{5/2,3,5}" || s == "{3,5/2,5}")
    return with_name(cell_600());
  fail(ErrorKind::Domain, "star_4polytope: " + s + " is not a star-4-polytope");
}

}  // namespace cutlattice
