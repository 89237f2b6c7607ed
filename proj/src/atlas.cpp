#include "cutlattice/atlas.hpp"

#include <map>

namespace cutlattice {

const char* to_string(AtlasStatus s) {
  switch (s) {
    case AtlasStatus::Embeddable: return "embeddable";
    case AtlasStatus::NonEmbeddable: return "non-embeddable";
    case AtlasStatus::OutOfCatalog: return "out-of-catalog";
  }
  return "?";
}

namespace {

AtlasEntry emb(std::string sym, std::string target, int scale, int dim,
               std::string family = "", std::string note = "") {
  AtlasEntry e;
  e.symbol = std::move(sym);
  e.status = AtlasStatus::Embeddable;
  e.target = std::move(target);
  e.scale = scale;
  e.dim = dim;
  e.family = std::move(family);
  e.note = std::move(note);
  return e;
}

AtlasEntry non(std::string sym, std::string reason, std::string note = "") {
  AtlasEntry e;
  e.symbol = std::move(sym);
  e.status = AtlasStatus::NonEmbeddable;
  e.reason = std::move(reason);
  e.note = std::move(note);
  return e;
}

const char* kFamGamma = "bipartite, cell gamma";
const char* kFamDelta = "bipartite, cell cubic-lattice";
const char* kFam63 = "bipartite, cell {6,3}";

// Status table for dimensions 3-5 (4-polytopes / honeycombs and up).
const std::map<std::string, AtlasEntry>& table_3to5() {
  static const std::map<std::string, AtlasEntry> t = [] {
    std::map<std::string, AtlasEntry> m;
    auto put = [&m](AtlasEntry e) { m[e.symbol] = std::move(e); };

    // dimension 3 (Table of 4-polytopes, 3-space and hyperbolic 3-space)
    put(emb("{3,3,3}", "half-cube", 2, 5, "simplex"));
    put(emb("{3,3,4}", "half-cube", 2, 4, "cross-polytope"));
    put(emb("{4,3,3}", "hypercube", 1, 4, "cube"));
    put(emb("{4,3,4}", "cubic lattice", 1, 3, "cubic-lattice"));
    put(emb("{4,3,5}", "cubic lattice Z_inf", 1, -1, kFamGamma));
    put(emb("{4,3,6}", "cubic lattice Z_inf", 1, -1, kFamGamma, "non-compact"));
    put(emb("{4,4,3}", "cubic lattice Z_inf", 1, -1, kFamDelta, "non-compact"));
    put(emb("{4,4,4}", "cubic lattice Z_inf", 1, -1, kFamDelta, "non-compact"));
    put(emb("{6,3,3}", "cubic lattice Z_inf", 1, -1, kFam63, "non-compact"));
    put(emb("{6,3,4}", "cubic lattice Z_inf", 1, -1, kFam63, "non-compact"));
    put(emb("{6,3,5}", "cubic lattice Z_inf", 1, -1, kFam63, "non-compact"));
    put(emb("{6,3,6}", "cubic lattice Z_inf", 1, -1, kFam63, "non-compact"));
    put(non("{3,4,3}", "5-gonal violation (24-cell)"));
    put(non("{3,3,5}", "7-gonal violation (600-cell)"));
    put(non("{5,3,3}", "5-gonal violation (120-cell)"));
    put(non("{3,3,6}", "contains induced K5-K3 (six triangles on an edge)"));
    put(non("{3,4,4}", "contains induced K5-K3 (four triangles on an edge)"));
    put(non("{3,6,3}", "contains induced K5-K3 (three triangles on an edge)"));
    put(non("{3,5,3}", "compact-case classification"));
    put(non("{5,3,4}", "compact-case classification"));
    put(non("{5,3,5}", "compact-case classification"));
    put(non("{5,3,6}", "contains induced non-5-gonal 11-vertex subgraph "
                       "(three disjoint pentagons over an edge)"));
    // the ten star-4-polytopes
    put(non("{5/2,5,3}", "5-gonal violation"));
    put(non("{5,5/2,3}", "5-gonal violation (skeleton of {5/2,5,3})"));
    put(non("{5/2,3,3}", "skeleton of the 120-cell"));
    for (const char* s : {"{3,3,5/2}", "{3,5,5/2}", "{5,5/2,5}", "{5/2,5,5/2}",
                          "{5,3,5/2}", "{5/2,3,5}", "{3,5/2,5}"})
      put(non(s, "skeleton of the 600-cell (7-gonal violation)"));

    // dimension 4
    put(emb("{3,3,3,3}", "half-cube", 2, 6, "simplex"));
    put(emb("{3,3,3,4}", "hypercube H_8", 4, 8, "cross-polytope",
            "minimal scale 4 (beta_5)"));
    put(emb("{4,3,3,3}", "hypercube", 1, 5, "cube"));
    put(emb("{4,3,3,4}", "cubic lattice", 1, 4, "cubic-lattice"));
    put(emb("{4,3,3,5}", "cubic lattice Z_inf", 1, -1, kFamGamma));
    put(emb("{4,3,4,3}", "cubic lattice Z_inf", 1, -1, kFamDelta, "non-compact"));
    put(non("{3,3,3,5}", "compact-case classification"));
    put(non("{3,3,4,3}", "contains isometric K5-K3"));
    put(non("{3,4,3,3}", "cell 24-cell is not 5-gonal"));
    put(non("{3,4,3,4}", "contains K5-K3 (in the cell)"));
    put(non("{5,3,3,3}", "compact-case classification (cell 120-cell)"));
    put(non("{5,3,3,4}", "compact-case classification (cell 120-cell)"));
    put(non("{5,3,3,5}", "compact-case classification (cell 120-cell)"));
    // the four hyperbolic star-honeycombs
    put(non("{5/2,5,3,3}", "cell contains induced K5-K3 (5-gonal violation)"));
    put(non("{3,3,5,5/2}", "cell 600-cell contains a pyramid over the icosahedron "
                           "(7-gonal violation)"));
    put(non("{3,5,5/2,5}", "cell isomorphic to the 600-cell (7-gonal violation)"));
    put(non("{5,5/2,5,3}", "cell isomorphic to the 600-cell (7-gonal violation)"));

    // dimension 5
    put(emb("{3,3,3,3,3}", "half-cube", 2, 7, "simplex"));
    put(emb("{3,3,3,3,4}", "hypercube H_8", 4, 8, "cross-polytope",
            "minimal scale mu_6 = 4"));
    put(emb("{4,3,3,3,3}", "hypercube", 1, 6, "cube"));
    put(emb("{4,3,3,3,4}", "cubic lattice", 1, 5, "cubic-lattice"));
    put(emb("{4,3,3,4,3}", "cubic lattice Z_inf", 1, -1, kFamDelta, "non-compact"));
    put(non("{3,3,3,4,3}", "contains a 6-vertex non-5-gonal subgraph "
                           "(isometric K5-K3 plus a common neighbor)"));
    put(non("{3,3,4,3,3}", "cell contains isometric K5-K3"));
    put(non("{3,4,3,3,3}", "contains K5-K3 (in the cell)"));
    put(non("{3,4,3,3,4}", "contains K5-K3 (in the cell)"));
    return m;
  }();
  return t;
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

AtlasEntry atlas_status(const SchlafliSymbol& sym) {
  std::string s = format(sym);
  if (sym.rank() == 2) {
    const auto& a = sym.entries[0];
    const auto& b = sym.entries[1];
    bool a_star = !a.infinite() && !a.frac->convex();
    bool b_star = !b.infinite() && !b.frac->convex();
    if (!a_star && !b_star) {
      // Convex {m,k}, including infinity entries: always embeddable.
      if (!a.infinite() && a.frac->p == 2) {
        if (b.infinite()) return emb(s, "hypercube H_1", 1, 1);
        return emb(s, "hypercube H_1", 1, 1);
      }
      if (!b.infinite() && b.frac->p == 2) {
        if (a.infinite()) return emb(s, "cubic lattice Z_1", 1, 1);
        int m = a.frac->p;
        if (m % 2)
          return emb(s, "half-cube", 2, m);
        return emb(s, "hypercube", 1, m / 2);
      }
      switch (classify(sym)) {
        case Curvature::Spherical: {
          int p = a.frac->p, q = b.frac->p;
          if (p == 3 && q == 3)
            return emb(s, "half-cube", 2, 3, "",
                       "also embeds into half-H_4; the tetrahedron is not l1-rigid");
          if (p == 4 && q == 3) return emb(s, "hypercube", 1, 3);
          if (p == 3 && q == 4) return emb(s, "half-cube", 2, 4);
          if (p == 3 && q == 5)
            return emb(s, "half-cube", 2, 6, "", "regular skew icosahedron: scale 2 into the 6-cube");
          if (p == 5 && q == 3) return emb(s, "half-cube", 2, 10);
          break;
        }
        case Curvature::Euclidean: {
          int p = a.frac->p;
          if (s == "{4,4}") return emb(s, "cubic lattice", 1, 2);
          if (s == "{3,6}") return emb(s, "half cubic lattice", 2, 3);
          if (s == "{6,3}") return emb(s, "cubic lattice", 1, 3);
          (void)p;
          break;
        }
        case Curvature::Hyperbolic: {
          bool odd_face = !a.infinite() && a.frac->p % 2 == 1;
          if (odd_face) return emb(s, "half cubic lattice Z_inf", 2, -1);
          return emb(s, "cubic lattice Z_inf", 1, -1);
        }
      }
    }
    // Star polyhedra and the planar star-honeycombs.
    if (s == "{5/2,5}" || s == "{5,5/2}" || s == "{3,5/2}")
      return emb(s, "half-cube", 2, 6, "", "skeleton of the icosahedron");
    if (s == "{5/2,3}")
      return emb(s, "half-cube", 2, 10, "", "skeleton of the dodecahedron");
    if (a_star && !b.infinite() && a.frac->p == b.frac->p && a.frac->q == 2 &&
        a.frac->p % 2 == 1 && a.frac->p >= 7)
      return non(s, "arc-balance obstruction on the girth circuit (girth m-1)");
    if (b_star && !a.infinite() && a.frac->p == b.frac->p && b.frac->q == 2 &&
        b.frac->p % 2 == 1 && b.frac->p >= 7)
      return emb(s, "half cubic lattice Z_inf", 2, -1, "",
                 "same skeleton as {3," + std::to_string(b.frac->p) + "}");
    AtlasEntry e;
    e.symbol = s;
    e.note = "no such regular tiling or honeycomb";
    return e;
  }

  const auto& table = table_3to5();
  if (auto it = table.find(s); it != table.end()) return it->second;

  // Infinite families for higher rank: {3,...,3}, {3,...,3,4}, {4,3,...,3},
  // {4,3,...,3,4}.
  int r = sym.rank();
  bool all_three = true;
  for (const auto& e : sym.entries)
    all_three = all_three && !e.infinite() && e.frac->p == 3 && e.frac->convex();
  auto entry_is = [&](int idx, int val) {
    const auto& e = sym.entries[idx];
    return !e.infinite() && e.frac->convex() && e.frac->p == val;
  };
  bool middle_three = true;
  for (int i = 1; i < r - 1; ++i) middle_three = middle_three && entry_is(i, 3);
  if (all_three) return emb(s, "half-cube", 2, r + 2, "simplex");
  if (middle_three && entry_is(0, 3) && entry_is(r - 1, 4)) {
    int n = r + 1;
    int mu = 2 * ceil_div(n, 4);
    return emb(s, "hypercube H_" + std::to_string(2 * mu), mu, 2 * mu, "cross-polytope",
               "minimal scale mu_n; equals 2*ceil(n/4) for n <= 80");
  }
  if (middle_three && entry_is(0, 4) && entry_is(r - 1, 3))
    return emb(s, "hypercube", 1, r + 1, "cube");
  if (r >= 3 && entry_is(0, 4) && entry_is(r - 1, 4)) {
    bool mid = true;
    for (int i = 1; i < r - 1; ++i) mid = mid && entry_is(i, 3);
    if (mid) return emb(s, "cubic lattice", 1, r, "cubic-lattice");
  }

  AtlasEntry e;
  e.symbol = s;
  e.note = "not in the status tables";
  return e;
}

std::vector<std::string> atlas_notes() {
  return {
      "{4,6|4} skew polyhedron: recorded claim: embeds into Z_3 (not verified here)",
      "{6,4|4} skew polyhedron: recorded claim: embeds into Z_6 (not verified here)",
      "{6,6|3} skew polyhedron: recorded claim: not 5-gonal (not verified here)",
      "{4,4|m} torus maps: products of two m-cycles; embed into half-H_{2m} for odd m "
      "and into H_m for even m (see cycle products)",
      "{6,4|3}, {4,6|3}, {8,4|3} skew 4-polytopes: recorded claim: not 5-gonal; "
      "{4,8|3} recorded as undecided",
      "genus-3 maps {3,8}_6 (Dyck), {3,7}_8 (Klein), {4,5}_5 and their duals: "
      "recorded claim: not 5-gonal",
  };
}

std::vector<std::string> atlas_table_symbols() {
  std::vector<std::string> out;
  for (const auto& [k, v] : table_3to5()) out.push_back(k);
  return out;
}

}  // namespace cutlattice
