#ifndef CUTLATTICE_TILING_HPP
#define CUTLATTICE_TILING_HPP

#include "cutlattice/skeleton.hpp"

namespace cutlattice {

inline constexpr int kDefaultPatchVertexBudget = 400'000;

// Ball of combinatorial radius R+M around a base vertex of the Euclidean or
// hyperbolic tiling {p,q}, grown ring by ring over the rotation system and
// then truncated to the ball. Vertices within distance R are flagged core.
// Faces are present whenever all their vertices are. Purely combinatorial;
// no floating-point geometry.
Patch tiling_patch(const SchlafliSymbol& sym, int radius, int margin,
                   int vertex_budget = 0);

// Full combinatorial polyhedron for a spherical convex {p,q}: one of the five
// Platonic solids, or the degenerate {2,m} (single edge, m digon faces) and
// {m,2} (m-gon with two faces). All vertices are core.
Patch platonic(const SchlafliSymbol& sym);

// Dispatch on curvature: platonic for spherical symbols, tiling_patch
// otherwise. Margin < 0 means the default margin M = p.
Patch make_patch(const SchlafliSymbol& sym, int radius, int margin = -1,
                 int vertex_budget = 0);

// Skeleton of the star-honeycomb {m/2, m}, m odd >= 5: vertex set of a {3,m}
// patch; the cell at each interior vertex v joins every second neighbor of v
// in rotation order. Core vertices are those within distance R of the base
// vertex whose incident cells are all complete.
Skeleton star_honeycomb_skeleton(int m, int radius, int vertex_budget = 0);

// The three coordinate-built regular 4-polytopes.
Skeleton regular_4polytope(const std::string& name);  // "24-cell"|"600-cell"|"120-cell"

// Skeleton of one of the ten star-4-polytopes, by Schlafli symbol.
Skeleton star_4polytope(const SchlafliSymbol& sym);

// Orients the face set of a disc or sphere complex consistently and derives
// the rotation system (cyclic neighbor order; arcs at boundary vertices).
// Throws Error(Domain) if some edge lies in more than two faces or the
// orientation cannot be propagated.
std::vector<std::vector<int>> rotation_from_faces(int n,
                                                  std::vector<std::vector<int>>& faces);

}  // namespace cutlattice

#endif
