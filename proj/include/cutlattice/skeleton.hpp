#ifndef CUTLATTICE_SKELETON_HPP
#define CUTLATTICE_SKELETON_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cutlattice/error.hpp"
#include "cutlattice/schlafli.hpp"

namespace cutlattice {

// Finite undirected simple graph with optional coordinates and a trusted-core
// marking for patches of infinite tilings. Adjacency lists are kept sorted;
// construction is deterministic so identical inputs reproduce identical
// vertex numbering.
struct Skeleton {
  std::string name;
  std::optional<std::string> symbol;
  int n = 0;
  std::vector<std::vector<int>> adj;
  std::optional<std::vector<bool>> core;
  std::optional<std::vector<std::vector<double>>> coords;

  int vertex_count() const { return n; }
  long long edge_count() const;
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  bool has_edge(int u, int v) const;
  bool is_core(int v) const { return !core || (*core)[v]; }
  std::vector<int> core_vertices() const;

  void add_edge(int u, int v);
  void sort_adjacency();
  // Throws Error(Internal) on asymmetric adjacency, loops or out-of-range ids.
  void validate() const;
};

Skeleton make_skeleton(std::string name, int n);

// Skeleton plus the planar-structure data of a tiling patch: per-vertex
// cyclic neighbor order, face cycles, and the generation radii.
struct Patch {
  Skeleton g;
  std::vector<std::vector<int>> rotation;  // cyclic for interior, arc for boundary
  std::vector<std::vector<int>> faces;     // vertex cycles
  int radius = 0;
  int margin = 0;

  // True interior vertex of a {p,q} patch: all q faces present.
  bool interior(int v) const;
  std::vector<int> face_count_per_vertex() const;
};

// --- elementary constructions -------------------------------------------

Skeleton complete_graph(int n);                 // K_n (alpha_{n-1})
Skeleton cocktail_party(int n);                 // K_{n x 2} (beta_n skeleton)
Skeleton hypercube(int m);                      // Q_m (gamma_m skeleton)
Skeleton half_cube(int m);                      // even-weight m-vectors, Hamming distance 2
Skeleton petersen();
Skeleton cycle(int n);                          // C_n
Skeleton path(int n_edges);                     // path with n_edges edges
Skeleton cycle_product(int a, int b);           // C_a x C_b (Cartesian), torus map {4,4|m} family
Skeleton pyramid(const Skeleton& base);         // one apex adjacent to every vertex of base
Skeleton k5_minus_k3();                         // K_5 minus a triangle
Skeleton lattice_ball(int m, int r);            // l1-ball of Z^m, core = radius r-1

enum class PolytopeFamily { Simplex, CrossPolytope, Cube };
Skeleton polytope_family(PolytopeFamily kind, int n);

// name in {petersen, K<n>, K<n>x2, Q<m>, halfQ<m>, C<n>, alpha<n>, beta<n>,
// gamma<n>, K5-K3}; unknown names raise Error(Domain).
Skeleton named_graph(const std::string& name);

// Quotient by the unique antipodal involution: requires each vertex to have
// exactly one vertex at maximum (= diameter) distance and the resulting
// pairing to be a fixed-point-free automorphism. Parallel edges collapse.
Skeleton antipodal_quotient(const Skeleton& g);

// Graph isomorphism by degree-refined backtracking; intended for the small
// catalog graphs (tested up to a few hundred vertices).
bool isomorphic(const Skeleton& a, const Skeleton& b);

bool is_bipartite(const Skeleton& g, std::vector<int>* coloring = nullptr);

}  // namespace cutlattice

#endif
