#ifndef CUTLATTICE_RIEMANN_HPP
#define CUTLATTICE_RIEMANN_HPP

#include <optional>
#include <string>
#include <vector>

#include "cutlattice/schlafli.hpp"

namespace cutlattice {

// One spherical representation (cell m/i, vertex figure n/j) of a regular
// polyhedron or of a doubled polygon, with its underlying surface counts.
struct RepresentationEntry {
  Fraction cell;
  Fraction vertex_figure;
  std::string base;  // underlying abstract surface
  int V = 0, E = 0, F = 0;
  int stored_density = 0;
};

// density = E * (i/m + j/n - 1/2), exact rational arithmetic; throws when the
// result is not a positive integer (a malformed entry).
int density(const RepresentationEntry& e);

// genus = (2 - (V - E + F)) / 2; throws on odd Euler characteristic.
int genus(const RepresentationEntry& e);

// The 36 representations of the nine regular polyhedra on the sphere, each
// checked against its stored density. Deterministic order: by cell then
// vertex figure.
std::vector<RepresentationEntry> enumerate_table2();

// Doubled-polygon entries (2/1, f) and (f, 2/1); density works out to the
// turning number of f.
RepresentationEntry doubled_polygon_entry(bool cell_is_digon, const Fraction& f);

// Entry lookup across the 36 plus the doubled families at the table's
// concrete fractions; nullopt when the representation does not exist.
std::optional<RepresentationEntry> table2_lookup(const Fraction& cell,
                                                 const Fraction& vertex_figure);

}  // namespace cutlattice

#endif
