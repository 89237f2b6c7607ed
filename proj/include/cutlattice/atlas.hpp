#ifndef CUTLATTICE_ATLAS_HPP
#define CUTLATTICE_ATLAS_HPP

#include <string>
#include <vector>

#include "cutlattice/schlafli.hpp"

namespace cutlattice {

enum class AtlasStatus { Embeddable, NonEmbeddable, OutOfCatalog };

struct AtlasEntry {
  std::string symbol;
  AtlasStatus status = AtlasStatus::OutOfCatalog;
  // Embeddable entries: target space and scale. dim -1 means Z_infinity
  // (unbounded dimension).
  std::string target;
  int scale = 0;
  int dim = 0;
  std::string family;  // grouping of the d>=3 embeddable cases
  std::string reason;  // certificate kind or classification for the rest
  std::string note;
};

const char* to_string(AtlasStatus s);

// Status of a regular tiling / honeycomb symbol: curvature-based rules for
// the planar cases, transcribed status tables plus the infinite families
// (simplex, cross-polytope, cube, cubic lattice) for dimension >= 3.
AtlasEntry atlas_status(const SchlafliSymbol& sym);

// Claims about objects outside the symbol catalog (skew polyhedra, torus
// maps, genus-3 maps), recorded as data without verification.
std::vector<std::string> atlas_notes();

// Every symbol with an explicit table entry (used by the report and tests).
std::vector<std::string> atlas_table_symbols();

}  // namespace cutlattice

#endif
