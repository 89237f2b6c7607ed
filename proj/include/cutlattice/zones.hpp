#ifndef CUTLATTICE_ZONES_HPP
#define CUTLATTICE_ZONES_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cutlattice/embedding.hpp"
#include "cutlattice/skeleton.hpp"

namespace cutlattice {

struct ZoneEmbedResult {
  bool ok = false;
  std::string reason;          // on failure: why tracing/verification failed
  Embedding embedding;         // scale 1 (all faces even) or 2
  CutDecomposition cuts;       // one unit cut per effective zone
  std::vector<std::vector<std::pair<int, int>>> zone_edges;  // odd-crossing edges per cut
  std::optional<std::vector<int>> families;  // per cut: parallel-direction class
  int family_count = 0;
};

// Alternated-zone embedder for planar patches (and closed sphere patches).
// Even faces pass zones straight through; odd faces split the two edge
// tokens to the two nearly-opposite edges. Zones become cuts via crossing
// parity from a base vertex; the result is returned only after verify()
// succeeds on the (core) vertex pairs. Failure is never evidence of
// non-embeddability.
ZoneEmbedResult zone_embed(const Patch& p);

// Groups edge sets (zones or Djokovic-Winkler classes) of the three
// Euclidean tilings {4,4}, {6,3}, {3,6} into parallel-direction families.
// Returns per-set family ids plus the family count, or nullopt when the
// patch is not one of those tilings.
std::optional<std::pair<std::vector<int>, int>> direction_families(
    const Patch& p, const std::vector<std::vector<std::pair<int, int>>>& edge_sets);

}  // namespace cutlattice

#endif
