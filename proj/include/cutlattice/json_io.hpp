#ifndef CUTLATTICE_JSON_IO_HPP
#define CUTLATTICE_JSON_IO_HPP

#include <json.hpp>

#include "cutlattice/atlas.hpp"
#include "cutlattice/embedding.hpp"
#include "cutlattice/hypermetrics.hpp"
#include "cutlattice/riemann.hpp"
#include "cutlattice/skeleton.hpp"

namespace cutlattice {

using Json = nlohmann::ordered_json;

// Skeleton interchange format, the lingua franca of the CLI:
// {"name", "symbol"?, "n", "adj", "core"?, "faces"?, "coords"?,
//  "radius"?, "margin"?}. Field order is stable.
Json skeleton_to_json(const Skeleton& g);
Json patch_to_json(const Patch& p);

// Unified loader: restores the patch structure (rotation derived from the
// face list) when faces are present.
struct LoadedGraph {
  Skeleton g;
  std::optional<Patch> patch;
};
LoadedGraph graph_from_json(const Json& j);

Json embedding_to_json(const Embedding& e);
Embedding embedding_from_json(const Json& j);

Json cuts_to_json(const CutDecomposition& d);
CutDecomposition cuts_from_json(const Json& j);

Json certificate_to_json(const ViolationCertificate& c);
ViolationCertificate certificate_from_json(const Json& j);

Json distance_matrix_to_json(const DistanceMatrix& d);  // inf encoded as -1
std::string distance_matrix_to_csv(const DistanceMatrix& d);

Json atlas_entry_to_json(const AtlasEntry& e);

Json representation_to_json(const RepresentationEntry& e);
Json table2_to_json();                 // the 36 entries
std::string table2_to_text();          // aligned grid including the doubled families

}  // namespace cutlattice

#endif
