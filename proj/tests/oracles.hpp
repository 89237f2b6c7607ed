// Independent test oracles. These deliberately reimplement functionality of
// the library with different algorithms; they stay out of the shipped code.
#ifndef CUTLATTICE_TEST_ORACLES_HPP
#define CUTLATTICE_TEST_ORACLES_HPP

#include <optional>
#include <vector>

#include "cutlattice/embedding.hpp"
#include "cutlattice/skeleton.hpp"

namespace cutlattice::oracles {

// Floyd-Warshall all-pairs distances, -1 for unreachable.
std::vector<std::vector<int>> floyd_warshall(const Skeleton& g);

// Exact girth by per-vertex "shortest cycle through v" = min over neighbor
// pairs a,b of d_{G-v}(a,b) + 2.
int brute_girth(const Skeleton& g, bool restrict_to_core);

// Exhaustive 5-gonal check over all vertex 5-tuples and sign assignments.
bool brute_five_gonal_holds_everywhere(const Skeleton& g);

// Brute-force search for a scale-lambda labeling with at most max_dim
// coordinates (unbounded-ish; tiny graphs only).
bool brute_embeddable(const Skeleton& g, int scale, int max_dim);

// Simple bounded multiset search over all cuts (not the library's solver).
std::optional<CutDecomposition> brute_cut_decomposition(const Skeleton& g, int scale);

}  // namespace cutlattice::oracles

#endif
