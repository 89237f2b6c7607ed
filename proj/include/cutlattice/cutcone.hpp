#ifndef CUTLATTICE_CUTCONE_HPP
#define CUTLATTICE_CUTCONE_HPP

#include <optional>

#include "cutlattice/embedding.hpp"

namespace cutlattice {

struct CutconeResult {
  bool exists = false;
  std::optional<CutDecomposition> decomposition;
};

// Exact search for nonnegative integer cut multiplicities with
// sum mult * delta_S = scale * d over all 2^(n-1) - 1 canonical cuts
// (sides containing vertex 0). A negative answer is exhaustive and
// therefore a proof of non-embeddability at this scale. Throws
// Error(Limit) when n > n_max or the node budget runs out.
CutconeResult cutcone_decompose(const Skeleton& g, int scale, int n_max = 12,
                                long long node_budget = 400'000'000);

}  // namespace cutlattice

#endif
