#ifndef CUTLATTICE_HYPERMETRICS_HPP
#define CUTLATTICE_HYPERMETRICS_HPP

#include <optional>
#include <vector>

#include "cutlattice/metrics.hpp"
#include "cutlattice/skeleton.hpp"

namespace cutlattice {

// Coefficients of a (2k+1)-gonal inequality on a tuple of distinct vertices:
// entries +-1 with sum +1 (k+1 positive, k negative up to global negation).
struct BVector {
  std::vector<int> b;

  static BVector kgonal(int k);  // k in {5,7}: (1,1,1,-1,-1), (1,1,1,1,-1,-1,-1)
  void validate() const;
};

// A violated inequality: sum of within-group distances (lhs) exceeds the sum
// of cross distances (rhs). Recheckable from the distance submatrix alone.
struct ViolationCertificate {
  int k = 5;
  std::vector<int> positive;  // vertices with b_i = +1
  std::vector<int> negative;  // vertices with b_i = -1
  long long lhs = 0, rhs = 0;
  std::vector<std::vector<int>> dist;  // submatrix in (positive, negative) order

  std::vector<int> tuple() const;  // positive followed by negative
};

struct KgonalResult {
  bool holds = true;
  std::optional<ViolationCertificate> certificate;
};

// Evaluates sum_{i<j} b_i b_j d_ij <= 0 on the tuple.
KgonalResult kgonal_check(const DistanceMatrix& d, const std::vector<int>& tuple,
                          const BVector& b);

enum class SearchMode { First, All };

struct SearchOptions {
  SearchMode mode = SearchMode::First;
  long long tuple_budget = 200'000'000;  // enumerated tuples before Limit error
  int threads = 0;                       // 0 = hardware default
  std::optional<std::vector<int>> restrict_to;  // search only inside this subset
};

// Searches for k-gonal violations, k in {5,7}. First mode scans small-
// diameter neighborhoods first (all known violations of the catalog live in
// them), then falls back to full lexicographic enumeration, so an empty
// result is still exhaustive. All/restricted modes enumerate exhaustively.
std::vector<ViolationCertificate> find_violation(const Skeleton& g, int k,
                                                 const SearchOptions& opts = {});

// Re-evaluates a certificate against a distance matrix.
bool recheck_certificate(const ViolationCertificate& c, const DistanceMatrix& d);

}  // namespace cutlattice

#endif
