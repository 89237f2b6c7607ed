#ifndef CUTLATTICE_EMBEDDING_HPP
#define CUTLATTICE_EMBEDDING_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cutlattice/bits.hpp"
#include "cutlattice/metrics.hpp"
#include "cutlattice/skeleton.hpp"

namespace cutlattice {

// Scale-lambda embedding into the dim-cube: per-vertex binary labels with
// lambda * d_G(u,v) = Hamming(label_u, label_v).
struct Embedding {
  int scale = 1;
  int dim = 0;
  std::vector<BitLabel> labels;
};

struct VerifyResult {
  bool valid = false;
  int witness_u = -1, witness_v = -1;  // first failing pair when invalid
  std::string reason;
};

// Checks the defining equality on all (core) vertex pairs.
VerifyResult verify_embedding(const Skeleton& g, const Embedding& e,
                              bool restrict_to_core = false);

// Multiset of cut semimetrics with multiplicities realizing lambda * d.
struct CutDecomposition {
  struct Cut {
    std::vector<int> side;
    long long mult = 1;
  };
  int scale = 1;
  std::vector<Cut> cuts;

  long long total_multiplicity() const;
};

// True iff sum mult * delta_S == scale * d for all pairs.
bool decomposition_matches(const CutDecomposition& dec, const DistanceMatrix& d);

Embedding embedding_from_decomposition(int n, const CutDecomposition& dec);

// --- partial cubes ---------------------------------------------------------

struct PartialCubeResult {
  bool is_partial_cube = false;
  std::string reason;                              // set when not a partial cube
  std::optional<Embedding> embedding;              // scale 1
  std::vector<std::vector<std::pair<int, int>>> classes;  // Djokovic-Winkler edge classes
};

// Scale-1 recognizer: computes the Djokovic-Winkler edge relation, takes its
// transitive closure, checks every class cuts the graph in two, and verifies
// the resulting labeling.
PartialCubeResult partial_cube(const Skeleton& g);

// --- catalog ---------------------------------------------------------------

std::vector<std::string> catalog_names();
Skeleton catalog_graph(const std::string& name);
// Stored-or-constructed embedding; always re-verified before returning.
Embedding catalog_embedding(const std::string& name);

// Exhaustive scale-lambda label search in the m-cube; vertex 0 is pinned to
// the zero label and coordinates are introduced in first-use order, so the
// result is reproducible. Small graphs only.
std::optional<Embedding> exhaustive_label_search(const Skeleton& g, int scale, int m,
                                                 long long node_budget = 50'000'000);

// C_n at scale 1 (even n, dim n/2) or scale 2 (any n, dim n).
Embedding cycle_embedding(int n, int scale);

// --- simplex scale arithmetic ----------------------------------------------

struct Remark4Params {
  int n = 0;
  long long mn_num = 0, mn_den = 1;  // m_n = 2n/(n+1) odd n, (2n+2)/(n+2) even n
  int lambda_n = 0;                  // least even t with t*m_n integral
  int target_dim = 0;                // lambda_n * m_n
  int mu_lower = 0;                  // 2*ceil(n/4)
};

Remark4Params remark4(int n);

// The half-cube embedding of alpha_n and the extremal-ratio embedding
// (dim/scale = m_n); both verified.
std::pair<Embedding, Embedding> two_embeddings_of_simplex(int n);

// Equal up to coordinate permutation, per-coordinate complementation and
// label translation.
bool equivalent_embeddings(const Embedding& a, const Embedding& b);

// --- balanced arcs (circuit coordinate-step bookkeeping) --------------------

// Checks the arc-balance condition on a shortest circuit: for even length,
// the opposite arc carries the same coordinate steps reversed; for odd
// length, the two nearly-opposite arcs each contribute half. The cycle must
// have girth length, or girth+1 when the girth is even.
bool balanced_arcs_check(const Skeleton& g, const Embedding& e,
                         const std::vector<int>& cycle);

}  // namespace cutlattice

#endif
