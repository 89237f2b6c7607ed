#ifndef CUTLATTICE_METRICS_HPP
#define CUTLATTICE_METRICS_HPP

#include <cstdint>
#include <vector>

#include "cutlattice/skeleton.hpp"

namespace cutlattice {

// Exact all-pairs distances, 16-bit with an explicit infinity sentinel.
// Every catalog graph has diameter well under the sentinel.
class DistanceMatrix {
 public:
  static constexpr uint16_t kInf = 0xFFFF;

  DistanceMatrix() = default;
  DistanceMatrix(int n) : n_(n), d_(static_cast<size_t>(n) * n, kInf) {}

  int size() const { return n_; }
  uint16_t operator()(int u, int v) const { return d_[static_cast<size_t>(u) * n_ + v]; }
  void set(int u, int v, uint16_t val) {
    d_[static_cast<size_t>(u) * n_ + v] = val;
    d_[static_cast<size_t>(v) * n_ + u] = val;
  }
  bool connected() const;

 private:
  int n_ = 0;
  std::vector<uint16_t> d_;
};

// Breadth-first search from every source.
DistanceMatrix apsp(const Skeleton& g);

// Single-source distances, -1 for unreachable.
std::vector<int> bfs_from(const Skeleton& g, int src);

constexpr int kNoCycle = -1;  // infinity marker for girth/diameter

// Length of a shortest cycle; with restrict_to_core only cycles through at
// least one core vertex count. Forests return kNoCycle.
int girth(const Skeleton& g, bool restrict_to_core = false);

// Max finite distance; kNoCycle if disconnected.
int diameter(const Skeleton& g);

// True iff H (induced in G via vertex_map) is isometric: d_H == d_G on all
// mapped pairs. Throws if the map is not injective or H is not the induced
// subgraph on its image.
bool is_isometric_subgraph(const Skeleton& h, const Skeleton& g,
                           const std::vector<int>& vertex_map);

// Regenerates the {p,q} patch at margins M and M+2 and compares all
// core-to-core distances.
bool distance_stability(const SchlafliSymbol& sym, int radius, int margin,
                        int vertex_budget = 0);

}  // namespace cutlattice

#endif
