#include "cutlattice/metrics.hpp"

#include <algorithm>
#include <queue>

#include "cutlattice/tiling.hpp"

namespace cutlattice {

bool DistanceMatrix::connected() const {
  for (uint16_t v : d_)
    if (v == kInf) return false;
  return true;
}

std::vector<int> bfs_from(const Skeleton& g, int src) {
  std::vector<int> d(g.n, -1);
  std::queue<int> q;
  d[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : g.adj[v])
      if (d[u] < 0) {
        d[u] = d[v] + 1;
        q.push(u);
      }
  }
  return d;
}

DistanceMatrix apsp(const Skeleton& g) {
  if (g.n == 0) fail(ErrorKind::Domain, "apsp: empty graph");
  DistanceMatrix m(g.n);
  for (int s = 0; s < g.n; ++s) {
    auto d = bfs_from(g, s);
    for (int v = 0; v < g.n; ++v)
      if (d[v] >= 0) m.set(s, v, static_cast<uint16_t>(d[v]));
  }
  return m;
}

namespace {

// Shortest cycle through root: BFS with first-step branch labels. Only
// cross-edges joining distinct branches close a simple cycle through root,
// which is exactly what the core-restricted mode needs.
int shortest_cycle_through(const Skeleton& g, int root, int bound) {
  std::vector<int> dist(g.n, -1), branch(g.n, -1);
  std::queue<int> q;
  dist[root] = 0;
  branch[root] = -2;
  for (int u : g.adj[root]) {
    dist[u] = 1;
    branch[u] = u;
    q.push(u);
  }
  int best = bound;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    if (2 * dist[v] >= best) break;
    for (int u : g.adj[v]) {
      if (u == root) continue;
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        branch[u] = branch[v];
        q.push(u);
      } else if (branch[u] != branch[v]) {
        best = std::min(best, dist[u] + dist[v] + 1);
      }
    }
  }
  return best;
}

}  // namespace

int girth(const Skeleton& g, bool restrict_to_core) {
  int best = kNoCycle;
  int bound = g.n + 1;
  for (int v = 0; v < g.n; ++v) {
    if (restrict_to_core && !g.is_core(v)) continue;
    int c = shortest_cycle_through(g, v, best == kNoCycle ? bound : best);
    if (c < bound && (best == kNoCycle || c < best)) best = c;
    if (best == 3) break;
  }
  return best;
}

int diameter(const Skeleton& g) {
  int diam = 0;
  for (int s = 0; s < g.n; ++s) {
    auto d = bfs_from(g, s);
    for (int v = 0; v < g.n; ++v) {
      if (d[v] < 0) return kNoCycle;
      diam = std::max(diam, d[v]);
    }
  }
  return diam;
}

bool is_isometric_subgraph(const Skeleton& h, const Skeleton& g,
                           const std::vector<int>& vertex_map) {
  if (static_cast<int>(vertex_map.size()) != h.n)
    fail(ErrorKind::Constraint, "is_isometric_subgraph: map size != |V(H)|");
  std::vector<int> seen;
  for (int x : vertex_map) {
    if (x < 0 || x >= g.n) fail(ErrorKind::Constraint, "is_isometric_subgraph: map out of range");
    seen.push_back(x);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    fail(ErrorKind::Constraint, "is_isometric_subgraph: map not injective");
  for (int u = 0; u < h.n; ++u)
    for (int v = u + 1; v < h.n; ++v)
      if (h.has_edge(u, v) != g.has_edge(vertex_map[u], vertex_map[v]))
        fail(ErrorKind::Constraint, "is_isometric_subgraph: H is not induced under the map");

  auto dh = apsp(h);
  for (int u = 0; u < h.n; ++u) {
    auto dg = bfs_from(g, vertex_map[u]);
    for (int v = 0; v < h.n; ++v) {
      int inner = dh(u, v) == DistanceMatrix::kInf ? -1 : dh(u, v);
      if (inner != dg[vertex_map[v]]) return false;
    }
  }
  return true;
}

bool distance_stability(const SchlafliSymbol& sym, int radius, int margin,
                        int vertex_budget) {
  Patch a = tiling_patch(sym, radius, margin, vertex_budget);
  Patch b = tiling_patch(sym, radius, margin + 2, vertex_budget);
  // Both generators enumerate vertices in the same deterministic growth
  // order, so cores correspond by rank.
  auto ca = a.g.core_vertices();
  auto cb = b.g.core_vertices();
  if (ca.size() != cb.size())
    fail(ErrorKind::Internal, "distance_stability: core sizes differ");
  for (size_t i = 0; i < ca.size(); ++i) {
    auto da = bfs_from(a.g, ca[i]);
    auto db = bfs_from(b.g, cb[i]);
    for (size_t j = 0; j < ca.size(); ++j)
      if (da[ca[j]] != db[cb[j]]) return false;
  }
  return true;
}

}  // namespace cutlattice
