#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace cutlattice::oracles {

std::vector<std::vector<int>> floyd_warshall(const Skeleton& g) {
  const int INF = 1 << 28;
  std::vector<std::vector<int>> d(g.n, std::vector<int>(g.n, INF));
  for (int v = 0; v < g.n; ++v) d[v][v] = 0;
  for (int v = 0; v < g.n; ++v)
    for (int u : g.adj[v]) d[v][u] = 1;
  for (int k = 0; k < g.n; ++k)
    for (int i = 0; i < g.n; ++i)
      for (int j = 0; j < g.n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (int& x : row)
      if (x >= INF) x = -1;
  return d;
}

namespace {

std::vector<int> bfs_avoiding(const Skeleton& g, int src, int avoid) {
  std::vector<int> d(g.n, -1);
  std::vector<int> q = {src};
  d[src] = 0;
  for (size_t h = 0; h < q.size(); ++h) {
    int v = q[h];
    for (int u : g.adj[v]) {
      if (u == avoid || d[u] >= 0) continue;
      d[u] = d[v] + 1;
      q.push_back(u);
    }
  }
  return d;
}

}  // namespace

int brute_girth(const Skeleton& g, bool restrict_to_core) {
  int best = -1;
  for (int v = 0; v < g.n; ++v) {
    if (restrict_to_core && !g.is_core(v)) continue;
    // Shortest cycle through v: min over neighbor pairs of their distance in
    // G - v, plus the two edges at v.
    for (size_t i = 0; i < g.adj[v].size(); ++i) {
      auto d = bfs_avoiding(g, g.adj[v][i], v);
      for (size_t j = i + 1; j < g.adj[v].size(); ++j) {
        int between = d[g.adj[v][j]];
        if (between < 0) continue;
        int len = between + 2;
        if (best < 0 || len < best) best = len;
      }
    }
  }
  return best;
}

bool brute_five_gonal_holds_everywhere(const Skeleton& g) {
  auto d = floyd_warshall(g);
  std::vector<int> idx(5);
  std::vector<int> verts(g.n);
  std::iota(verts.begin(), verts.end(), 0);
  // All 5-subsets, all choices of the negative pair inside the subset.
  std::vector<int> comb;
  auto rec = [&](auto&& self, int start) -> bool {
    if (comb.size() == 5) {
      for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) {
          long long lhs = d[comb[a]][comb[b]], rhs = 0;
          std::vector<int> rest;
          for (int t = 0; t < 5; ++t)
            if (t != a && t != b) rest.push_back(comb[t]);
          for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) lhs += d[rest[i]][rest[j]];
          for (int t : {a, b})
            for (int r : rest) rhs += d[comb[t]][r];
          if (lhs > rhs) return false;
        }
      return true;
    }
    for (int v = start; v < g.n; ++v) {
      comb.push_back(v);
      if (!self(self, v + 1)) return false;
      comb.pop_back();
    }
    return true;
  };
  return rec(rec, 0);
}

bool brute_embeddable(const Skeleton& g, int scale, int max_dim) {
  auto d = floyd_warshall(g);
  // Assign label masks vertex by vertex; coordinates capped by max_dim with
  // first-use canonical ordering.
  std::vector<uint32_t> label(g.n, 0);
  auto rec = [&](auto&& self, int v, int used) -> bool {
    if (v == g.n) return true;
    int bits = std::min({max_dim, used + scale * d[0][v], 30});
    for (uint32_t cand = 0; cand < (1u << bits); ++cand) {
      // Canonical introduction: bits above `used` must be a prefix block.
      uint32_t high = cand >> used;
      if (high & (high + 1)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        ok = std::popcount(label[u] ^ cand) == scale * d[u][v];
      if (!ok) continue;
      label[v] = cand;
      int new_used = used;
      while (new_used < 32 && (cand >> new_used)) ++new_used;
      if (self(self, v + 1, new_used)) return true;
    }
    return false;
  };
  return rec(rec, 1, 0);
}

std::optional<CutDecomposition> brute_cut_decomposition(const Skeleton& g, int scale) {
  auto fw = floyd_warshall(g);
  int n = g.n;
  std::vector<uint32_t> cuts;
  for (uint32_t bits = 0; bits + 1 < (1u << (n - 1)); ++bits)
    cuts.push_back((bits << 1) | 1u);
  std::vector<int> mult(cuts.size(), 0);
  std::vector<std::vector<int>> need(n, std::vector<int>(n, 0));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) need[u][v] = scale * fw[u][v];
  auto rec = [&](auto&& self, size_t c) -> bool {
    bool done = true;
    for (int u = 0; u < n && done; ++u)
      for (int v = u + 1; v < n && done; ++v) done = need[u][v] == 0;
    if (done) return true;
    if (c == cuts.size()) return false;
    int cap = 1 << 28;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (((cuts[c] >> u) ^ (cuts[c] >> v)) & 1) cap = std::min(cap, need[u][v]);
    for (int m = cap; m >= 0; --m) {
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (((cuts[c] >> u) ^ (cuts[c] >> v)) & 1) {
            need[u][v] -= m;
            need[v][u] -= m;
          }
      mult[c] = m;
      if (self(self, c + 1)) return true;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (((cuts[c] >> u) ^ (cuts[c] >> v)) & 1) {
            need[u][v] += m;
            need[v][u] += m;
          }
      mult[c] = 0;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  CutDecomposition dec;
  dec.scale = scale;
  for (size_t c = 0; c < cuts.size(); ++c)
    if (mult[c] > 0) {
      CutDecomposition::Cut cut;
      cut.mult = mult[c];
      for (int v = 0; v < n; ++v)
        if ((cuts[c] >> v) & 1) cut.side.push_back(v);
      dec.cuts.push_back(cut);
    }
  return dec;
}

}  // namespace cutlattice::oracles
