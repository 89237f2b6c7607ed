#include "cutlattice/skeleton.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <queue>
#include <set>

namespace cutlattice {

long long Skeleton::edge_count() const {
  long long deg_sum = 0;
  for (const auto& nb : adj) deg_sum += static_cast<long long>(nb.size());
  return deg_sum / 2;
}

bool Skeleton::has_edge(int u, int v) const {
  const auto& nb = adj[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<int> Skeleton::core_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (is_core(v)) out.push_back(v);
  return out;
}

void Skeleton::add_edge(int u, int v) {
  adj[u].push_back(v);
  adj[v].push_back(u);
}

void Skeleton::sort_adjacency() {
  for (auto& nb : adj) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
}

void Skeleton::validate() const {
  if (static_cast<int>(adj.size()) != n)
    fail(ErrorKind::Internal, name + ": adjacency size != n");
  for (int v = 0; v < n; ++v) {
    for (int u : adj[v]) {
      if (u < 0 || u >= n) fail(ErrorKind::Internal, name + ": neighbor out of range");
      if (u == v) fail(ErrorKind::Internal, name + ": loop at vertex " + std::to_string(v));
      if (!has_edge(u, v)) fail(ErrorKind::Internal, name + ": asymmetric edge");
    }
    if (!std::is_sorted(adj[v].begin(), adj[v].end()))
      fail(ErrorKind::Internal, name + ": unsorted adjacency");
  }
  if (core && static_cast<int>(core->size()) != n)
    fail(ErrorKind::Internal, name + ": core flag size != n");
}

Skeleton make_skeleton(std::string name, int n) {
  Skeleton g;
  g.name = std::move(name);
  g.n = n;
  g.adj.assign(n, {});
  return g;
}

std::vector<int> Patch::face_count_per_vertex() const {
  std::vector<int> cnt(g.n, 0);
  for (const auto& f : faces)
    for (int v : f) ++cnt[v];
  return cnt;
}

bool Patch::interior(int v) const {
  // A vertex with a full rotation cycle has exactly as many faces as edges;
  // boundary fans always have fewer faces than edges.
  int cnt = 0;
  for (const auto& f : faces)
    for (int u : f)
      if (u == v) ++cnt;
  return cnt == g.degree(v) && cnt >= 3;
}

// --- elementary constructions -------------------------------------------

Skeleton complete_graph(int n) {
  if (n < 1) fail(ErrorKind::Constraint, "complete_graph: n >= 1 required");
  Skeleton g = make_skeleton("K" + std::to_string(n), n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  g.sort_adjacency();
  return g;
}

Skeleton cocktail_party(int n) {
  if (n < 1) fail(ErrorKind::Constraint, "cocktail_party: n >= 1 required");
  // Vertices 2i, 2i+1 form the i-th non-adjacent pair.
  Skeleton g = make_skeleton("K" + std::to_string(n) + "x2", 2 * n);
  for (int u = 0; u < 2 * n; ++u)
    for (int v = u + 1; v < 2 * n; ++v)
      if (u / 2 != v / 2) g.add_edge(u, v);
  g.sort_adjacency();
  return g;
}

Skeleton hypercube(int m) {
  if (m < 0 || m > 20) fail(ErrorKind::Constraint, "hypercube: 0 <= m <= 20 required");
  Skeleton g = make_skeleton("Q" + std::to_string(m), 1 << m);
  for (int v = 0; v < g.n; ++v)
    for (int k = 0; k < m; ++k)
      if (!(v & (1 << k))) g.add_edge(v, v | (1 << k));
  g.sort_adjacency();
  return g;
}

Skeleton half_cube(int m) {
  if (m < 1 || m > 20) fail(ErrorKind::Constraint, "half_cube: 1 <= m <= 20 required");
  std::vector<int> verts;
  for (int v = 0; v < (1 << m); ++v)
    if (__builtin_popcount(v) % 2 == 0) verts.push_back(v);
  std::vector<int> index(1 << m, -1);
  for (size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);
  Skeleton g = make_skeleton("halfQ" + std::to_string(m), static_cast<int>(verts.size()));
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      if (__builtin_popcount(verts[i] ^ verts[j]) == 2)
        g.add_edge(static_cast<int>(i), static_cast<int>(j));
  g.sort_adjacency();
  return g;
}

Skeleton petersen() {
  // Kneser graph K(5,2): vertices = 2-subsets of {0..4}, edges = disjoint pairs.
  std::vector<std::pair<int, int>> subsets;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) subsets.push_back({a, b});
  Skeleton g = make_skeleton("petersen", 10);
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j) {
      auto [a, b] = subsets[i];
      auto [c, d] = subsets[j];
      if (a != c && a != d && b != c && b != d) g.add_edge(i, j);
    }
  g.sort_adjacency();
  return g;
}

Skeleton cycle(int n) {
  if (n < 3) fail(ErrorKind::Constraint, "cycle: n >= 3 required");
  Skeleton g = make_skeleton("C" + std::to_string(n), n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  g.sort_adjacency();
  return g;
}

Skeleton path(int n_edges) {
  if (n_edges < 0) fail(ErrorKind::Constraint, "path: n_edges >= 0 required");
  Skeleton g = make_skeleton("P" + std::to_string(n_edges), n_edges + 1);
  for (int v = 0; v < n_edges; ++v) g.add_edge(v, v + 1);
  g.sort_adjacency();
  return g;
}

Skeleton cycle_product(int a, int b) {
  if (a < 3 || b < 3) fail(ErrorKind::Constraint, "cycle_product: a,b >= 3 required");
  Skeleton g = make_skeleton("C" + std::to_string(a) + "xC" + std::to_string(b), a * b);
  auto id = [b](int i, int j) { return i * b + j; };
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) {
      g.add_edge(id(i, j), id((i + 1) % a, j));
      g.add_edge(id(i, j), id(i, (j + 1) % b));
    }
  g.sort_adjacency();
  return g;
}

Skeleton pyramid(const Skeleton& base) {
  Skeleton g = make_skeleton("pyramid(" + base.name + ")", base.n + 1);
  g.adj = base.adj;
  g.adj.push_back({});
  for (int v = 0; v < base.n; ++v) g.add_edge(v, base.n);
  g.sort_adjacency();
  return g;
}

Skeleton k5_minus_k3() {
  // Vertices 0,1 keep full degree; 2,3,4 are the pairwise non-adjacent triple.
  Skeleton g = make_skeleton("K5-K3", 5);
  for (int u = 0; u < 2; ++u)
    for (int v = u + 1; v < 5; ++v) g.add_edge(u, v);
  g.sort_adjacency();
  return g;
}

Skeleton lattice_ball(int m, int r) {
  if (m < 1 || r < 0) fail(ErrorKind::Constraint, "lattice_ball: m >= 1 and r >= 0 required");
  // Enumerate lattice points with |x|_1 <= r, deterministically ordered.
  std::vector<std::vector<int>> pts;
  std::vector<int> cur(m, 0);
  auto rec = [&](auto&& self, int pos, int budget) -> void {
    if (pos == m) {
      pts.push_back(cur);
      return;
    }
    for (int x = -budget; x <= budget; ++x) {
      cur[pos] = x;
      self(self, pos + 1, budget - std::abs(x));
    }
  };
  rec(rec, 0, r);
  std::sort(pts.begin(), pts.end());
  if (pts.size() > 2'000'000) fail(ErrorKind::Limit, "lattice_ball: too many vertices");

  Skeleton g = make_skeleton("Z" + std::to_string(m) + "-ball-r" + std::to_string(r),
                             static_cast<int>(pts.size()));
  auto find = [&](const std::vector<int>& p) -> int {
    auto it = std::lower_bound(pts.begin(), pts.end(), p);
    if (it == pts.end() || *it != p) return -1;
    return static_cast<int>(it - pts.begin());
  };
  std::vector<bool> core(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    int norm = 0;
    for (int x : pts[i]) norm += std::abs(x);
    core[i] = norm <= r - 1;
    std::vector<int> p = pts[i];
    for (int k = 0; k < m; ++k) {
      ++p[k];
      int j = find(p);
      if (j >= 0) g.add_edge(static_cast<int>(i), j);
      --p[k];
    }
  }
  g.core = core;
  g.sort_adjacency();
  return g;
}

Skeleton polytope_family(PolytopeFamily kind, int n) {
  if (n < 1) fail(ErrorKind::Constraint, "polytope_family: n >= 1 required");
  switch (kind) {
    case PolytopeFamily::Simplex: {
      Skeleton g = complete_graph(n + 1);
      g.name = "alpha" + std::to_string(n);
      return g;
    }
    case PolytopeFamily::CrossPolytope: {
      Skeleton g = cocktail_party(n);
      g.name = "beta" + std::to_string(n);
      return g;
    }
    case PolytopeFamily::Cube: {
      Skeleton g = hypercube(n);
      g.name = "gamma" + std::to_string(n);
      return g;
    }
  }
  fail(ErrorKind::Internal, "polytope_family: bad kind");
}

namespace {

bool parse_int_suffix(const std::string& s, const std::string& prefix, int* out) {
  if (s.size() <= prefix.size() || s.compare(0, prefix.size(), prefix) != 0) return false;
  int v = 0;
  for (size_t i = prefix.size(); i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
    v = v * 10 + (s[i] - '0');
    if (v > 1'000'000) return false;
  }
  *out = v;
  return true;
}

}  // namespace

Skeleton named_graph(const std::string& name) {
  if (name == "petersen") return petersen();
  if (name == "K5-K3") return k5_minus_k3();
  int v = 0;
  // KnX2 before Kn: "K4x2" must not parse as K4 with junk.
  if (name.size() > 2 && name.substr(name.size() - 2) == "x2" &&
      parse_int_suffix(name.substr(0, name.size() - 2), "K", &v))
    return cocktail_party(v);
  if (parse_int_suffix(name, "K", &v)) return complete_graph(v);
  if (parse_int_suffix(name, "Q", &v)) return hypercube(v);
  if (parse_int_suffix(name, "halfQ", &v)) return half_cube(v);
  if (parse_int_suffix(name, "C", &v)) return cycle(v);
  if (parse_int_suffix(name, "alpha", &v)) return polytope_family(PolytopeFamily::Simplex, v);
  if (parse_int_suffix(name, "beta", &v)) return polytope_family(PolytopeFamily::CrossPolytope, v);
  if (parse_int_suffix(name, "gamma", &v)) return polytope_family(PolytopeFamily::Cube, v);
  fail(ErrorKind::Domain, "named_graph: unknown name '" + name + "'");
}

namespace {

std::vector<int> bfs_distances(const Skeleton& g, int src) {
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

}  // namespace

Skeleton antipodal_quotient(const Skeleton& g) {
  // Find the pairing: v -> its unique vertex at eccentricity distance.
  std::vector<int> partner(g.n, -1);
  int diam = 0;
  std::vector<std::vector<int>> dist(g.n);
  for (int v = 0; v < g.n; ++v) {
    dist[v] = bfs_distances(g, v);
    for (int d : dist[v]) {
      if (d < 0) fail(ErrorKind::Domain, "antipodal_quotient: graph disconnected");
      diam = std::max(diam, d);
    }
  }
  for (int v = 0; v < g.n; ++v) {
    int cnt = 0;
    for (int u = 0; u < g.n; ++u)
      if (dist[v][u] == diam) {
        partner[v] = u;
        ++cnt;
      }
    if (cnt != 1)
      fail(ErrorKind::Domain, "antipodal_quotient: vertex " + std::to_string(v) +
                                  " has " + std::to_string(cnt) + " vertices at diameter");
  }
  for (int v = 0; v < g.n; ++v) {
    if (partner[partner[v]] != v || partner[v] == v)
      fail(ErrorKind::Domain, "antipodal_quotient: pairing is not a fixed-point-free involution");
    // Automorphism check: u ~ v iff partner(u) ~ partner(v).
    for (int u : g.adj[v])
      if (!g.has_edge(partner[u], partner[v]))
        fail(ErrorKind::Domain, "antipodal_quotient: pairing is not an automorphism");
  }
  std::vector<int> cls(g.n, -1);
  int m = 0;
  for (int v = 0; v < g.n; ++v)
    if (cls[v] < 0) {
      cls[v] = cls[partner[v]] = m;
      ++m;
    }
  Skeleton q = make_skeleton(g.name + "/antipodal", m);
  std::set<std::pair<int, int>> edges;
  for (int v = 0; v < g.n; ++v)
    for (int u : g.adj[v]) {
      int a = cls[v], b = cls[u];
      if (a == b) fail(ErrorKind::Domain, "antipodal_quotient: antipodal pair adjacent");
      if (a > b) std::swap(a, b);
      edges.insert({a, b});
    }
  for (auto [a, b] : edges) q.add_edge(a, b);
  q.sort_adjacency();
  return q;
}

bool is_bipartite(const Skeleton& g, std::vector<int>* coloring) {
  std::vector<int> color(g.n, -1);
  for (int s = 0; s < g.n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u : g.adj[v]) {
        if (color[u] < 0) {
          color[u] = color[v] ^ 1;
          q.push(u);
        } else if (color[u] == color[v]) {
          return false;
        }
      }
    }
  }
  if (coloring) *coloring = color;
  return true;
}

// --- isomorphism ----------------------------------------------------------

namespace {

// Iterated neighbor-degree refinement; returns per-vertex stable color.
std::vector<long long> refine_colors(const Skeleton& g) {
  std::vector<long long> color(g.n);
  for (int v = 0; v < g.n; ++v) color[v] = g.degree(v);
  for (int round = 0; round < 8; ++round) {
    std::vector<std::pair<std::vector<long long>, int>> sig(g.n);
    for (int v = 0; v < g.n; ++v) {
      std::vector<long long> s;
      s.push_back(color[v]);
      for (int u : g.adj[v]) s.push_back(color[u]);
      std::sort(s.begin() + 1, s.end());
      sig[v] = {std::move(s), v};
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    std::vector<long long> next(g.n);
    long long c = 0;
    for (int i = 0; i < g.n; ++i) {
      if (i > 0 && sorted[i].first != sorted[i - 1].first) ++c;
      next[sorted[i].second] = c;
    }
    if (next == color) break;
    color = std::move(next);
  }
  return color;
}

bool extend_iso(const Skeleton& a, const Skeleton& b, const std::vector<long long>& ca,
                const std::vector<long long>& cb, std::vector<int>& map,
                std::vector<bool>& used, const std::vector<int>& order, size_t k) {
  if (k == order.size()) return true;
  int v = order[k];
  for (int w = 0; w < b.n; ++w) {
    if (used[w] || cb[w] != ca[v]) continue;
    bool ok = true;
    for (int u : a.adj[v]) {
      if (map[u] >= 0 && !b.has_edge(map[u], w)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      // Mapped non-neighbors must stay non-neighbors.
      for (int x = 0; ok && x < a.n; ++x)
        if (map[x] >= 0 && !a.has_edge(v, x) && x != v && b.has_edge(map[x], w)) ok = false;
    }
    if (!ok) continue;
    map[v] = w;
    used[w] = true;
    if (extend_iso(a, b, ca, cb, map, used, order, k + 1)) return true;
    map[v] = -1;
    used[w] = false;
  }
  return false;
}

}  // namespace

bool isomorphic(const Skeleton& a, const Skeleton& b) {
  if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
  auto ca = refine_colors(a);
  auto cb = refine_colors(b);
  auto hist = [](std::vector<long long> c) {
    std::sort(c.begin(), c.end());
    return c;
  };
  if (hist(ca) != hist(cb)) return false;
  // Order vertices to keep the partial map connected where possible.
  std::vector<int> order;
  std::vector<bool> seen(a.n, false);
  for (int s = 0; s < a.n; ++s) {
    if (seen[s]) continue;
    std::queue<int> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      order.push_back(v);
      for (int u : a.adj[v])
        if (!seen[u]) {
          seen[u] = true;
          q.push(u);
        }
    }
  }
  std::vector<int> map(a.n, -1);
  std::vector<bool> used(b.n, false);
  return extend_iso(a, b, ca, cb, map, used, order, 0);
}

}  // namespace cutlattice
