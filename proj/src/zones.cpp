#include "cutlattice/zones.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace cutlattice {

namespace {

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void merge(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

ZoneEmbedResult zone_embed(const Patch& p) {
  ZoneEmbedResult res;
  const Skeleton& g = p.g;
  if (p.faces.empty()) {
    res.reason = "patch has no faces";
    return res;
  }
  std::map<std::pair<int, int>, int> edge_id;
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[u])
      if (u < v) {
        edge_id[{u, v}] = static_cast<int>(edges.size());
        edges.push_back({u, v});
      }
  const int m = static_cast<int>(edges.size());

  bool any_odd = false;
  for (const auto& f : p.faces) any_odd |= f.size() % 2 == 1;
  const int scale = any_odd ? 2 : 1;

  // Slot nodes: one token per edge at scale 1, one per (edge, endpoint) at
  // scale 2.
  const int slots = scale * m;
  Dsu dsu(slots);
  auto slot_of = [&](int e, int endpoint_vertex) {
    if (scale == 1) return e;
    return 2 * e + (endpoint_vertex == edges[e].second ? 1 : 0);
  };
  for (const auto& f : p.faces) {
    const int len = static_cast<int>(f.size());
    auto edge_at = [&](int i) {
      auto it = edge_id.find(std::minmax(f[i % len], f[(i + 1) % len]));
      if (it == edge_id.end()) fail(ErrorKind::Internal, "zone_embed: face edge missing");
      return it->second;
    };
    if (scale == 1) {
      for (int i = 0; i < len / 2; ++i) dsu.merge(edge_at(i), edge_at(i + len / 2));
      continue;
    }
    // Slot points around the face: 2i = (edge i, near f[i]),
    // 2i+1 = (edge i, near f[i+1]). Tokens continue to the opposite edge
    // (even faces) or split to the two nearly-opposite edges (odd faces).
    auto node_at = [&](int t) {
      t = ((t % (2 * len)) + 2 * len) % (2 * len);
      int i = t / 2;
      int vertex = t % 2 == 0 ? f[i] : f[(i + 1) % len];
      return slot_of(edge_at(i), vertex);
    };
    int shift = len % 2 == 0 ? len - 1 : len - 2;
    for (int t = 1; t < 2 * len; t += 2) dsu.merge(node_at(t), node_at(t + shift));
  }

  // Zones in deterministic order of their smallest slot.
  std::map<int, int> zone_of_root;
  std::vector<int> slot_zone(slots);
  for (int s = 0; s < slots; ++s) {
    int r = dsu.find(s);
    if (!zone_of_root.count(r)) {
      int next = static_cast<int>(zone_of_root.size());
      zone_of_root[r] = next;
    }
    slot_zone[s] = zone_of_root[r];
  }
  int zones = static_cast<int>(zone_of_root.size());

  // Odd-crossing (zone, edge) incidences.
  std::vector<std::vector<int>> zone_bits(m);  // per edge: zones crossing oddly
  {
    std::vector<std::map<int, int>> cnt(m);
    for (int e = 0; e < m; ++e)
      for (int s = 0; s < scale; ++s) ++cnt[e][slot_zone[scale * e + s]];
    for (int e = 0; e < m; ++e)
      for (auto [z, c] : cnt[e])
        if (c % 2) zone_bits[e].push_back(z);
  }
  // Keep only zones that separate something.
  std::vector<int> keep(zones, -1);
  int kept = 0;
  for (int e = 0; e < m; ++e)
    for (int z : zone_bits[e])
      if (keep[z] < 0) keep[z] = kept++;

  // Labels by crossing parity from vertex 0.
  Embedding emb;
  emb.scale = scale;
  emb.dim = kept;
  emb.labels.assign(g.n, BitLabel::zeros(kept));
  {
    std::vector<char> seen(g.n, 0);
    std::queue<int> q;
    seen[0] = 1;
    q.push(0);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.adj[u]) {
        BitLabel next = emb.labels[u];
        for (int z : zone_bits[edge_id.at(std::minmax(u, v))])
          next.set(keep[z], !next.get(keep[z]));
        if (!seen[v]) {
          seen[v] = 1;
          emb.labels[v] = next;
          q.push(v);
        } else if (!(emb.labels[v] == next)) {
          res.reason = "inconsistent zone crossing parity (zone does not close)";
          return res;
        }
      }
    }
    for (int v = 0; v < g.n; ++v)
      if (!seen[v]) {
        res.reason = "patch is disconnected";
        return res;
      }
  }

  auto check = verify_embedding(g, emb, g.core.has_value());
  if (!check.valid) {
    res.reason = "zone labeling failed verification at pair (" +
                 std::to_string(check.witness_u) + "," +
                 std::to_string(check.witness_v) + "); patch may be too small";
    return res;
  }

  res.cuts.scale = scale;
  res.cuts.cuts.resize(kept);
  for (auto& c : res.cuts.cuts) c.mult = 1;
  for (int v = 0; v < g.n; ++v)
    for (int k = 0; k < kept; ++k)
      if (emb.labels[v].get(k)) res.cuts.cuts[k].side.push_back(v);
  res.zone_edges.assign(kept, {});
  for (int e = 0; e < m; ++e)
    for (int z : zone_bits[e]) res.zone_edges[keep[z]].push_back(edges[e]);
  res.embedding = std::move(emb);
  res.ok = true;

  if (auto fam = direction_families(p, res.zone_edges)) {
    res.families = fam->first;
    res.family_count = fam->second;
  }
  return res;
}

std::optional<std::pair<std::vector<int>, int>> direction_families(
    const Patch& p, const std::vector<std::vector<std::pair<int, int>>>& edge_sets) {
  if (!p.g.symbol) return std::nullopt;
  const std::string& sym = *p.g.symbol;
  if (sym != "{4,4}" && sym != "{6,3}" && sym != "{3,6}") return std::nullopt;
  const int F = sym == "{4,4}" ? 2 : 3;

  // With all faces consistently oriented, edge directions repeat cyclically
  // around every face of these translation-invariant tilings:
  // dir(edge at position i) = (base_f + i) mod F.
  std::map<std::pair<int, int>, int> dir;
  std::map<std::pair<int, int>, std::vector<int>> edge_faces;
  for (size_t f = 0; f < p.faces.size(); ++f) {
    const auto& cyc = p.faces[f];
    for (size_t i = 0; i < cyc.size(); ++i)
      edge_faces[std::minmax(cyc[i], cyc[(i + 1) % cyc.size()])].push_back(
          static_cast<int>(f));
  }
  std::vector<int> base(p.faces.size(), -1);
  std::queue<int> q;
  base[0] = 0;
  q.push(0);
  while (!q.empty()) {
    int f = q.front();
    q.pop();
    const auto& cyc = p.faces[f];
    for (size_t i = 0; i < cyc.size(); ++i) {
      auto key = std::minmax(cyc[i], cyc[(i + 1) % cyc.size()]);
      int d = (base[f] + static_cast<int>(i)) % F;
      auto it = dir.find(key);
      if (it == dir.end())
        dir[key] = d;
      else if (it->second != d)
        return std::nullopt;
      for (int g2 : edge_faces[key]) {
        if (base[g2] >= 0) continue;
        // Position of the shared edge in g2 fixes its base.
        const auto& c2 = p.faces[g2];
        for (size_t j = 0; j < c2.size(); ++j)
          if (std::minmax(c2[j], c2[(j + 1) % c2.size()]) == key) {
            base[g2] = ((d - static_cast<int>(j)) % F + F) % F;
            break;
          }
        q.push(g2);
      }
    }
  }
  for (int b : base)
    if (b < 0) return std::nullopt;  // faces not edge-connected

  std::vector<int> families;
  std::vector<bool> present(F, false);
  for (const auto& set : edge_sets) {
    std::vector<bool> used(F, false);
    for (auto e : set) {
      auto it = dir.find(std::minmax(e.first, e.second));
      if (it == dir.end()) return std::nullopt;
      used[it->second] = true;
    }
    int cnt = 0, single = -1, missing = -1;
    for (int k = 0; k < F; ++k)
      if (used[k]) {
        ++cnt;
        single = k;
      } else {
        missing = k;
      }
    int fam;
    if (cnt == 1)
      fam = single;  // straight zones cross one direction
    else if (cnt == F - 1 && F == 3)
      fam = missing;  // triangular-lattice lines cross the other two
    else
      return std::nullopt;
    families.push_back(fam);
    present[fam] = true;
  }
  int count = 0;
  for (bool b : present) count += b;
  return std::make_pair(std::move(families), count);
}

}  // namespace cutlattice
