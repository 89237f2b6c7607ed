#include "cutlattice/tiling.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "cutlattice/metrics.hpp"

namespace cutlattice {

// --- rotation systems from face lists -------------------------------------

std::vector<std::vector<int>> rotation_from_faces(int n,
                                                  std::vector<std::vector<int>>& faces) {
  // Each undirected edge may lie in at most two faces; orient faces so every
  // directed edge is used at most once, then read the cyclic neighbor order
  // off the corners.
  std::map<std::pair<int, int>, std::vector<int>> edge_faces;
  for (size_t f = 0; f < faces.size(); ++f) {
    const auto& cyc = faces[f];
    for (size_t i = 0; i < cyc.size(); ++i) {
      int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
      auto key = std::minmax(a, b);
      edge_faces[key].push_back(static_cast<int>(f));
      if (edge_faces[key].size() > 2)
        fail(ErrorKind::Domain, "rotation_from_faces: edge in more than two faces");
    }
  }
  std::vector<int> state(faces.size(), 0);  // 0 unseen, 1 oriented
  for (size_t start = 0; start < faces.size(); ++start) {
    if (state[start]) continue;
    state[start] = 1;
    std::queue<int> q;
    q.push(static_cast<int>(start));
    while (!q.empty()) {
      int f = q.front();
      q.pop();
      const auto& cyc = faces[f];
      for (size_t i = 0; i < cyc.size(); ++i) {
        int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
        for (int g : edge_faces[std::minmax(a, b)]) {
          if (g == f) continue;
          // g must traverse the shared edge as (b, a).
          auto& other = faces[g];
          bool fwd = false, rev = false;
          for (size_t j = 0; j < other.size(); ++j) {
            int x = other[j], y = other[(j + 1) % other.size()];
            if (x == a && y == b) fwd = true;
            if (x == b && y == a) rev = true;
          }
          if (!state[g]) {
            if (fwd && !rev) std::reverse(other.begin(), other.end());
            state[g] = 1;
            q.push(g);
          } else if (fwd && !rev) {
            fail(ErrorKind::Domain, "rotation_from_faces: inconsistent orientation");
          }
        }
      }
    }
  }
  // Corner map at each vertex: in face (..., a, v, b, ...) record a -> b.
  std::vector<std::map<int, int>> succ(n);
  for (const auto& cyc : faces) {
    size_t k = cyc.size();
    for (size_t i = 0; i < k; ++i) {
      int a = cyc[(i + k - 1) % k], v = cyc[i], b = cyc[(i + 1) % k];
      if (succ[v].count(a))
        fail(ErrorKind::Domain, "rotation_from_faces: two faces share a corner");
      succ[v][a] = b;
    }
  }
  std::vector<std::vector<int>> rot(n);
  for (int v = 0; v < n; ++v) {
    std::set<int> nbs, in_image;
    for (auto [a, b] : succ[v]) {
      nbs.insert(a);
      nbs.insert(b);
      in_image.insert(b);
    }
    std::set<int> done;
    // Chains start at neighbors that are not any corner's successor; a full
    // cycle has no such start, so fall back to the smallest neighbor.
    std::vector<int> starts;
    for (int a : nbs)
      if (!in_image.count(a)) starts.push_back(a);
    if (starts.empty() && !nbs.empty()) starts.push_back(*nbs.begin());
    for (int s : starts) {
      int cur = s;
      while (!done.count(cur)) {
        rot[v].push_back(cur);
        done.insert(cur);
        auto it = succ[v].find(cur);
        if (it == succ[v].end()) break;
        cur = it->second;
      }
    }
    for (int a : nbs)
      if (!done.count(a)) rot[v].push_back(a);  // disconnected fan remnant
  }
  return rot;
}

// --- ring growth for Euclidean / hyperbolic {p,q} --------------------------

namespace {

struct Growth {
  int p, q;
  int budget;
  std::vector<std::vector<int>> adj;
  std::vector<std::vector<int>> faces;
  std::vector<int> face_cnt;
  std::vector<int> boundary;  // current boundary cycle, in walk order

  int new_vertex() {
    if (static_cast<int>(adj.size()) >= budget)
      fail(ErrorKind::Limit, "tiling_patch: vertex budget exceeded (" +
                                 std::to_string(budget) + ")");
    adj.push_back({});
    face_cnt.push_back(0);
    return static_cast<int>(adj.size()) - 1;
  }

  void add_edge(int u, int v) {
    if (std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end()) return;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }

  void add_face(std::vector<int> cyc) {
    for (size_t i = 0; i < cyc.size(); ++i) {
      add_edge(cyc[i], cyc[(i + 1) % cyc.size()]);
      ++face_cnt[cyc[i]];
    }
    faces.push_back(std::move(cyc));
  }

  void first_ring() {
    new_vertex();  // base = 0
    std::vector<int> spokes(q);
    for (int t = 0; t < q; ++t) spokes[t] = new_vertex();
    std::vector<std::vector<int>> chains(q);
    for (int t = 0; t < q; ++t)
      for (int i = 0; i < p - 3; ++i) chains[t].push_back(new_vertex());
    std::vector<int> nb;
    for (int t = 0; t < q; ++t) {
      std::vector<int> f = {0, spokes[t]};
      for (int c : chains[t]) f.push_back(c);
      f.push_back(spokes[(t + 1) % q]);
      add_face(std::move(f));
      nb.push_back(spokes[t]);
      for (int c : chains[t]) nb.push_back(c);
    }
    boundary = std::move(nb);
  }

  // One full ring of faces around the current boundary. Every current
  // boundary vertex becomes interior; the new vertices form the next
  // boundary cycle.
  void next_ring() {
    const int L = static_cast<int>(boundary.size());
    auto delta = [&](int idx) { return q - face_cnt[boundary[((idx % L) + L) % L]]; };
    int anchor = -1;
    for (int i = 0; i < L; ++i)
      if (delta(i) >= 2) {
        anchor = i;
        break;
      }
    if (anchor < 0)
      fail(ErrorKind::Internal, "tiling_patch: boundary closed up (spherical input?)");

    // Plan the ring: old part of each face, in walk order.
    struct Plan {
      std::vector<int> old_part;  // run of boundary vertices (>=2) or one vertex
    };
    std::vector<Plan> plan;
    int pos = anchor;
    do {
      // Edge-glued face: run of edges whose interior vertices have delta 1.
      std::vector<int> run = {boundary[pos % L]};
      int j = pos + 1;
      while (delta(j) == 1) {
        run.push_back(boundary[j % L]);
        ++j;
      }
      run.push_back(boundary[j % L]);
      if (static_cast<int>(run.size()) > p - 1)
        fail(ErrorKind::Internal, "tiling_patch: glued run too long for face size");
      plan.push_back({std::move(run)});
      int d_end = delta(j);
      for (int t = 0; t < d_end - 2; ++t) plan.push_back({{boundary[j % L]}});
      pos = j;
    } while (pos % L != anchor);

    const int T = static_cast<int>(plan.size());
    auto new_count = [&](int t) { return p - static_cast<int>(plan[t].old_part.size()); };
    for (int t = 0; t < T; ++t)
      if (new_count(t) < 1)
        fail(ErrorKind::Internal, "tiling_patch: face with no new vertex");

    // Junction slot t sits between faces t and t+1 (mod T). A face with a
    // single new vertex identifies its two junction slots, so slots merge
    // into classes; each class is one new vertex.
    std::vector<int> parent(T);
    for (int t = 0; t < T; ++t) parent[t] = t;
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any_wide = false;
    for (int t = 0; t < T; ++t) {
      if (new_count(t) == 1)
        parent[find((t + T - 1) % T)] = find(t);
      else
        any_wide = true;
    }
    if (!any_wide)
      fail(ErrorKind::Internal, "tiling_patch: ring degenerated to a single junction");
    std::vector<int> junction_vertex(T, -1);
    for (int t = 0; t < T; ++t) {
      int c = find(t);
      if (junction_vertex[c] < 0) junction_vertex[c] = new_vertex();
      junction_vertex[t] = junction_vertex[c];
    }

    std::vector<int> nb;
    for (int t = 0; t < T; ++t) {
      int s = new_count(t);
      int prev_j = junction_vertex[(t + T - 1) % T];
      int next_j = junction_vertex[t];
      std::vector<int> fresh;
      for (int i = 0; i < s - 2; ++i) fresh.push_back(new_vertex());
      std::vector<int> f = plan[t].old_part;
      f.push_back(next_j);
      for (int x : fresh) f.push_back(x);
      if (s >= 2) f.push_back(prev_j);
      add_face(std::move(f));
      // Outer path of this face in walk direction: prev_j, fresh reversed.
      if (nb.empty() || nb.back() != prev_j) nb.push_back(prev_j);
      for (auto it = fresh.rbegin(); it != fresh.rend(); ++it) nb.push_back(*it);
    }
    if (nb.size() > 1 && nb.front() == nb.back()) nb.pop_back();
    boundary = std::move(nb);
  }
};

}  // namespace

Patch tiling_patch(const SchlafliSymbol& sym, int radius, int margin, int vertex_budget) {
  if (sym.rank() != 2 || sym.entries[0].infinite() || sym.entries[1].infinite() ||
      !sym.entries[0].frac->convex() || !sym.entries[1].frac->convex())
    fail(ErrorKind::Domain, "tiling_patch: need a finite convex {p,q}, got " + format(sym));
  if (classify(sym) == Curvature::Spherical)
    fail(ErrorKind::Domain, "tiling_patch: " + format(sym) + " is spherical; use platonic()");
  if (radius < 1 || margin < 0)
    fail(ErrorKind::Constraint, "tiling_patch: need radius >= 1 and margin >= 0");

  Growth gr;
  gr.p = sym.entries[0].frac->p;
  gr.q = sym.entries[1].frac->p;
  gr.budget = vertex_budget > 0 ? vertex_budget : kDefaultPatchVertexBudget;
  gr.first_ring();

  const int reach = radius + margin;
  std::vector<int> dist;
  for (;;) {
    // Exact distances from the base: every ball vertex keeps a predecessor
    // one ring further in, so BFS inside the grown region is exact.
    Skeleton tmp = make_skeleton("", static_cast<int>(gr.adj.size()));
    tmp.adj = gr.adj;
    dist = bfs_from(tmp, 0);
    int closest = dist[gr.boundary[0]];
    for (int b : gr.boundary) closest = std::min(closest, dist[b]);
    if (closest > reach) break;
    gr.next_ring();
  }

  // Truncate to the ball of radius R+M.
  int total = static_cast<int>(gr.adj.size());
  std::vector<int> remap(total, -1);
  int kept = 0;
  for (int v = 0; v < total; ++v)
    if (dist[v] <= reach) remap[v] = kept++;

  Patch patch;
  patch.radius = radius;
  patch.margin = margin;
  patch.g = make_skeleton(format(sym) + "-patch-r" + std::to_string(radius) + "-m" +
                              std::to_string(margin),
                          kept);
  patch.g.symbol = format(sym);
  std::vector<bool> core(kept, false);
  for (int v = 0; v < total; ++v) {
    if (remap[v] < 0) continue;
    core[remap[v]] = dist[v] <= radius;
    for (int u : gr.adj[v])
      if (remap[u] >= 0 && remap[u] > remap[v]) patch.g.add_edge(remap[v], remap[u]);
  }
  patch.g.core = std::move(core);
  patch.g.sort_adjacency();
  for (const auto& f : gr.faces) {
    bool keep = true;
    for (int v : f)
      if (remap[v] < 0) {
        keep = false;
        break;
      }
    if (!keep) continue;
    std::vector<int> g;
    for (int v : f) g.push_back(remap[v]);
    patch.faces.push_back(std::move(g));
  }
  patch.rotation = rotation_from_faces(patch.g.n, patch.faces);
  patch.g.validate();
  return patch;
}

// --- Platonic solids -------------------------------------------------------

namespace {

std::vector<std::vector<int>> triangle_faces(const Skeleton& g) {
  std::vector<std::vector<int>> out;
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[u]) {
      if (v < u) continue;
      for (int w : g.adj[v]) {
        if (w < v) continue;
        if (g.has_edge(u, w)) out.push_back({u, v, w});
      }
    }
  return out;
}

std::vector<std::vector<int>> quad_faces(const Skeleton& g) {
  // All 4-cycles, canonical form (smallest vertex first, smaller neighbor next).
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> out;
  for (int a = 0; a < g.n; ++a)
    for (int b : g.adj[a])
      for (int c : g.adj[b]) {
        if (c == a) continue;
        for (int d : g.adj[c]) {
          if (d == b || !g.has_edge(d, a)) continue;
          std::vector<int> cyc = {a, b, c, d};
          int mi = static_cast<int>(std::min_element(cyc.begin(), cyc.end()) - cyc.begin());
          std::vector<int> canon;
          for (int i = 0; i < 4; ++i) canon.push_back(cyc[(mi + i) % 4]);
          if (canon[1] > canon[3]) std::swap(canon[1], canon[3]);
          if (seen.insert(canon).second) out.push_back(canon);
        }
      }
  return out;
}

Skeleton icosahedron_graph() {
  // Gyroelongated pentagonal bipyramid: apexes 0 and 11, rings 1..5 and 6..10.
  Skeleton g = make_skeleton("icosahedron", 12);
  for (int i = 0; i < 5; ++i) {
    int t = 1 + i, tn = 1 + (i + 1) % 5;
    int b = 6 + i, bn = 6 + (i + 1) % 5;
    g.add_edge(0, t);
    g.add_edge(11, b);
    g.add_edge(t, tn);
    g.add_edge(b, bn);
    g.add_edge(t, b);
    g.add_edge(tn, b);
  }
  g.sort_adjacency();
  return g;
}

Patch finish_solid(Skeleton g, std::vector<std::vector<int>> faces, const SchlafliSymbol& sym) {
  Patch patch;
  patch.g = std::move(g);
  patch.g.symbol = format(sym);
  patch.faces = std::move(faces);
  patch.rotation = rotation_from_faces(patch.g.n, patch.faces);
  patch.g.core = std::vector<bool>(patch.g.n, true);
  patch.radius = diameter(patch.g);
  patch.margin = 0;
  patch.g.validate();
  return patch;
}

}  // namespace

Patch platonic(const SchlafliSymbol& sym) {
  if (sym.rank() != 2 || !sym.entries[0].frac || !sym.entries[1].frac ||
      !sym.entries[0].frac->convex() || !sym.entries[1].frac->convex())
    fail(ErrorKind::Domain, "platonic: need a finite convex {p,q}, got " + format(sym));
  if (classify(sym) != Curvature::Spherical)
    fail(ErrorKind::Domain, "platonic: " + format(sym) + " is not spherical");
  int p = sym.entries[0].frac->p, q = sym.entries[1].frac->p;

  if (p == 2) {
    // {2,m}: 2-vertex multigraph collapsed to a single edge; the m digon
    // faces stay as face data.
    Patch patch;
    patch.g = make_skeleton("{2," + std::to_string(q) + "}", 2);
    patch.g.symbol = format(sym);
    patch.g.add_edge(0, 1);
    patch.g.sort_adjacency();
    patch.g.core = std::vector<bool>(2, true);
    patch.faces.assign(q, {0, 1});
    patch.rotation = {{1}, {0}};
    patch.radius = 1;
    return patch;
  }
  if (q == 2) {
    Skeleton g = cycle(p);
    g.name = "{" + std::to_string(p) + ",2}";
    std::vector<int> face(p);
    for (int i = 0; i < p; ++i) face[i] = i;
    return finish_solid(std::move(g), {face, face}, sym);
  }

  if (p == 3 && q == 3) {
    Skeleton g = complete_graph(4);
    g.name = "tetrahedron";
    auto f = triangle_faces(g);
    return finish_solid(std::move(g), std::move(f), sym);
  }
  if (p == 3 && q == 4) {
    Skeleton g = cocktail_party(3);
    g.name = "octahedron";
    auto f = triangle_faces(g);
    return finish_solid(std::move(g), std::move(f), sym);
  }
  if (p == 4 && q == 3) {
    Skeleton g = hypercube(3);
    g.name = "cube";
    auto f = quad_faces(g);
    return finish_solid(std::move(g), std::move(f), sym);
  }
  if (p == 3 && q == 5) {
    Skeleton g = icosahedron_graph();
    auto f = triangle_faces(g);
    return finish_solid(std::move(g), std::move(f), sym);
  }
  if (p == 5 && q == 3) {
    // Dual of the icosahedron: vertices = triangles, faces = icosa vertices.
    Skeleton ico = icosahedron_graph();
    auto tris = triangle_faces(ico);
    Skeleton g = make_skeleton("dodecahedron", static_cast<int>(tris.size()));
    for (size_t i = 0; i < tris.size(); ++i)
      for (size_t j = i + 1; j < tris.size(); ++j) {
        std::vector<int> common;
        std::set_intersection(tris[i].begin(), tris[i].end(), tris[j].begin(),
                              tris[j].end(), std::back_inserter(common));
        if (common.size() == 2) g.add_edge(static_cast<int>(i), static_cast<int>(j));
      }
    g.sort_adjacency();
    std::vector<std::vector<int>> faces;
    for (int v = 0; v < ico.n; ++v) {
      std::vector<int> around;
      for (size_t i = 0; i < tris.size(); ++i)
        if (std::binary_search(tris[i].begin(), tris[i].end(), v))
          around.push_back(static_cast<int>(i));
      // Order the five triangles into their cycle.
      std::vector<int> cyc = {around[0]};
      std::set<int> used = {around[0]};
      while (cyc.size() < around.size()) {
        for (int t : around)
          if (!used.count(t) && g.has_edge(cyc.back(), t)) {
            cyc.push_back(t);
            used.insert(t);
            break;
          }
      }
      faces.push_back(std::move(cyc));
    }
    return finish_solid(std::move(g), std::move(faces), sym);
  }
  fail(ErrorKind::Internal, "platonic: unhandled spherical symbol " + format(sym));
}

Patch make_patch(const SchlafliSymbol& sym, int radius, int margin, int vertex_budget) {
  if (classify(sym) == Curvature::Spherical) return platonic(sym);
  int m = margin >= 0 ? margin : sym.entries[0].frac->p;
  return tiling_patch(sym, radius, m, vertex_budget);
}

// --- star honeycombs {m/2, m} ----------------------------------------------

Skeleton star_honeycomb_skeleton(int m, int radius, int vertex_budget) {
  if (m < 5 || m % 2 == 0)
    fail(ErrorKind::Domain, "star_honeycomb_skeleton: m must be odd and >= 5");
  if (radius < 1) fail(ErrorKind::Constraint, "star_honeycomb_skeleton: radius >= 1");

  SchlafliSymbol host{{SchlafliEntry{Fraction{3, 1}}, SchlafliEntry{Fraction{m, 1}}}};
  Patch patch = m == 5 ? platonic(host) : tiling_patch(host, radius + 1, 2, vertex_budget);

  std::string sname = "{" + std::to_string(m) + "/2," + std::to_string(m) + "}";
  Skeleton star = make_skeleton(sname + "-skeleton-r" + std::to_string(radius),
                                patch.g.n);
  star.symbol = sname;
  std::vector<bool> has_cell(patch.g.n, false);
  std::set<std::pair<int, int>> edges;
  for (int v = 0; v < patch.g.n; ++v) {
    if (!patch.interior(v)) continue;
    has_cell[v] = true;
    const auto& rot = patch.rotation[v];
    for (int i = 0; i < m; ++i) {
      int a = rot[i], b = rot[(i + 2) % m];
      edges.insert(std::minmax(a, b));
    }
  }
  for (auto [a, b] : edges) star.add_edge(a, b);
  star.sort_adjacency();

  // Core: within distance R of the base in the host patch, with every
  // incident cell complete.
  std::vector<int> hostd = bfs_from(patch.g, 0);
  std::vector<bool> core(patch.g.n, false);
  for (int v = 0; v < patch.g.n; ++v) {
    if (hostd[v] < 0 || hostd[v] > (m == 5 ? patch.radius : radius)) continue;
    bool ok = true;
    for (int u : patch.g.adj[v]) ok = ok && has_cell[u];
    core[v] = ok;
  }
  star.core = std::move(core);

  // Drop vertices that no complete cell reached.
  std::vector<int> remap(star.n, -1);
  int kept = 0;
  for (int v = 0; v < star.n; ++v)
    if (star.degree(v) > 0) remap[v] = kept++;
  Skeleton out = make_skeleton(star.name, kept);
  out.symbol = star.symbol;
  std::vector<bool> out_core(kept, false);
  for (int v = 0; v < star.n; ++v) {
    if (remap[v] < 0) continue;
    out_core[remap[v]] = (*star.core)[v];
    for (int u : star.adj[v])
      if (remap[u] > remap[v]) out.add_edge(remap[v], remap[u]);
  }
  out.core = std::move(out_core);
  out.sort_adjacency();
  out.validate();
  return out;
}

}  // namespace cutlattice
