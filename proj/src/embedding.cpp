#include "cutlattice/embedding.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cutlattice/tiling.hpp"
#include "cutlattice/zones.hpp"

namespace cutlattice {

VerifyResult verify_embedding(const Skeleton& g, const Embedding& e,
                              bool restrict_to_core) {
  if (static_cast<int>(e.labels.size()) != g.n)
    fail(ErrorKind::Constraint, "verify: labels do not cover the vertex set");
  for (const auto& l : e.labels)
    if (l.width != e.dim)
      fail(ErrorKind::Constraint, "verify: label width differs from embedding dimension");
  if (e.scale < 1) fail(ErrorKind::Constraint, "verify: scale must be positive");

  VerifyResult res;
  auto verts = restrict_to_core ? g.core_vertices() : [&] {
    std::vector<int> all(g.n);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }();
  for (size_t i = 0; i < verts.size(); ++i) {
    int u = verts[i];
    auto d = bfs_from(g, u);
    for (size_t j = i + 1; j < verts.size(); ++j) {
      int v = verts[j];
      long long want = d[v] < 0 ? -1 : static_cast<long long>(e.scale) * d[v];
      if (want != e.labels[u].hamming(e.labels[v])) {
        res.valid = false;
        res.witness_u = u;
        res.witness_v = v;
        res.reason = "scale*d(" + std::to_string(u) + "," + std::to_string(v) +
                     ") != Hamming distance";
        return res;
      }
    }
  }
  res.valid = true;
  return res;
}

long long CutDecomposition::total_multiplicity() const {
  long long s = 0;
  for (const auto& c : cuts) s += c.mult;
  return s;
}

bool decomposition_matches(const CutDecomposition& dec, const DistanceMatrix& d) {
  int n = d.size();
  std::vector<char> in_side(n);
  std::vector<std::vector<long long>> sum(n, std::vector<long long>(n, 0));
  for (const auto& c : dec.cuts) {
    std::fill(in_side.begin(), in_side.end(), 0);
    for (int v : c.side) {
      if (v < 0 || v >= n) fail(ErrorKind::Constraint, "decomposition: side out of range");
      in_side[v] = 1;
    }
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (in_side[u] != in_side[v]) sum[u][v] += c.mult;
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (sum[u][v] != static_cast<long long>(dec.scale) * d(u, v)) return false;
  return true;
}

Embedding embedding_from_decomposition(int n, const CutDecomposition& dec) {
  Embedding e;
  e.scale = dec.scale;
  e.dim = static_cast<int>(dec.total_multiplicity());
  e.labels.assign(n, BitLabel::zeros(e.dim));
  int col = 0;
  for (const auto& c : dec.cuts) {
    std::vector<char> in_side(n, 0);
    for (int v : c.side) in_side[v] = 1;
    for (int rep = 0; rep < c.mult; ++rep, ++col)
      for (int v = 0; v < n; ++v)
        if (in_side[v]) e.labels[v].set(col, true);
  }
  // Translate so vertex 0 carries the zero label.
  if (n > 0) {
    BitLabel base = e.labels[0];
    for (auto& l : e.labels) l.xor_with(base);
  }
  return e;
}

// --- partial cubes ---------------------------------------------------------

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

PartialCubeResult partial_cube(const Skeleton& g) {
  PartialCubeResult res;
  if (g.n == 0) fail(ErrorKind::Domain, "partial_cube: empty graph");
  if (!is_bipartite(g)) {
    res.reason = "not bipartite";
    return res;
  }
  DistanceMatrix d = apsp(g);
  if (!d.connected()) fail(ErrorKind::Domain, "partial_cube: graph must be connected");

  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[u])
      if (u < v) edges.push_back({u, v});
  int m = static_cast<int>(edges.size());

  // Djokovic-Winkler relation, closed transitively by union-find.
  Dsu dsu(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      auto [u, v] = edges[i];
      auto [x, y] = edges[j];
      if (d(u, x) + d(v, y) != d(u, y) + d(v, x)) dsu.merge(i, j);
    }
  std::map<int, int> class_id;
  for (int i = 0; i < m; ++i) {
    int r = dsu.find(i);
    if (!class_id.count(r)) {
      int next = static_cast<int>(class_id.size());
      class_id[r] = next;
    }
  }
  int k = static_cast<int>(class_id.size());
  res.classes.assign(k, {});
  std::vector<int> edge_class(m);
  for (int i = 0; i < m; ++i) {
    edge_class[i] = class_id[dsu.find(i)];
    res.classes[edge_class[i]].push_back(edges[i]);
  }

  // Each class must cut the graph into exactly two sides.
  Embedding emb;
  emb.scale = 1;
  emb.dim = k;
  emb.labels.assign(g.n, BitLabel::zeros(k));
  std::vector<int> side(g.n);
  for (int c = 0; c < k; ++c) {
    std::fill(side.begin(), side.end(), -1);
    int comps = 0;
    for (int s = 0; s < g.n; ++s) {
      if (side[s] >= 0) continue;
      std::vector<int> stack = {s};
      side[s] = comps;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.adj[v]) {
          // Identify the edge id via binary search on the sorted edge list.
          std::pair<int, int> key{std::min(u, v), std::max(u, v)};
          auto it = std::lower_bound(edges.begin(), edges.end(), key);
          int ei = static_cast<int>(it - edges.begin());
          if (edge_class[ei] == c) continue;
          if (side[u] < 0) {
            side[u] = side[v];
            stack.push_back(u);
          }
        }
      }
      ++comps;
    }
    if (comps != 2) {
      res.reason = "edge class " + std::to_string(c) + " does not split the graph in two";
      return res;
    }
    for (int v = 0; v < g.n; ++v)
      if (side[v] != side[0]) emb.labels[v].set(c, true);
  }

  auto check = verify_embedding(g, emb, false);
  if (!check.valid) {
    res.reason = "Djokovic-Winkler labeling fails at pair (" +
                 std::to_string(check.witness_u) + "," + std::to_string(check.witness_v) + ")";
    return res;
  }
  res.is_partial_cube = true;
  res.embedding = std::move(emb);
  return res;
}

// --- exhaustive label search -------------------------------------------------

std::optional<Embedding> exhaustive_label_search(const Skeleton& g, int scale, int m,
                                                 long long node_budget) {
  if (m > 20) fail(ErrorKind::Limit, "exhaustive_label_search: dimension too large");
  DistanceMatrix d = apsp(g);
  if (!d.connected()) fail(ErrorKind::Domain, "exhaustive_label_search: graph disconnected");

  std::vector<int> order;  // BFS order from 0 keeps prefixes connected
  {
    auto dist = bfs_from(g, 0);
    order.resize(g.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return dist[a] < dist[b]; });
  }
  std::vector<uint32_t> label(g.n, 0);
  std::vector<char> assigned(g.n, 0);
  assigned[order[0]] = 1;
  long long nodes = 0;

  auto rec = [&](auto&& self, size_t idx, int used) -> bool {
    if (idx == order.size()) return true;
    if (++nodes > node_budget)
      fail(ErrorKind::Limit, "exhaustive_label_search: node budget exceeded");
    int v = order[idx];
    int w0 = scale * d(order[0], v);
    if (w0 > m) return false;
    for (int fresh = 0; fresh <= std::min(w0, m - used); ++fresh) {
      uint32_t block = ((fresh ? (1u << fresh) - 1 : 0u)) << used;
      int old_bits = w0 - fresh;
      if (old_bits > used) continue;
      // All masks over the used columns with the required popcount.
      for (uint32_t sub = 0; sub < (1u << used); ++sub) {
        if (std::popcount(sub) != old_bits) continue;
        uint32_t cand = sub | block;
        bool ok = true;
        for (int u = 0; u < g.n && ok; ++u)
          if (assigned[u])
            ok = std::popcount(label[u] ^ cand) == scale * d(u, v);
        if (!ok) continue;
        label[v] = cand;
        assigned[v] = 1;
        if (self(self, idx + 1, used + fresh)) return true;
        assigned[v] = 0;
      }
    }
    return false;
  };
  if (!rec(rec, 1, 0)) return std::nullopt;

  Embedding e;
  e.scale = scale;
  e.dim = m;
  e.labels.assign(g.n, BitLabel::zeros(m));
  for (int v = 0; v < g.n; ++v)
    for (int k = 0; k < m; ++k)
      if ((label[v] >> k) & 1) e.labels[v].set(k, true);
  auto check = verify_embedding(g, e, false);
  if (!check.valid) fail(ErrorKind::Internal, "exhaustive_label_search: unverified result");
  return e;
}

// --- cycles and products -----------------------------------------------------

Embedding cycle_embedding(int n, int scale) {
  if (n < 3) fail(ErrorKind::Constraint, "cycle_embedding: n >= 3");
  Embedding e;
  e.scale = scale;
  if (scale == 1) {
    if (n % 2) fail(ErrorKind::Domain, "cycle_embedding: odd cycles need scale 2");
    int h = n / 2;
    e.dim = h;
    e.labels.assign(n, BitLabel::zeros(h));
    BitLabel cur = BitLabel::zeros(h);
    for (int i = 0; i < n; ++i) {
      e.labels[i] = cur;
      cur.set(i % h, !cur.get(i % h));
    }
  } else if (scale == 2) {
    int k = n / 2;  // window length floor(n/2)
    e.dim = n;
    e.labels.assign(n, BitLabel::zeros(n));
    for (int i = 0; i < n; ++i)
      for (int t = 0; t < k; ++t) e.labels[i].set((i + t) % n, true);
  } else {
    fail(ErrorKind::Domain, "cycle_embedding: scale must be 1 or 2");
  }
  return e;
}

namespace {

Embedding concat_embeddings(const Embedding& a, int na, const Embedding& b, int nb) {
  if (a.scale != b.scale) fail(ErrorKind::Internal, "concat: factor scales differ");
  Embedding e;
  e.scale = a.scale;
  e.dim = a.dim + b.dim;
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      BitLabel l = BitLabel::zeros(e.dim);
      for (int k = 0; k < a.dim; ++k) l.set(k, a.labels[i].get(k));
      for (int k = 0; k < b.dim; ++k) l.set(a.dim + k, b.labels[j].get(k));
      e.labels.push_back(std::move(l));
    }
  return e;
}

Embedding cycle_product_embedding(int a, int b) {
  int scale = (a % 2 == 0 && b % 2 == 0) ? 1 : 2;
  return concat_embeddings(cycle_embedding(a, scale), a, cycle_embedding(b, scale), b);
}

Embedding from_masks(int scale, int dim, const std::vector<uint32_t>& masks) {
  Embedding e;
  e.scale = scale;
  e.dim = dim;
  for (uint32_t mk : masks) {
    BitLabel l = BitLabel::zeros(dim);
    for (int k = 0; k < dim; ++k)
      if ((mk >> k) & 1) l.set(k, true);
    e.labels.push_back(std::move(l));
  }
  return e;
}

// K_{n+1} -> half-(n+1)-cube: vertex 0 at the origin, vertex i flips bits
// {0, i}.
Embedding simplex_half_cube(int n) {
  std::vector<uint32_t> masks = {0};
  for (int i = 1; i <= n; ++i) masks.push_back(1u | (1u << i));
  return from_masks(2, n + 1, masks);
}

// K_{n+1} labeled by k-subset indicator columns: dim C(n+1,k), scale
// 2*C(n-1,k-1); realizes the extremal dim/scale ratio of Remark4Params.
Embedding simplex_subset_indicator(int n, int k) {
  std::vector<std::vector<int>> cols;  // each column = a k-subset
  std::vector<int> comb(k);
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == k) {
      cols.push_back(comb);
      return;
    }
    for (int x = start; x <= n; ++x) {
      comb[depth] = x;
      self(self, x + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  int dim = static_cast<int>(cols.size());
  if (dim > 4096) fail(ErrorKind::Limit, "simplex_subset_indicator: dimension too large");
  Embedding e;
  e.dim = dim;
  e.labels.assign(n + 1, BitLabel::zeros(dim));
  for (int c = 0; c < dim; ++c)
    for (int x : cols[c]) e.labels[x].set(c, true);
  long long lambda = 0;  // = Hamming distance between any two vertices
  lambda = e.labels[0].hamming(e.labels[1]);
  e.scale = static_cast<int>(lambda);
  return e;
}

Embedding beta5_embedding() {
  // Five pairwise-distance-4 words of length 8 plus their complements.
  std::vector<uint32_t> words = {0b00000000, 0b00001111, 0b00110011, 0b01010101,
                                 0b11000011};
  std::vector<uint32_t> masks;
  for (uint32_t w : words) {
    masks.push_back(w);
    masks.push_back(~w & 0xFFu);
  }
  return from_masks(4, 8, masks);
}

Embedding verified(const Skeleton& g, Embedding e, bool core_only = false) {
  auto check = verify_embedding(g, e, core_only);
  if (!check.valid)
    fail(ErrorKind::Internal, "catalog embedding for " + g.name +
                                  " failed verification: " + check.reason);
  return e;
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"gamma1", "gamma2", "gamma3", "gamma4", "alpha3", "alpha4", "alpha5",
          "beta3",  "beta4",  "beta5",  "K4",     "K6",     "petersen",
          "icosahedron", "dodecahedron", "C5", "C3xC3", "C4xC4"};
}

Skeleton catalog_graph(const std::string& name) {
  if (name == "icosahedron") return platonic(parse_schlafli("{3,5}")).g;
  if (name == "dodecahedron") return platonic(parse_schlafli("{5,3}")).g;
  if (name == "C3xC3") return cycle_product(3, 3);
  if (name == "C4xC4") return cycle_product(4, 4);
  return named_graph(name);
}

Embedding catalog_embedding(const std::string& name) {
  Skeleton g = catalog_graph(name);
  int v = 0;
  auto num = [&](const std::string& prefix) {
    return std::stoi(name.substr(prefix.size()));
  };
  if (name.rfind("gamma", 0) == 0) {
    v = num("gamma");
    std::vector<uint32_t> masks;
    for (int i = 0; i < (1 << v); ++i) masks.push_back(static_cast<uint32_t>(i));
    return verified(g, from_masks(1, v, masks));
  }
  if (name == "alpha4") return verified(g, simplex_subset_indicator(4, 2));
  if (name.rfind("alpha", 0) == 0) return verified(g, simplex_half_cube(num("alpha")));
  if (name == "beta3")
    return verified(g, from_masks(2, 4, {0b0000, 0b1111, 0b0011, 0b1100, 0b0101, 0b1010}));
  if (name == "beta4")
    return verified(g, from_masks(2, 4, {0b0000, 0b1111, 0b0011, 0b1100, 0b0101, 0b1010,
                                         0b1001, 0b0110}));
  if (name == "beta5") return verified(g, beta5_embedding());
  if (name == "K4") return verified(g, from_masks(2, 4, {0b0000, 0b0011, 0b0101, 0b1001}));
  if (name == "K6")
    return verified(g, from_masks(2, 6, {0b000000, 0b000011, 0b000101, 0b001001,
                                         0b010001, 0b100001}));
  if (name == "petersen") {
    auto e = exhaustive_label_search(g, 2, 6);
    if (!e) fail(ErrorKind::Internal, "catalog: petersen label search failed");
    return verified(g, *e);
  }
  if (name == "icosahedron" || name == "dodecahedron") {
    Patch p = platonic(parse_schlafli(name == "icosahedron" ? "{3,5}" : "{5,3}"));
    auto z = zone_embed(p);
    if (!z.ok) fail(ErrorKind::Internal, "catalog: zone embedding failed: " + z.reason);
    return verified(g, z.embedding);
  }
  if (name == "C5") return verified(g, cycle_embedding(5, 2));
  if (name == "C3xC3") return verified(g, cycle_product_embedding(3, 3));
  if (name == "C4xC4") return verified(g, cycle_product_embedding(4, 4));
  fail(ErrorKind::Domain, "catalog_embedding: unknown name '" + name + "'");
}

// --- Remark 4 ----------------------------------------------------------------

Remark4Params remark4(int n) {
  if (n < 3) fail(ErrorKind::Constraint, "remark4: n >= 3 required");
  Remark4Params p;
  p.n = n;
  long long num = n % 2 ? 2LL * n : 2LL * n + 2;
  long long den = n % 2 ? n + 1 : n + 2;
  long long g = std::gcd(num, den);
  p.mn_num = num / g;
  p.mn_den = den / g;
  for (long long t = 2;; t += 2) {
    if ((t * p.mn_num) % p.mn_den == 0) {
      p.lambda_n = static_cast<int>(t);
      p.target_dim = static_cast<int>(t * p.mn_num / p.mn_den);
      break;
    }
  }
  p.mu_lower = 2 * ((n + 3) / 4);
  return p;
}

std::pair<Embedding, Embedding> two_embeddings_of_simplex(int n) {
  if (n < 3) fail(ErrorKind::Constraint, "two_embeddings_of_simplex: n >= 3 required");
  Skeleton g = complete_graph(n + 1);
  Embedding first = verified(g, simplex_half_cube(n));
  Embedding second;
  if (n == 3) {
    second = verified(g, from_masks(2, 3, {0b000, 0b011, 0b101, 0b110}));
  } else {
    second = verified(g, simplex_subset_indicator(n, (n + 1) / 2));
  }
  return {std::move(first), std::move(second)};
}

bool equivalent_embeddings(const Embedding& a, const Embedding& b) {
  if (a.scale != b.scale || a.dim != b.dim || a.labels.size() != b.labels.size())
    return false;
  auto columns = [](const Embedding& e) {
    int n = static_cast<int>(e.labels.size());
    BitLabel base = e.labels.empty() ? BitLabel::zeros(0) : e.labels[0];
    std::vector<BitLabel> cols(e.dim, BitLabel::zeros(n));
    for (int v = 0; v < n; ++v) {
      BitLabel l = e.labels[v];
      l.xor_with(base);
      for (int k = 0; k < e.dim; ++k)
        if (l.get(k)) cols[k].set(v, true);
    }
    std::sort(cols.begin(), cols.end());
    return cols;
  };
  return columns(a) == columns(b);
}

// --- balanced arcs -----------------------------------------------------------

namespace {

// Signed coordinate steps of the arc u -> v: +(k+1) when bit k rises,
// -(k+1) when it falls.
std::vector<int> arc_steps(const Embedding& e, int u, int v) {
  std::vector<int> steps;
  for (int k = 0; k < e.dim; ++k) {
    bool bu = e.labels[u].get(k), bv = e.labels[v].get(k);
    if (bu != bv) steps.push_back(bv ? k + 1 : -(k + 1));
  }
  return steps;
}

std::vector<int> negate_steps(std::vector<int> s) {
  for (int& x : s) x = -x;
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

bool balanced_arcs_check(const Skeleton& g, const Embedding& e,
                         const std::vector<int>& cycle) {
  int t = static_cast<int>(cycle.size());
  if (t < 3) fail(ErrorKind::Constraint, "balanced_arcs_check: cycle too short");
  for (int i = 0; i < t; ++i)
    if (!g.has_edge(cycle[i], cycle[(i + 1) % t]))
      fail(ErrorKind::Constraint, "balanced_arcs_check: not a closed walk");
  int gi = girth(g);
  if (!(t == gi || (gi % 2 == 0 && t == gi + 1)))
    fail(ErrorKind::Domain,
         "balanced_arcs_check: cycle length must be the girth (or girth+1 when even)");

  std::vector<std::vector<int>> steps(t);
  for (int i = 0; i < t; ++i) {
    steps[i] = arc_steps(e, cycle[i], cycle[(i + 1) % t]);
    if (static_cast<int>(steps[i].size()) != e.scale) return false;
  }
  if (t % 2 == 0) {
    for (int i = 0; i < t / 2; ++i) {
      auto a = steps[i];
      std::sort(a.begin(), a.end());
      if (a != negate_steps(steps[i + t / 2])) return false;
    }
    return true;
  }
  if (e.scale % 2)
    fail(ErrorKind::Domain, "balanced_arcs_check: odd circuit needs an even scale");
  int half = e.scale / 2;
  for (int i = 0; i < t; ++i) {
    const auto& e1 = steps[(i + (t - 1) / 2) % t];
    const auto& e2 = steps[(i + (t + 1) / 2) % t];
    auto target = steps[i];
    std::sort(target.begin(), target.end());
    bool found = false;
    for (uint32_t m1 = 0; m1 < (1u << e1.size()) && !found; ++m1) {
      if (std::popcount(m1) != half) continue;
      for (uint32_t m2 = 0; m2 < (1u << e2.size()) && !found; ++m2) {
        if (std::popcount(m2) != half) continue;
        std::vector<int> got;
        for (size_t k = 0; k < e1.size(); ++k)
          if ((m1 >> k) & 1) got.push_back(-e1[k]);
        for (size_t k = 0; k < e2.size(); ++k)
          if ((m2 >> k) & 1) got.push_back(-e2[k]);
        std::sort(got.begin(), got.end());
        found = got == target;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace cutlattice
