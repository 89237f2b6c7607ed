#include "cutlattice/cutcone.hpp"

#include <algorithm>

namespace cutlattice {

namespace {

struct CutSearch {
  int n;
  int scale;
  long long budget;
  long long nodes = 0;
  std::vector<uint32_t> cut_mask;            // canonical cuts, vertex 0 inside
  std::vector<std::vector<int>> pair_u, pair_v;
  std::vector<int> residual;                 // per pair id
  std::vector<int> chosen_mult;              // per cut index
  bool found = false;

  int pair_id(int u, int v) const { return u * n + v; }

  bool separates(uint32_t mask, int u, int v) const {
    return (((mask >> u) ^ (mask >> v)) & 1u) != 0;
  }

  // Applies cut c with multiplicity mult to the residuals; sign -1 undoes.
  void apply(int c, int mult, int sign) {
    uint32_t mask = cut_mask[c];
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (separates(mask, u, v)) residual[pair_id(u, v)] -= sign * mult;
  }

  // Largest multiplicity of cut c that keeps every residual nonnegative;
  // 0 when some separated pair is already exact.
  int max_mult(int c) const {
    uint32_t mask = cut_mask[c];
    int mm = INT32_MAX;
    for (int u = 0; u < n && mm > 0; ++u)
      for (int v = u + 1; v < n; ++v)
        if (separates(mask, u, v)) mm = std::min(mm, residual[pair_id(u, v)]);
    return mm;
  }

  bool solve(std::vector<char>& banned) {
    if (++nodes > budget) fail(ErrorKind::Limit, "cutcone_decompose: node budget exceeded");
    // One pass over the cuts: per-pair candidate counts and capacity (sum of
    // usable multiplicities). A pair whose capacity falls below its residual
    // is unreachable, so the branch dies.
    std::vector<int> cap(n * n, 0), cand_count(n * n, 0);
    std::vector<int> mm_of(cut_mask.size(), 0);
    for (size_t c = 0; c < cut_mask.size(); ++c) {
      if (banned[c]) continue;
      int mm = max_mult(static_cast<int>(c));
      if (mm <= 0) continue;
      mm_of[c] = mm;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (separates(cut_mask[c], u, v)) {
            cap[pair_id(u, v)] += mm;
            ++cand_count[pair_id(u, v)];
          }
    }
    int fu = -1, fv = -1, best_count = INT32_MAX;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        int r = residual[pair_id(u, v)];
        if (r == 0) continue;
        if (cap[pair_id(u, v)] < r) return false;
        if (cand_count[pair_id(u, v)] < best_count) {
          best_count = cand_count[pair_id(u, v)];
          fu = u;
          fv = v;
        }
      }
    if (fu < 0) return true;  // all pairs met exactly

    // Candidates for the branching pair, widest cuts first: the actual
    // decompositions of the catalog are made of balanced multiplicity-1
    // cuts, so try those early; exhaustiveness is unaffected.
    std::vector<std::pair<int, int>> candidates;  // (-separated count, index)
    for (size_t c = 0; c < cut_mask.size(); ++c) {
      if (!mm_of[c] || banned[c] || !separates(cut_mask[c], fu, fv)) continue;
      int sep = 0;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (residual[pair_id(u, v)] > 0 && separates(cut_mask[c], u, v)) ++sep;
      candidates.push_back({-sep, static_cast<int>(c)});
    }
    std::sort(candidates.begin(), candidates.end());

    std::vector<char> local_ban = banned;
    for (auto [neg_sep, c] : candidates) {
      if (local_ban[c]) continue;
      // The full multiplicity of c is fixed at this branch point, so c is
      // banned for the whole subtree either way.
      local_ban[c] = 1;
      for (int mult = 1; mult <= mm_of[c]; ++mult) {
        apply(c, mult, +1);
        chosen_mult[c] = mult;
        if (solve(local_ban)) return true;
        chosen_mult[c] = 0;
        apply(c, mult, -1);
      }
    }
    return false;
  }
};

}  // namespace

CutconeResult cutcone_decompose(const Skeleton& g, int scale, int n_max,
                                long long node_budget) {
  if (scale < 1) fail(ErrorKind::Constraint, "cutcone_decompose: scale >= 1");
  if (g.n > n_max || g.n > 28)
    fail(ErrorKind::Limit, "cutcone_decompose: graph larger than n_max");
  DistanceMatrix d = apsp(g);
  if (!d.connected()) fail(ErrorKind::Domain, "cutcone_decompose: graph disconnected");

  CutconeResult res;
  // Parity obstruction: every cut separates 0 or 2 pairs of a triple, so
  // scale * (d_uv + d_uw + d_vw) must be even for every triple.
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      for (int w = v + 1; w < g.n; ++w)
        if ((static_cast<long long>(scale) * (d(u, v) + d(u, w) + d(v, w))) % 2) {
          res.exists = false;
          return res;
        }

  CutSearch s;
  s.n = g.n;
  s.scale = scale;
  s.budget = node_budget;
  for (uint32_t bits = 0; bits < (1u << (g.n - 1)); ++bits) {
    uint32_t mask = (bits << 1) | 1u;  // vertex 0 on the inside
    if (mask == (1u << g.n) - 1) continue;  // full side separates nothing
    s.cut_mask.push_back(mask);
  }
  s.residual.assign(g.n * g.n, 0);
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      s.residual[s.pair_id(u, v)] = scale * d(u, v);
  s.chosen_mult.assign(s.cut_mask.size(), 0);

  std::vector<char> banned(s.cut_mask.size(), 0);
  if (!s.solve(banned)) {
    res.exists = false;
    return res;
  }
  CutDecomposition dec;
  dec.scale = scale;
  for (size_t c = 0; c < s.cut_mask.size(); ++c)
    if (s.chosen_mult[c] > 0) {
      CutDecomposition::Cut cut;
      cut.mult = s.chosen_mult[c];
      for (int v = 0; v < g.n; ++v)
        if ((s.cut_mask[c] >> v) & 1) cut.side.push_back(v);
      dec.cuts.push_back(std::move(cut));
    }
  if (!decomposition_matches(dec, d))
    fail(ErrorKind::Internal, "cutcone_decompose: unverified decomposition");
  res.exists = true;
  res.decomposition = std::move(dec);
  return res;
}

}  // namespace cutlattice
