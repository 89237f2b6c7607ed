#include "cutlattice/hypermetrics.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace cutlattice {

BVector BVector::kgonal(int k) {
  if (k != 5 && k != 7) fail(ErrorKind::Domain, "BVector::kgonal: k must be 5 or 7");
  BVector b;
  for (int i = 0; i < (k + 1) / 2; ++i) b.b.push_back(1);
  for (int i = 0; i < (k - 1) / 2; ++i) b.b.push_back(-1);
  return b;
}

void BVector::validate() const {
  if (b.size() % 2 == 0 || b.size() < 5)
    fail(ErrorKind::Constraint, "BVector: size must be odd and >= 5");
  int sum = 0;
  for (int x : b) {
    if (x != 1 && x != -1) fail(ErrorKind::Constraint, "BVector: entries must be +-1");
    sum += x;
  }
  // b and -b define the same inequality; normalize to sum +1.
  if (sum != 1 && sum != -1)
    fail(ErrorKind::Constraint, "BVector: entries must sum to +-1");
}

std::vector<int> ViolationCertificate::tuple() const {
  std::vector<int> t = positive;
  t.insert(t.end(), negative.begin(), negative.end());
  return t;
}

KgonalResult kgonal_check(const DistanceMatrix& d, const std::vector<int>& tuple,
                          const BVector& bv) {
  bv.validate();
  if (tuple.size() != bv.b.size())
    fail(ErrorKind::Constraint, "kgonal_check: tuple / b size mismatch");
  std::vector<int> sorted = tuple;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(ErrorKind::Constraint, "kgonal_check: tuple vertices must be distinct");
  for (int v : tuple)
    if (v < 0 || v >= d.size())
      fail(ErrorKind::Constraint, "kgonal_check: vertex out of range");

  int sign = 0;
  for (int x : bv.b) sign += x;
  long long lhs = 0, rhs = 0;
  for (size_t i = 0; i < tuple.size(); ++i)
    for (size_t j = i + 1; j < tuple.size(); ++j) {
      uint16_t dij = d(tuple[i], tuple[j]);
      if (dij == DistanceMatrix::kInf)
        fail(ErrorKind::Constraint, "kgonal_check: disconnected pair in tuple");
      if (bv.b[i] * bv.b[j] > 0)
        lhs += dij;
      else
        rhs += dij;
    }
  KgonalResult res;
  res.holds = lhs <= rhs;
  if (!res.holds) {
    ViolationCertificate c;
    c.k = static_cast<int>(tuple.size());
    for (size_t i = 0; i < tuple.size(); ++i)
      (bv.b[i] * sign > 0 ? c.positive : c.negative).push_back(tuple[i]);
    std::sort(c.positive.begin(), c.positive.end());
    std::sort(c.negative.begin(), c.negative.end());
    c.lhs = lhs;
    c.rhs = rhs;
    auto t = c.tuple();
    c.dist.assign(t.size(), std::vector<int>(t.size(), 0));
    for (size_t i = 0; i < t.size(); ++i)
      for (size_t j = 0; j < t.size(); ++j) c.dist[i][j] = d(t[i], t[j]);
    res.certificate = std::move(c);
  }
  return res;
}

bool recheck_certificate(const ViolationCertificate& c, const DistanceMatrix& d) {
  auto t = c.tuple();
  long long lhs = 0, rhs = 0;
  size_t np = c.positive.size();
  for (size_t i = 0; i < t.size(); ++i)
    for (size_t j = i + 1; j < t.size(); ++j) {
      uint16_t dij = d(t[i], t[j]);
      if (dij == DistanceMatrix::kInf) return false;
      if (c.dist[i][j] != dij) return false;
      bool same_group = (i < np) == (j < np);
      (same_group ? lhs : rhs) += dij;
    }
  return lhs == c.lhs && rhs == c.rhs && lhs > rhs;
}

namespace {

struct Searcher {
  const DistanceMatrix& d;
  int k;
  int npos, nneg;
  bool all;
  long long budget;
  long long seen = 0;
  std::vector<ViolationCertificate> out;

  bool check(const std::vector<int>& neg, const std::vector<int>& pos) {
    if (++seen > budget)
      fail(ErrorKind::Limit, "find_violation: tuple budget exceeded");
    long long lhs = 0, rhs = 0;
    for (int i = 0; i < nneg; ++i)
      for (int j = i + 1; j < nneg; ++j) lhs += d(neg[i], neg[j]);
    for (int i = 0; i < npos; ++i)
      for (int j = i + 1; j < npos; ++j) lhs += d(pos[i], pos[j]);
    for (int i = 0; i < nneg; ++i)
      for (int j = 0; j < npos; ++j) rhs += d(neg[i], pos[j]);
    if (lhs <= rhs) return false;
    ViolationCertificate c;
    c.k = k;
    c.positive = pos;
    c.negative = neg;
    c.lhs = lhs;
    c.rhs = rhs;
    auto t = c.tuple();
    c.dist.assign(t.size(), std::vector<int>(t.size(), 0));
    for (size_t i = 0; i < t.size(); ++i)
      for (size_t j = 0; j < t.size(); ++j) c.dist[i][j] = d(t[i], t[j]);
    out.push_back(std::move(c));
    return true;
  }

  // Exhaustive scan over a sorted candidate set: negatives then positives,
  // both in lexicographic order. Returns true if First-mode should stop.
  bool scan_subset(const std::vector<int>& cand) {
    if (static_cast<int>(cand.size()) < k) return false;
    std::vector<int> neg(nneg), pos(npos);
    std::vector<char> used(cand.size(), 0);
    return pick_neg(cand, used, neg, pos, 0, 0);
  }

  bool pick_neg(const std::vector<int>& cand, std::vector<char>& used,
                std::vector<int>& neg, std::vector<int>& pos, int depth, int from) {
    if (depth == nneg) return pick_pos(cand, used, neg, pos, 0, 0);
    for (size_t i = from; i < cand.size(); ++i) {
      if (used[i]) continue;
      used[i] = 1;
      neg[depth] = cand[i];
      if (pick_neg(cand, used, neg, pos, depth + 1, static_cast<int>(i) + 1)) {
        used[i] = 0;
        return true;
      }
      used[i] = 0;
    }
    return false;
  }

  bool pick_pos(const std::vector<int>& cand, std::vector<char>& used,
                std::vector<int>& neg, std::vector<int>& pos, int depth, int from) {
    if (depth == npos) return check(neg, pos) && !all;
    for (size_t i = from; i < cand.size(); ++i) {
      if (used[i]) continue;
      used[i] = 1;
      pos[depth] = cand[i];
      if (pick_pos(cand, used, neg, pos, depth + 1, static_cast<int>(i) + 1)) {
        used[i] = 0;
        return true;
      }
      used[i] = 0;
    }
    return false;
  }
};

}  // namespace

std::vector<ViolationCertificate> find_violation(const Skeleton& g, int k,
                                                 const SearchOptions& opts) {
  if (k != 5 && k != 7) fail(ErrorKind::Domain, "find_violation: k must be 5 or 7");
  DistanceMatrix d = apsp(g);

  Searcher s{d, k, (k + 1) / 2, (k - 1) / 2, opts.mode == SearchMode::All,
             opts.tuple_budget};

  if (opts.restrict_to) {
    std::vector<int> cand = *opts.restrict_to;
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    for (int v : cand)
      if (v < 0 || v >= g.n) fail(ErrorKind::Constraint, "find_violation: subset out of range");
    s.scan_subset(cand);
    return std::move(s.out);
  }

  if (!d.connected()) fail(ErrorKind::Domain, "find_violation: graph disconnected");

  if (opts.mode == SearchMode::First) {
    // The known violations all live in small-diameter neighborhoods: for
    // 5-gonal tuples try the common neighborhood of each near pair (the
    // cross distances of the paper-style certificates are all 1); for
    // 7-gonal tuples scan closed neighborhoods.
    if (k == 5) {
      for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b) {
          if (d(a, b) > 2) continue;
          std::vector<int> common;
          for (int x = 0; x < g.n; ++x)
            if (x != a && x != b && d(a, x) == 1 && d(b, x) == 1) common.push_back(x);
          if (common.size() < 3) continue;
          std::vector<int> pos(3);
          for (size_t i = 0; i < common.size(); ++i)
            for (size_t j = i + 1; j < common.size(); ++j)
              for (size_t l = j + 1; l < common.size(); ++l) {
                pos = {common[i], common[j], common[l]};
                std::vector<int> neg = {a, b};
                if (s.check(neg, pos)) return std::move(s.out);
              }
        }
    } else {
      for (int c = 0; c < g.n; ++c) {
        std::vector<int> cand = {c};
        for (int u : g.adj[c]) cand.push_back(u);
        std::sort(cand.begin(), cand.end());
        if (s.scan_subset(cand)) return std::move(s.out);
      }
    }
  }

  // Full enumeration over the whole vertex set.
  std::vector<int> everything(g.n);
  for (int v = 0; v < g.n; ++v) everything[v] = v;

  int threads = opts.threads > 0 ? opts.threads
                                 : static_cast<int>(std::thread::hardware_concurrency());
  if (threads <= 1 || g.n < 32) {
    s.out.clear();
    s.scan_subset(everything);
    return std::move(s.out);
  }

  // Parallel over the first negative vertex; results merge in index order so
  // the outcome is identical for any thread count.
  std::vector<std::vector<ViolationCertificate>> results(g.n);
  std::vector<std::string> errors(g.n);
  std::atomic<int> next{0};
  std::atomic<int> found_at{g.n};
  long long per_chunk = opts.tuple_budget / std::max(1, g.n);
  auto worker = [&]() {
    for (;;) {
      int a = next.fetch_add(1);
      if (a >= g.n) return;
      if (!s.all && a > found_at.load()) return;
      Searcher local{d, k, s.npos, s.nneg, s.all, std::max<long long>(per_chunk, 1000)};
      try {
        std::vector<int> neg(local.nneg), pos(local.npos);
        std::vector<char> used(g.n, 0);
        neg[0] = a;
        used[a] = 1;
        local.pick_neg(everything, used, neg, pos, 1, a + 1);
      } catch (const Error& e) {
        errors[a] = e.what();
      }
      results[a] = std::move(local.out);
      if (!results[a].empty() && !s.all) {
        int cur = found_at.load();
        while (a < cur && !found_at.compare_exchange_weak(cur, a)) {
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  std::vector<ViolationCertificate> merged;
  for (int a = 0; a < g.n; ++a) {
    if (!s.all && !results[a].empty()) {
      merged.push_back(std::move(results[a].front()));
      return merged;
    }
    if (!errors[a].empty()) fail(ErrorKind::Limit, errors[a]);
    for (auto& c : results[a]) merged.push_back(std::move(c));
  }
  return merged;
}

}  // namespace cutlattice
