#include "cutlattice/report.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "cutlattice/cutcone.hpp"
#include "cutlattice/tiling.hpp"
#include "cutlattice/zones.hpp"

namespace cutlattice {

std::vector<int> shortest_cycle(const Skeleton& g) {
  int best_len = -1;
  std::vector<int> best;
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[u]) {
      if (v < u) continue;
      // Shortest u-v path avoiding the edge uv closes a cycle through it.
      std::vector<int> par(g.n, -2);
      std::vector<int> queue = {u};
      par[u] = -1;
      for (size_t h = 0; h < queue.size(); ++h) {
        int x = queue[h];
        if (x == v) break;
        for (int y : g.adj[x]) {
          if (par[y] != -2) continue;
          if (x == u && y == v) continue;
          par[y] = x;
          queue.push_back(y);
        }
      }
      if (par[v] == -2) continue;
      std::vector<int> path;
      for (int x = v; x != -1; x = par[x]) path.push_back(x);
      if (best_len < 0 || static_cast<int>(path.size()) < best_len) {
        best_len = static_cast<int>(path.size());
        best = path;
      }
    }
  return best;  // empty for forests
}

namespace {

struct Suite {
  Report rep;
  ReportOptions opts;

  void add(const std::string& id, const std::string& detail, bool ok,
           const std::string& computed, const std::string& expected) {
    ReportEntry e;
    e.id = id;
    e.detail = detail;
    e.computed = computed;
    e.expected = expected;
    e.status = ok ? ReportEntry::Status::Pass : ReportEntry::Status::Fail;
    rep.entries.push_back(std::move(e));
  }

  void add_skip(const std::string& id, const std::string& detail,
                const std::string& why) {
    ReportEntry e;
    e.id = id;
    e.detail = detail;
    e.computed = "skipped: " + why;
    e.expected = "";
    e.status = ReportEntry::Status::Skipped;
    rep.entries.push_back(std::move(e));
  }

  // Runs f() -> (ok, computed, expected); exceptions become failures.
  template <typename F>
  void entry(const std::string& id, const std::string& detail, F&& f) {
    try {
      auto [ok, computed, expected] = f();
      add(id, detail, ok, computed, expected);
    } catch (const std::exception& e) {
      add(id, detail, false, std::string("exception: ") + e.what(), "no exception");
    }
  }

  SearchOptions search_opts(SearchMode mode = SearchMode::First) const {
    SearchOptions s;
    s.mode = mode;
    s.threads = opts.threads;
    return s;
  }
};

using Triple = std::tuple<bool, std::string, std::string>;

std::string fmt_dims(const Embedding& e) {
  return "scale " + std::to_string(e.scale) + ", dim " + std::to_string(e.dim);
}

Triple expect_dims(const Skeleton& g, const Embedding& e, int scale, int dim) {
  auto v = verify_embedding(g, e, g.core.has_value());
  bool ok = v.valid && e.scale == scale && e.dim == dim;
  return {ok, (v.valid ? "valid, " : "invalid, ") + fmt_dims(e),
          "valid, scale " + std::to_string(scale) + ", dim " + std::to_string(dim)};
}

void criterion1(Suite& s) {
  s.entry("c1.count", "table of spherical representations has 36 entries", [] {
    auto t = enumerate_table2();
    return Triple{t.size() == 36, std::to_string(t.size()), "36"};
  });
  s.entry("c1.densities", "all computed densities equal the stored values", [] {
    auto t = enumerate_table2();  // throws on any mismatch
    int positive = 0;
    for (const auto& e : t)
      if (density(e) > 0) ++positive;
    return Triple{positive == 36, std::to_string(positive) + " positive integer densities",
                  "36"};
  });
  s.entry("c1.genus", "8 entries of genus 4, 28 of genus 0", [] {
    int g4 = 0, g0 = 0;
    for (const auto& e : enumerate_table2()) {
      int g = genus(e);
      if (g == 4) ++g4;
      if (g == 0) ++g0;
    }
    return Triple{g4 == 8 && g0 == 28,
                  std::to_string(g4) + " of genus 4, " + std::to_string(g0) + " of genus 0",
                  "8 of genus 4, 28 of genus 0"};
  });
  s.entry("c1.doubled", "doubled polygons (2/1, m/i) have density i", [] {
    bool ok = true;
    for (int m = 2; m <= 13; ++m)
      for (int q = 1; q < m; ++q) {
        if (std::gcd(m, q) != 1) continue;
        ok = ok && density(doubled_polygon_entry(true, make_fraction(m, q))) == q;
        ok = ok && density(doubled_polygon_entry(false, make_fraction(m, q))) == q;
      }
    return Triple{ok, ok ? "density = turning number for all checked fractions" : "mismatch",
                  "density = turning number"};
  });
}

void criterion2(Suite& s) {
  for (int m : {5, 7, 9, 11}) {
    int want = m == 5 ? 3 : m - 1;
    s.entry("c2.girth-star-" + std::to_string(m),
            "girth of the {" + std::to_string(m) + "/2," + std::to_string(m) + "} skeleton",
            [m, want] {
              Skeleton g = star_honeycomb_skeleton(m, 1);
              int got = girth(g, true);
              return Triple{got == want, std::to_string(got), std::to_string(want)};
            });
  }
}

// A certificate matching the stated pattern: negatives at distance 2,
// positive distances {1,2,2}, all cross distances 1, sides 7 > 6.
bool fig3_pattern(const ViolationCertificate& c) {
  if (c.lhs != 7 || c.rhs != 6) return false;
  const auto& d = c.dist;  // order: positive (3), negative (2)
  if (d[3][4] != 2) return false;
  std::vector<int> pos_d = {d[0][1], d[0][2], d[1][2]};
  std::sort(pos_d.begin(), pos_d.end());
  if (pos_d != std::vector<int>{1, 2, 2}) return false;
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 5; ++j)
      if (d[i][j] != 1) return false;
  return true;
}

void criterion3(Suite& s) {
  s.entry("c3.counts", "{5/2,5,3} skeleton has 120 vertices, 1200 edges, degree 20", [] {
    Skeleton g = star_4polytope(parse_schlafli("{5/2,5,3}"));
    bool reg = true;
    for (int v = 0; v < g.n; ++v) reg = reg && g.degree(v) == 20;
    bool ok = g.n == 120 && g.edge_count() == 1200 && reg;
    return Triple{ok,
                  std::to_string(g.n) + " vertices, " + std::to_string(g.edge_count()) +
                      " edges, " + (reg ? "20-regular" : "not regular"),
                  "120 vertices, 1200 edges, 20-regular"};
  });
  s.entry("c3.certificate",
          "5-gonal violation on {5/2,5,3} with sides 7 > 6 and the adjacent-cells pattern",
          [&s] {
            Skeleton g = star_4polytope(parse_schlafli("{5/2,5,3}"));
            auto certs = find_violation(g, 5, s.search_opts());
            DistanceMatrix d = apsp(g);
            bool found = false;
            for (const auto& c : certs) found = found || fig3_pattern(c);
            if (!found) {
              // Scan near pairs exhaustively for the stated pattern.
              for (int a = 0; a < g.n && !found; ++a)
                for (int b = a + 1; b < g.n && !found; ++b) {
                  if (d(a, b) != 2) continue;
                  std::vector<int> sub = {a, b};
                  for (int x = 0; x < g.n; ++x)
                    if (d(a, x) == 1 && d(b, x) == 1) sub.push_back(x);
                  SearchOptions so;
                  so.mode = SearchMode::All;
                  so.restrict_to = sub;
                  for (const auto& c : find_violation(g, 5, so))
                    if (fig3_pattern(c) && recheck_certificate(c, d)) {
                      found = true;
                      break;
                    }
                }
            }
            return Triple{found && !certs.empty(),
                          found ? "violation with sides 7 > 6, pattern matched"
                                : "pattern not found",
                          "violation, sides 7 > 6, d_ab=2, cell distances {1,2,2}, cross 1"};
          });
}

void criterion4(Suite& s) {
  s.entry("c4.24-cell", "5-gonal violation in the 24-cell with sides 7 > 6", [&s] {
    Skeleton g = regular_4polytope("24-cell");
    auto certs = find_violation(g, 5, s.search_opts());
    bool seven_six = false;
    for (const auto& c : certs) seven_six = seven_six || (c.lhs == 7 && c.rhs == 6);
    if (!certs.empty() && !seven_six) {
      SearchOptions so = s.search_opts(SearchMode::All);
      for (const auto& c : find_violation(g, 5, so))
        seven_six = seven_six || (c.lhs == 7 && c.rhs == 6);
    }
    return Triple{seven_six, seven_six ? "violation 7 > 6" : "none with sides 7 > 6",
                  "violation 7 > 6"};
  });
  s.entry("c4.k5-k3", "5-gonal violation in K5 minus a triangle, sides 7 > 6", [&s] {
    Skeleton g = k5_minus_k3();
    auto certs = find_violation(g, 5, s.search_opts());
    bool ok = !certs.empty() && certs[0].lhs == 7 && certs[0].rhs == 6;
    return Triple{ok,
                  certs.empty() ? "no violation"
                                : std::to_string(certs[0].lhs) + " > " +
                                      std::to_string(certs[0].rhs),
                  "7 > 6"};
  });
  s.entry("c4.pyramid-icosahedron", "7-gonal violation in the pyramid over the icosahedron",
          [&s] {
            Skeleton g = pyramid(platonic(parse_schlafli("{3,5}")).g);
            auto certs = find_violation(g, 7, s.search_opts());
            return Triple{!certs.empty(),
                          certs.empty() ? "none" : "violation found", "violation found"};
          });
  if (s.opts.tiny) {
    s.add_skip("c4.600-cell", "7-gonal violation in the 600-cell", "tiny budget");
  } else {
    s.entry("c4.600-cell", "7-gonal violation in the 600-cell", [&s] {
      Skeleton g = regular_4polytope("600-cell");
      auto certs = find_violation(g, 7, s.search_opts());
      DistanceMatrix d = apsp(g);
      bool ok = !certs.empty() && recheck_certificate(certs[0], d);
      return Triple{ok, ok ? "violation found and rechecked" : "none", "violation found"};
    });
  }
}

void criterion5(Suite& s) {
  s.entry("c5.gamma3", "cube embeds at scale 1 into H_3", [] {
    return expect_dims(named_graph("gamma3"), catalog_embedding("gamma3"), 1, 3);
  });
  s.entry("c5.alpha3", "tetrahedron embeds into half-H_3 and half-H_4, inequivalently", [] {
    auto [a, b] = two_embeddings_of_simplex(3);
    Skeleton g = complete_graph(4);
    bool ok = verify_embedding(g, a).valid && verify_embedding(g, b).valid &&
              a.scale == 2 && a.dim == 4 && b.scale == 2 && b.dim == 3 &&
              !equivalent_embeddings(a, b);
    return Triple{ok, ok ? "both valid, inequivalent" : "failed",
                  "scale 2 dims 4 and 3, inequivalent"};
  });
  s.entry("c5.beta3", "octahedron embeds into half-H_4", [] {
    return expect_dims(named_graph("beta3"), catalog_embedding("beta3"), 2, 4);
  });
  s.entry("c5.icosahedron", "icosahedron embeds into half-H_6", [] {
    return expect_dims(catalog_graph("icosahedron"), catalog_embedding("icosahedron"), 2, 6);
  });
  s.entry("c5.dodecahedron", "dodecahedron embeds into half-H_10", [] {
    return expect_dims(catalog_graph("dodecahedron"), catalog_embedding("dodecahedron"), 2,
                       10);
  });
  s.entry("c5.patch-44", "{4,4} patch embeds at scale 1 via zones", [] {
    Patch p = make_patch(parse_schlafli("{4,4}"), 3);
    auto z = zone_embed(p);
    return Triple{z.ok && z.embedding.scale == 1,
                  z.ok ? fmt_dims(z.embedding) : z.reason, "valid at scale 1"};
  });
  s.entry("c5.patch-63", "{6,3} patch is a partial cube with 3 zone-direction families", [] {
    Patch p = make_patch(parse_schlafli("{6,3}"), 3);
    auto pc = partial_cube(p.g);
    if (!pc.is_partial_cube) return Triple{false, pc.reason, "partial cube, 3 families"};
    auto fam = direction_families(p, pc.classes);
    bool ok = fam && fam->second == 3;
    return Triple{ok, ok ? "partial cube, 3 families" : "families mismatch",
                  "partial cube, 3 families"};
  });
  s.entry("c5.patch-36", "{3,6} patch embeds at scale 2 with 3 zone-direction families", [] {
    Patch p = make_patch(parse_schlafli("{3,6}"), 3);
    auto z = zone_embed(p);
    bool ok = z.ok && z.embedding.scale == 2 && z.family_count == 3;
    return Triple{ok,
                  z.ok ? fmt_dims(z.embedding) + ", " + std::to_string(z.family_count) +
                             " families"
                       : z.reason,
                  "valid at scale 2, 3 families"};
  });
  for (const char* sym : {"{7,3}", "{5,4}"}) {
    s.entry(std::string("c5.patch-") + (sym[1] == '7' ? "73" : "54"),
            std::string("hyperbolic ") + sym + " patch embeds at scale 2 via zones", [sym] {
              Patch p = make_patch(parse_schlafli(sym), 2);
              auto z = zone_embed(p);
              return Triple{z.ok && z.embedding.scale == 2,
                            z.ok ? fmt_dims(z.embedding) : z.reason, "valid at scale 2"};
            });
  }
}

void criterion6(Suite& s) {
  s.entry("c6.quotients", "antipodal quotients: cube->K4, icosahedron->K6, "
                          "dodecahedron->Petersen", [] {
    bool ok = isomorphic(antipodal_quotient(platonic(parse_schlafli("{4,3}")).g),
                         complete_graph(4)) &&
              isomorphic(antipodal_quotient(platonic(parse_schlafli("{3,5}")).g),
                         complete_graph(6)) &&
              isomorphic(antipodal_quotient(platonic(parse_schlafli("{5,3}")).g), petersen());
    return Triple{ok, ok ? "all three isomorphic" : "mismatch", "K4, K6, Petersen"};
  });
  s.entry("c6.petersen", "Petersen graph embeds into half-H_6", [] {
    return expect_dims(catalog_graph("petersen"), catalog_embedding("petersen"), 2, 6);
  });
  s.entry("c6.K6", "K6 embeds into half-H_6", [] {
    return expect_dims(catalog_graph("K6"), catalog_embedding("K6"), 2, 6);
  });
  s.entry("c6.K4", "K4 embeds into half-H_4", [] {
    return expect_dims(catalog_graph("K4"), catalog_embedding("K4"), 2, 4);
  });
  s.entry("c6.C3xC3", "C3 x C3 embeds into half-H_6", [] {
    return expect_dims(catalog_graph("C3xC3"), catalog_embedding("C3xC3"), 2, 6);
  });
  s.entry("c6.C4xC4", "C4 x C4 embeds into H_4", [] {
    return expect_dims(catalog_graph("C4xC4"), catalog_embedding("C4xC4"), 1, 4);
  });
}

void criterion7(Suite& s) {
  s.entry("c7.remark4-params", "simplex scale arithmetic at n=4: m_4 = 5/3, lambda_4 = 6",
          [] {
            auto p = remark4(4);
            bool ok = p.mn_num == 5 && p.mn_den == 3 && p.lambda_n == 6 && p.target_dim == 10;
            return Triple{ok,
                          "m_4 = " + std::to_string(p.mn_num) + "/" + std::to_string(p.mn_den) +
                              ", lambda_4 = " + std::to_string(p.lambda_n) + ", dim " +
                              std::to_string(p.target_dim),
                          "m_4 = 5/3, lambda_4 = 6, dim 10"};
          });
  s.entry("c7.alpha4", "K5 embeds into the 10-cube at scale 6", [] {
    return expect_dims(complete_graph(5), catalog_embedding("alpha4"), 6, 10);
  });
  s.entry("c7.beta5-embed", "beta_5 embeds into H_8 at scale 4", [] {
    return expect_dims(catalog_graph("beta5"), catalog_embedding("beta5"), 4, 8);
  });
  if (s.opts.tiny) {
    s.add_skip("c7.beta5-scale2", "exhaustive: beta_5 has no scale-2 decomposition",
               "tiny budget");
  } else {
    s.entry("c7.beta5-scale2",
            "exhaustive search over the 511 canonical cuts: no scale-2 decomposition",
            [] {
              auto r = cutcone_decompose(cocktail_party(5), 2);
              return Triple{!r.exists, r.exists ? "decomposition found" : "none exists",
                            "none exists"};
            });
  }
}

void criterion8(Suite& s) {
  s.entry("c8.no-violations", "verified embeddings admit no 5/7-gonal violations", [&s] {
    for (const auto& name : catalog_names()) {
      Skeleton g = catalog_graph(name);
      Embedding e = catalog_embedding(name);
      if (!verify_embedding(g, e).valid) return Triple{false, name + ": invalid", "valid"};
      for (int k : {5, 7}) {
        if (g.n < k) continue;
        SearchOptions so = s.search_opts(SearchMode::All);
        if (!find_violation(g, k, so).empty())
          return Triple{false, name + ": violation at k=" + std::to_string(k), "none"};
      }
    }
    return Triple{true, "all embeddable catalog graphs clean", "no violations"};
  });
  s.entry("c8.partial-cube-vs-cutcone",
          "partial cube recognition agrees with scale-1 cut decompositions (n <= 12)",
          [] {
            std::vector<std::string> names;
            for (const auto& n : catalog_names()) names.push_back(n);
            for (const auto& name : names) {
              Skeleton g = catalog_graph(name);
              if (g.n > 12) continue;
              bool pc = partial_cube(g).is_partial_cube;
              bool cc = cutcone_decompose(g, 1).exists;
              if (pc != cc)
                return Triple{false, name + ": partial_cube=" + std::to_string(pc) +
                                         " cutcone=" + std::to_string(cc),
                              "agreement"};
            }
            // A bipartite non-partial-cube control.
            Skeleton k23 = make_skeleton("K2,3", 5);
            for (int a = 0; a < 2; ++a)
              for (int b = 2; b < 5; ++b) k23.add_edge(a, b);
            k23.sort_adjacency();
            bool pc = partial_cube(k23).is_partial_cube;
            bool cc = cutcone_decompose(k23, 1).exists;
            if (pc || cc)
              return Triple{false, "K2,3 accepted at scale 1", "rejected at scale 1"};
            return Triple{true, "agreement on all catalog graphs and K2,3", "agreement"};
          });
  s.entry("c8.balanced-arcs",
          "arc balance holds on girth circuits and fails on corrupted labelings "
          "(200 trials)",
          [] {
            std::mt19937 rng(20260810);
            int trials = 0;
            for (const auto& name : catalog_names()) {
              Skeleton g = catalog_graph(name);
              Embedding e = catalog_embedding(name);
              auto cyc = shortest_cycle(g);
              if (cyc.empty()) continue;
              if (!balanced_arcs_check(g, e, cyc))
                return Triple{false, name + ": girth circuit unbalanced", "balanced"};
            }
            // Corruptions: flip one label bit of a cycle vertex.
            std::vector<std::string> names = catalog_names();
            while (trials < 200) {
              const auto& name = names[rng() % names.size()];
              Skeleton g = catalog_graph(name);
              Embedding e = catalog_embedding(name);
              auto cyc = shortest_cycle(g);
              if (cyc.empty() || e.dim == 0) continue;
              int v = cyc[rng() % cyc.size()];
              int bit = static_cast<int>(rng() % e.dim);
              e.labels[v].set(bit, !e.labels[v].get(bit));
              ++trials;
              if (balanced_arcs_check(g, e, cyc))
                return Triple{false, name + ": corruption not detected", "detected"};
            }
            return Triple{true, "all circuits balanced; 200/200 corruptions detected",
                          "balanced; corruptions detected"};
          });
}

void criterion9(Suite& s) {
  struct Case {
    const char* sym;
    int radius;
  };
  for (Case c : {Case{"{4,4}", 4}, Case{"{6,3}", 4}, Case{"{3,6}", 4}, Case{"{7,3}", 3},
                 Case{"{3,7}", 2}, Case{"{5,4}", 2}}) {
    std::string id = std::string("c9.stability-") + c.sym;
    s.entry(id, std::string("core distances stable under margin growth for ") + c.sym,
            [c] {
              auto sym = parse_schlafli(c.sym);
              int margin = sym.entries[0].frac->p;  // default margin M = p
              bool ok = distance_stability(sym, c.radius, margin);
              return Triple{ok, ok ? "stable" : "core distances changed", "stable"};
            });
  }
  s.entry("c9.interior-regularity", "every core vertex has full degree and face count", [] {
    for (const char* txt : {"{4,4}", "{6,3}", "{3,6}", "{7,3}", "{3,7}", "{5,4}"}) {
      auto sym = parse_schlafli(txt);
      Patch p = make_patch(sym, 3);
      int q = sym.entries[1].frac->p;
      for (int v = 0; v < p.g.n; ++v)
        if (p.g.is_core(v) && (p.g.degree(v) != q || !p.interior(v)))
          return Triple{false, std::string(txt) + ": irregular core vertex", "regular"};
    }
    return Triple{true, "all core vertices regular", "regular"};
  });
}

void atlas_override_entries(Suite& s) {
  if (s.opts.atlas_override.empty()) return;
  s.entry("extra.atlas-file", "external atlas data matches the built-in tables", [&s] {
    std::ifstream in(s.opts.atlas_override);
    if (!in) fail(ErrorKind::Parse, "cannot open " + s.opts.atlas_override);
    Json j = Json::parse(in);
    int mismatches = 0;
    std::string first_diff;
    for (const auto& item : j) {
      auto sym = parse_schlafli(item.at("symbol").get<std::string>());
      Json want = atlas_entry_to_json(atlas_status(sym));
      if (want != item) {
        ++mismatches;
        if (first_diff.empty())
          first_diff = "first diff at " + format(sym) + ": got " + item.dump() +
                       ", want " + want.dump();
      }
    }
    return Triple{mismatches == 0,
                  mismatches == 0 ? "all entries match"
                                  : std::to_string(mismatches) + " mismatches; " + first_diff,
                  "all entries match"};
  });
}

}  // namespace

Report run_report(const ReportOptions& opts) {
  Suite s;
  s.opts = opts;
  criterion1(s);
  criterion2(s);
  criterion3(s);
  criterion4(s);
  criterion5(s);
  criterion6(s);
  criterion7(s);
  criterion8(s);
  criterion9(s);
  atlas_override_entries(s);
  for (const auto& e : s.rep.entries) {
    if (e.status == ReportEntry::Status::Pass) ++s.rep.passed;
    if (e.status == ReportEntry::Status::Fail) ++s.rep.failed;
    if (e.status == ReportEntry::Status::Skipped) ++s.rep.skipped;
  }
  return s.rep;
}

Json report_to_json(const Report& r) {
  Json j;
  j["schema"] = "cutlattice-report-v1";
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json je;
    je["id"] = e.id;
    je["detail"] = e.detail;
    je["computed"] = e.computed;
    je["expected"] = e.expected;
    je["status"] = e.status == ReportEntry::Status::Pass     ? "pass"
                   : e.status == ReportEntry::Status::Fail   ? "fail"
                                                             : "skipped";
    entries.push_back(std::move(je));
  }
  j["entries"] = std::move(entries);
  j["passed"] = r.passed;
  j["failed"] = r.failed;
  j["skipped"] = r.skipped;
  return j;
}

std::string report_to_text(const Report& r) {
  std::ostringstream out;
  for (const auto& e : r.entries) {
    const char* tag = e.status == ReportEntry::Status::Pass     ? "PASS"
                      : e.status == ReportEntry::Status::Fail   ? "FAIL"
                                                                : "SKIP";
    out << tag << ' ' << e.id << ": " << e.detail;
    if (e.status == ReportEntry::Status::Fail)
      out << " [computed: " << e.computed << "; expected: " << e.expected << "]";
    if (e.status == ReportEntry::Status::Skipped) out << " [" << e.computed << "]";
    out << '\n';
  }
  out << r.passed << " passed, " << r.failed << " failed, " << r.skipped << " skipped\n";
  return out.str();
}

}  // namespace cutlattice
