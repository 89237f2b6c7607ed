#include "cutlattice.h"

#include <cstring>
#include <string>

#include "cutlattice/cutcone.hpp"
#include "cutlattice/report.hpp"
#include "cutlattice/tiling.hpp"
#include "cutlattice/zones.hpp"

using namespace cutlattice;

struct clat_graph {
  Skeleton g;
  std::optional<Patch> patch;  // present when faces are known
};

namespace {

thread_local std::string g_last_error;

int code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return CLAT_ERR_PARSE;
    case ErrorKind::Constraint: return CLAT_ERR_CONSTRAINT;
    case ErrorKind::Domain: return CLAT_ERR_DOMAIN;
    case ErrorKind::Limit: return CLAT_ERR_LIMIT;
    case ErrorKind::Internal: return CLAT_ERR_INTERNAL;
  }
  return CLAT_ERR_INTERNAL;
}

template <typename F>
int guarded(F&& f) {
  try {
    f();
    return CLAT_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return code_for(e.kind());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CLAT_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Builds a graph from the generator grammar shared with the CLI.
clat_graph* generate(const std::string& spec, int radius, int margin, int budget) {
  auto out = new clat_graph;
  int r = radius > 0 ? radius : 2;
  if (spec.rfind("pyramid:", 0) == 0) {
    clat_graph* base = generate(spec.substr(8), radius, margin, budget);
    out->g = pyramid(base->g);
    delete base;
    return out;
  }
  if (spec.rfind("antipodal:", 0) == 0) {
    clat_graph* base = generate(spec.substr(10), radius, margin, budget);
    out->g = antipodal_quotient(base->g);
    delete base;
    return out;
  }
  if (spec.rfind("lattice:", 0) == 0) {
    auto rest = spec.substr(8);
    auto colon = rest.find(':');
    if (colon == std::string::npos)
      fail(ErrorKind::Parse, "lattice spec: expected lattice:<m>:<r>");
    out->g = lattice_ball(std::stoi(rest.substr(0, colon)),
                          std::stoi(rest.substr(colon + 1)));
    return out;
  }
  if (spec == "24-cell" || spec == "600-cell" || spec == "120-cell") {
    out->g = regular_4polytope(spec);
    return out;
  }
  auto cross = spec.find("xC");
  if (spec.size() > 3 && spec[0] == 'C' && cross != std::string::npos) {
    out->g = cycle_product(std::stoi(spec.substr(1, cross - 1)),
                           std::stoi(spec.substr(cross + 2)));
    return out;
  }
  if (!spec.empty() && spec[0] == '{') {
    SchlafliSymbol sym = parse_schlafli(spec);
    if (sym.rank() == 2) {
      const auto& a = sym.entries[0];
      const auto& b = sym.entries[1];
      bool a_star = !a.infinite() && !a.frac->convex();
      bool b_star = !b.infinite() && !b.frac->convex();
      if (a_star || b_star) {
        // {m/2,m} and {m,m/2} star honeycombs; both share the {3,m} vertex set,
        // and {m,m/2} is outright the {3,m} skeleton.
        if (a_star && !b.infinite() && a.frac->q == 2 && a.frac->p == b.frac->p) {
          out->g = star_honeycomb_skeleton(a.frac->p, r, budget);
          return out;
        }
        if (b_star && !a.infinite() && b.frac->q == 2 && a.frac->p == b.frac->p) {
          SchlafliSymbol host{{SchlafliEntry{Fraction{3, 1}},
                               SchlafliEntry{Fraction{a.frac->p, 1}}}};
          Patch p = make_patch(host, r, margin, budget);
          out->g = p.g;
          out->g.name = spec + "-skeleton";
          out->g.symbol = spec;
          out->patch = std::move(p);
          return out;
        }
        if (format(sym) == "{5/2,5}" || format(sym) == "{5,5/2}" ||
            format(sym) == "{3,5/2}") {
          Patch p = platonic(parse_schlafli("{3,5}"));
          out->g = p.g;
          out->g.symbol = format(sym);
          out->patch = std::move(p);
          return out;
        }
        if (format(sym) == "{5/2,3}") {
          Patch p = platonic(parse_schlafli("{5,3}"));
          out->g = p.g;
          out->g.symbol = format(sym);
          out->patch = std::move(p);
          return out;
        }
        fail(ErrorKind::Domain, "generate: no construction for " + format(sym));
      }
      if (a.infinite() || b.infinite())
        fail(ErrorKind::Domain, "generate: infinite entries are classified, not built");
      Patch p = make_patch(sym, r, margin, budget);
      out->patch = p;
      out->g = std::move(p.g);
      return out;
    }
    if (sym.rank() == 3) {
      bool star = false;
      for (const auto& e : sym.entries) star = star || (!e.infinite() && !e.frac->convex());
      if (star) {
        out->g = star_4polytope(sym);
        return out;
      }
      std::string s = format(sym);
      if (s == "{3,3,3}") out->g = polytope_family(PolytopeFamily::Simplex, 4);
      else if (s == "{3,3,4}") out->g = polytope_family(PolytopeFamily::CrossPolytope, 4);
      else if (s == "{4,3,3}") out->g = polytope_family(PolytopeFamily::Cube, 4);
      else if (s == "{3,4,3}") out->g = regular_4polytope("24-cell");
      else if (s == "{3,3,5}") out->g = regular_4polytope("600-cell");
      else if (s == "{5,3,3}") out->g = regular_4polytope("120-cell");
      else fail(ErrorKind::Domain, "generate: no finite skeleton for " + s);
      out->g.symbol = s;
      return out;
    }
    fail(ErrorKind::Domain, "generate: no construction for rank " +
                                std::to_string(sym.rank()) + " symbol " + format(sym));
  }
  out->g = named_graph(spec);
  return out;
}

ZoneEmbedResult zone_embed_of(const clat_graph* g) {
  if (!g->patch)
    fail(ErrorKind::Domain, "zone_embed: graph has no face data (not a patch)");
  return zone_embed(*g->patch);
}

}  // namespace

extern "C" {

const char* clat_version(void) { return "1.0.0"; }

const char* clat_last_error(void) { return g_last_error.c_str(); }

void clat_string_free(char* s) { std::free(s); }

void clat_graph_free(clat_graph* g) { delete g; }

int clat_symbol_canonical(const char* text, char** out) {
  return guarded([&] { *out = dup_string(format(parse_schlafli(text))); });
}

int clat_symbol_classify(const char* text, char** out) {
  return guarded([&] { *out = dup_string(to_string(classify(parse_schlafli(text)))); });
}

int clat_generate(const char* spec, int radius, int margin, int vertex_budget,
                  clat_graph** out) {
  return guarded([&] { *out = generate(spec, radius, margin, vertex_budget); });
}

int clat_graph_from_json(const char* json, clat_graph** out) {
  return guarded([&] {
    Json j = Json::parse(json, nullptr, false);
    if (j.is_discarded()) fail(ErrorKind::Parse, "graph JSON: parse error");
    LoadedGraph lg = graph_from_json(j);
    auto* h = new clat_graph;
    h->g = std::move(lg.g);
    h->patch = std::move(lg.patch);
    *out = h;
  });
}

int clat_graph_to_json(const clat_graph* g, char** out) {
  return guarded([&] {
    Json j = g->patch ? patch_to_json(*g->patch) : skeleton_to_json(g->g);
    *out = dup_string(j.dump(2));
  });
}

int clat_graph_counts(const clat_graph* g, int* vertices, long long* edges) {
  return guarded([&] {
    if (vertices) *vertices = g->g.n;
    if (edges) *edges = g->g.edge_count();
  });
}

int clat_distances_json(const clat_graph* g, char** out) {
  return guarded([&] { *out = dup_string(distance_matrix_to_json(apsp(g->g)).dump(2)); });
}

int clat_distances_csv(const clat_graph* g, char** out) {
  return guarded([&] { *out = dup_string(distance_matrix_to_csv(apsp(g->g))); });
}

int clat_girth(const clat_graph* g, int core_only, int* out) {
  return guarded([&] { *out = girth(g->g, core_only != 0); });
}

int clat_diameter(const clat_graph* g, int* out) {
  return guarded([&] { *out = diameter(g->g); });
}

int clat_distance_stability(const char* symbol, int radius, int margin, int* stable) {
  return guarded([&] {
    auto sym = parse_schlafli(symbol);
    int m = margin >= 0 ? margin : sym.entries[0].frac->p;
    *stable = distance_stability(sym, radius, m) ? 1 : 0;
  });
}

int clat_hypermetric_search(const clat_graph* g, int k, const char* mode,
                            long long tuple_budget, int threads, char** certs_json,
                            int* violated) {
  return guarded([&] {
    SearchOptions so;
    std::string m = mode ? mode : "first";
    if (m == "all")
      so.mode = SearchMode::All;
    else if (m == "first")
      so.mode = SearchMode::First;
    else
      fail(ErrorKind::Constraint, "mode must be 'first' or 'all'");
    if (tuple_budget > 0) so.tuple_budget = tuple_budget;
    so.threads = threads;
    auto certs = find_violation(g->g, k, so);
    Json j = Json::array();
    for (const auto& c : certs) j.push_back(certificate_to_json(c));
    if (certs_json) *certs_json = dup_string(j.dump(2));
    if (violated) *violated = certs.empty() ? 0 : 1;
  });
}

int clat_embed_verify(const clat_graph* g, const char* embedding_json, int core_only,
                      char** result_json) {
  return guarded([&] {
    Embedding e = embedding_from_json(Json::parse(embedding_json));
    auto v = verify_embedding(g->g, e, core_only != 0);
    Json j;
    j["valid"] = v.valid;
    if (!v.valid) {
      j["witness"] = {v.witness_u, v.witness_v};
      j["reason"] = v.reason;
    }
    *result_json = dup_string(j.dump(2));
  });
}

int clat_partial_cube(const clat_graph* g, char** result_json) {
  return guarded([&] {
    auto r = partial_cube(g->g);
    Json j;
    j["is_partial_cube"] = r.is_partial_cube;
    if (r.is_partial_cube)
      j["embedding"] = embedding_to_json(*r.embedding);
    else
      j["reason"] = r.reason;
    j["class_count"] = r.classes.size();
    *result_json = dup_string(j.dump(2));
  });
}

int clat_zone_embed(const clat_graph* g, char** result_json) {
  return guarded([&] {
    auto z = zone_embed_of(g);
    Json j;
    j["ok"] = z.ok;
    if (z.ok) {
      j["embedding"] = embedding_to_json(z.embedding);
      j["cuts"] = cuts_to_json(z.cuts);
      if (z.families) {
        j["families"] = *z.families;
        j["family_count"] = z.family_count;
      }
    } else {
      j["reason"] = z.reason;
    }
    *result_json = dup_string(j.dump(2));
  });
}

int clat_cutcone(const clat_graph* g, int scale, int n_max, char** result_json) {
  return guarded([&] {
    auto r = cutcone_decompose(g->g, scale, n_max > 0 ? n_max : 12);
    Json j;
    j["exists"] = r.exists;
    if (r.exists) j["decomposition"] = cuts_to_json(*r.decomposition);
    *result_json = dup_string(j.dump(2));
  });
}

int clat_catalog_graph(const char* name, clat_graph** out) {
  return guarded([&] {
    auto* h = new clat_graph;
    h->g = catalog_graph(name);
    *out = h;
  });
}

int clat_catalog_embedding(const char* name, char** embedding_json) {
  return guarded([&] {
    *embedding_json = dup_string(embedding_to_json(catalog_embedding(name)).dump(2));
  });
}

int clat_remark4(int n, char** json) {
  return guarded([&] {
    auto p = remark4(n);
    Json j;
    j["n"] = p.n;
    j["m_n"] = {{"num", p.mn_num}, {"den", p.mn_den}};
    j["lambda_n"] = p.lambda_n;
    j["target_dim"] = p.target_dim;
    j["mu_lower"] = p.mu_lower;
    *json = dup_string(j.dump(2));
  });
}

int clat_atlas_status(const char* symbol, char** json) {
  return guarded([&] {
    *json = dup_string(atlas_entry_to_json(atlas_status(parse_schlafli(symbol))).dump(2));
  });
}

int clat_atlas_notes(char** json) {
  return guarded([&] {
    Json j = atlas_notes();
    *json = dup_string(j.dump(2));
  });
}

int clat_table2(char** json) {
  return guarded([&] { *json = dup_string(table2_to_json().dump(2)); });
}

int clat_table2_text(char** out) {
  return guarded([&] { *out = dup_string(table2_to_text()); });
}

int clat_table2_entry(const char* cell, const char* vertex_figure, char** json) {
  return guarded([&] {
    auto parse_frac = [](const char* s) {
      std::string t = s;
      auto slash = t.find('/');
      if (slash == std::string::npos) return make_fraction(std::stoi(t), 1);
      return make_fraction(std::stoi(t.substr(0, slash)), std::stoi(t.substr(slash + 1)));
    };
    auto e = table2_lookup(parse_frac(cell), parse_frac(vertex_figure));
    if (!e)
      fail(ErrorKind::Domain, std::string("no representation (") + cell + ", " +
                                  vertex_figure + ")");
    *json = dup_string(representation_to_json(*e).dump(2));
  });
}

int clat_report_run(const char* options_json, char** report_json, char** report_text,
                    int* failed, int* skipped) {
  return guarded([&] {
    ReportOptions opts;
    if (options_json && *options_json) {
      Json j = Json::parse(options_json);
      opts.tiny = j.value("budget", std::string("default")) == "tiny";
      opts.threads = j.value("threads", 0);
      opts.atlas_override = j.value("atlas_file", std::string());
    }
    Report r = run_report(opts);
    if (report_json) *report_json = dup_string(report_to_json(r).dump(2));
    if (report_text) *report_text = dup_string(report_to_text(r));
    if (failed) *failed = r.failed;
    if (skipped) *skipped = r.skipped;
  });
}

}  // extern "C"
