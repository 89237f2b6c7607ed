// Command-line front end. Talks to the library exclusively through the C API.
//
// Exit codes: 0 success, 1 internal error, 2 usage error, 3 hypermetric
// violation found (or failing report entries), 4 report skipped entries only.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cutlattice.h"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

struct Config {
  long long tuple_budget = 200'000'000;
  int cutcone_nmax = 12;
  int patch_vertex_cap = 0;  // 0 = library default
  int threads = 0;
  std::string cache_dir;
};

void load_config_file(const std::string& path, Config* cfg) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "config: cannot open " << path << "\n";
    std::exit(2);
  }
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t"));
      auto e = s.find_last_not_of(" \t\r");
      s.erase(e == std::string::npos ? 0 : e + 1);
      return s;
    };
    std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
    if (key == "tuple_budget") cfg->tuple_budget = std::stoll(val);
    else if (key == "cutcone_nmax") cfg->cutcone_nmax = std::stoi(val);
    else if (key == "patch_vertex_cap") cfg->patch_vertex_cap = std::stoi(val);
    else if (key == "threads") cfg->threads = std::stoi(val);
    else if (key == "cache_dir") cfg->cache_dir = val;
    else {
      std::cerr << "config: unknown key '" << key << "'\n";
      std::exit(2);
    }
  }
}

[[noreturn]] void die(int code) {
  const char* msg = clat_last_error();
  std::cerr << "error: " << (msg && *msg ? msg : "unknown") << "\n";
  // Parse/constraint/domain problems are usage errors at the CLI surface.
  std::exit(code == CLAT_ERR_LIMIT || code == CLAT_ERR_INTERNAL ? 1 : 2);
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  clat_string_free(s);
  return out;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << "\n";
    std::exit(2);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& out_path, const std::string& data) {
  if (out_path.empty() || out_path == "-") {
    std::cout << data;
    if (!data.empty() && data.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(out_path);
  out << data;
}

clat_graph* load_graph(const std::string& path) {
  clat_graph* g = nullptr;
  if (int rc = clat_graph_from_json(read_input(path).c_str(), &g)) die(rc);
  return g;
}

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

constexpr const char* kGeneratorVersion = "1";

int cmd_gen(const Config& cfg, const std::string& spec, int radius, int margin,
            const std::string& out_path) {
  std::string cache_file;
  if (!cfg.cache_dir.empty()) {
    std::ostringstream key;
    key << spec << "|r" << radius << "|m" << margin << "|g" << kGeneratorVersion;
    std::ostringstream name;
    name << std::hex << fnv1a(key.str()) << ".json";
    cache_file = (fs::path(cfg.cache_dir) / name.str()).string();
    if (fs::exists(cache_file)) {
      write_output(out_path, read_input(cache_file));
      return 0;
    }
  }
  clat_graph* g = nullptr;
  if (int rc = clat_generate(spec.c_str(), radius, margin, cfg.patch_vertex_cap, &g))
    die(rc);
  char* json = nullptr;
  if (int rc = clat_graph_to_json(g, &json)) die(rc);
  std::string data = take_string(json);
  clat_graph_free(g);
  if (!cache_file.empty()) {
    fs::create_directories(cfg.cache_dir);
    std::ofstream out(cache_file);
    out << data;
  }
  write_output(out_path, data);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"skeleton graphs of regular tilings, star-honeycombs and polytopes: "
               "generation, exact metrics, hypermetric certificates, scale embeddings"};
  app.require_subcommand(1);
  Config cfg;
  if (const char* env = std::getenv("CUTLATTICE_CACHE_DIR")) cfg.cache_dir = env;
  std::string config_path;
  app.add_option("--config", config_path, "key=value config file");
  app.add_option("--threads", cfg.threads, "cap worker threads (0 = auto)");
  app.add_option("--cache-dir", cfg.cache_dir, "patch cache directory");

  // gen
  auto* gen = app.add_subcommand("gen", "construct a skeleton / patch as JSON");
  std::string gen_spec, gen_out;
  int gen_radius = -1, gen_margin = -1;
  gen->add_option("spec", gen_spec, "Schlafli symbol or graph name")->required();
  gen->add_option("--radius,-r", gen_radius, "patch core radius");
  gen->add_option("--margin,-m", gen_margin, "patch margin (default: face size)");
  gen->add_option("--output,-o", gen_out, "output file (default stdout)");

  // dist / girth / diam
  auto* dist = app.add_subcommand("dist", "all-pairs distance matrix");
  std::string dist_in, dist_out;
  bool dist_csv = false;
  dist->add_option("graph", dist_in, "skeleton JSON file or -")->required();
  dist->add_flag("--csv", dist_csv, "CSV instead of JSON");
  dist->add_option("--output,-o", dist_out);

  auto* girth_cmd = app.add_subcommand("girth", "length of a shortest cycle");
  std::string girth_in;
  bool girth_core = false;
  girth_cmd->add_option("graph", girth_in)->required();
  girth_cmd->add_flag("--core", girth_core, "only cycles through core vertices");

  auto* diam = app.add_subcommand("diam", "graph diameter");
  std::string diam_in;
  diam->add_option("graph", diam_in)->required();

  // hypermetric
  auto* hyper = app.add_subcommand("hypermetric", "k-gonal inequality checks");
  auto* hcheck = hyper->add_subcommand("check", "search for violations");
  std::string h_in, h_out, h_mode = "first";
  int h_k = 5;
  hcheck->add_option("graph", h_in)->required();
  hcheck->add_option("--k", h_k, "5 or 7")->check(CLI::IsMember({5, 7}));
  bool h_first = false, h_all = false;
  hcheck->add_flag("--first", h_first, "stop at the first violation (default)");
  hcheck->add_flag("--all", h_all, "collect every violation");
  hcheck->add_option("--budget", cfg.tuple_budget, "tuple budget");
  hcheck->add_option("--output,-o", h_out);

  // embed
  auto* embed = app.add_subcommand("embed", "scale embeddings");
  auto* ev = embed->add_subcommand("verify", "check scale*d == Hamming");
  std::string ev_graph, ev_emb;
  bool ev_core = false;
  ev->add_option("graph", ev_graph)->required();
  ev->add_option("embedding", ev_emb, "embedding JSON file or -")->required();
  ev->add_flag("--core", ev_core, "restrict to core vertex pairs");
  auto* ep = embed->add_subcommand("partial-cube", "scale-1 recognizer");
  std::string ep_graph;
  ep->add_option("graph", ep_graph)->required();
  auto* ez = embed->add_subcommand("zones", "alternated-zone embedder");
  std::string ez_graph;
  ez->add_option("graph", ez_graph)->required();
  auto* ec = embed->add_subcommand("cutcone", "exact cut decomposition");
  std::string ec_graph;
  int ec_scale = 1;
  ec->add_option("graph", ec_graph)->required();
  ec->add_option("--scale", ec_scale, "embedding scale")->required();
  ec->add_option("--nmax", cfg.cutcone_nmax, "vertex limit for the exact search");
  auto* ecat = embed->add_subcommand("catalog", "stored catalog embedding");
  std::string ecat_name;
  bool ecat_graph = false;
  ecat->add_option("name", ecat_name)->required();
  ecat->add_flag("--graph", ecat_graph, "print the catalog graph instead");

  // atlas
  auto* atlas = app.add_subcommand("atlas", "embeddability status of a symbol");
  std::string atlas_sym;
  bool atlas_notes_flag = false;
  atlas->add_option("symbol", atlas_sym);
  atlas->add_flag("--notes", atlas_notes_flag, "print recorded out-of-catalog claims");

  // table2
  auto* t2 = app.add_subcommand("table2", "spherical representation densities");
  std::vector<std::string> t2_entry;
  bool t2_text = false;
  t2->add_option("--entry", t2_entry, "CELL VF, e.g. --entry 5/2 3")->expected(2);
  t2->add_flag("--text", t2_text, "aligned text grid");

  // report
  auto* rep = app.add_subcommand("report", "run the reproduction suite");
  std::string rep_budget = "default", rep_out, rep_atlas;
  rep->add_option("--budget", rep_budget)->check(CLI::IsMember({"default", "tiny"}));
  rep->add_option("--out", rep_out, "write the JSON report here");
  rep->add_option("--atlas-file", rep_atlas, "re-check an external atlas JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (!config_path.empty()) load_config_file(config_path, &cfg);

  if (gen->parsed()) return cmd_gen(cfg, gen_spec, gen_radius, gen_margin, gen_out);

  if (dist->parsed()) {
    clat_graph* g = load_graph(dist_in);
    char* out = nullptr;
    int rc = dist_csv ? clat_distances_csv(g, &out) : clat_distances_json(g, &out);
    if (rc) die(rc);
    write_output(dist_out, take_string(out));
    clat_graph_free(g);
    return 0;
  }
  if (girth_cmd->parsed()) {
    clat_graph* g = load_graph(girth_in);
    int value = 0;
    if (int rc = clat_girth(g, girth_core ? 1 : 0, &value)) die(rc);
    std::cout << (value < 0 ? std::string("inf") : std::to_string(value)) << "\n";
    clat_graph_free(g);
    return 0;
  }
  if (diam->parsed()) {
    clat_graph* g = load_graph(diam_in);
    int value = 0;
    if (int rc = clat_diameter(g, &value)) die(rc);
    std::cout << (value < 0 ? std::string("inf") : std::to_string(value)) << "\n";
    clat_graph_free(g);
    return 0;
  }
  if (hcheck->parsed()) {
    if (h_first && h_all) {
      std::cerr << "--first and --all are mutually exclusive\n";
      return 2;
    }
    clat_graph* g = load_graph(h_in);
    char* certs = nullptr;
    int violated = 0;
    int rc = clat_hypermetric_search(g, h_k, h_all ? "all" : "first", cfg.tuple_budget,
                                     cfg.threads, &certs, &violated);
    if (rc) die(rc);
    write_output(h_out, take_string(certs));
    clat_graph_free(g);
    return violated ? 3 : 0;
  }
  if (ev->parsed()) {
    clat_graph* g = load_graph(ev_graph);
    char* out = nullptr;
    if (int rc = clat_embed_verify(g, read_input(ev_emb).c_str(), ev_core ? 1 : 0, &out))
      die(rc);
    std::string res = take_string(out);
    std::cout << res << "\n";
    clat_graph_free(g);
    return ordered_json::parse(res)["valid"].get<bool>() ? 0 : 3;
  }
  if (ep->parsed()) {
    clat_graph* g = load_graph(ep_graph);
    char* out = nullptr;
    if (int rc = clat_partial_cube(g, &out)) die(rc);
    std::cout << take_string(out) << "\n";
    clat_graph_free(g);
    return 0;
  }
  if (ez->parsed()) {
    clat_graph* g = load_graph(ez_graph);
    char* out = nullptr;
    if (int rc = clat_zone_embed(g, &out)) die(rc);
    std::cout << take_string(out) << "\n";
    clat_graph_free(g);
    return 0;
  }
  if (ec->parsed()) {
    clat_graph* g = load_graph(ec_graph);
    char* out = nullptr;
    if (int rc = clat_cutcone(g, ec_scale, cfg.cutcone_nmax, &out)) die(rc);
    std::cout << take_string(out) << "\n";
    clat_graph_free(g);
    return 0;
  }
  if (ecat->parsed()) {
    if (ecat_graph) {
      clat_graph* g = nullptr;
      if (int rc = clat_catalog_graph(ecat_name.c_str(), &g)) die(rc);
      char* out = nullptr;
      if (int rc = clat_graph_to_json(g, &out)) die(rc);
      std::cout << take_string(out) << "\n";
      clat_graph_free(g);
    } else {
      char* out = nullptr;
      if (int rc = clat_catalog_embedding(ecat_name.c_str(), &out)) die(rc);
      std::cout << take_string(out) << "\n";
    }
    return 0;
  }
  if (atlas->parsed()) {
    if (atlas_notes_flag) {
      char* out = nullptr;
      if (int rc = clat_atlas_notes(&out)) die(rc);
      std::cout << take_string(out) << "\n";
      return 0;
    }
    if (atlas_sym.empty()) {
      std::cerr << "atlas: need a symbol or --notes\n";
      return 2;
    }
    char* out = nullptr;
    if (int rc = clat_atlas_status(atlas_sym.c_str(), &out)) die(rc);
    std::cout << take_string(out) << "\n";
    return 0;
  }
  if (t2->parsed()) {
    char* out = nullptr;
    int rc;
    if (!t2_entry.empty())
      rc = clat_table2_entry(t2_entry[0].c_str(), t2_entry[1].c_str(), &out);
    else if (t2_text)
      rc = clat_table2_text(&out);
    else
      rc = clat_table2(&out);
    if (rc) die(rc);
    std::cout << take_string(out) << "\n";
    return 0;
  }
  if (rep->parsed()) {
    ordered_json opts;
    opts["budget"] = rep_budget;
    opts["threads"] = cfg.threads;
    if (!rep_atlas.empty()) opts["atlas_file"] = rep_atlas;
    char *json = nullptr, *text = nullptr;
    int failed = 0, skipped = 0;
    if (int rc = clat_report_run(opts.dump().c_str(), &json, &text, &failed, &skipped))
      die(rc);
    std::cout << take_string(text);
    std::string jr = take_string(json);
    if (!rep_out.empty()) write_output(rep_out, jr);
    if (failed > 0) return 1;
    if (skipped > 0) return 4;
    return 0;
  }
  return 2;
}
