/* C interface of the cutlattice library: opaque graph handles, integer
 * status codes, JSON strings for structured data. Strings returned through
 * char** out-parameters are heap-allocated; release them with
 * clat_string_free. Handles are released with clat_graph_free. Functions
 * return CLAT_OK on success; on error, clat_last_error() describes the
 * failure for the calling thread. */

#ifndef CUTLATTICE_H
#define CUTLATTICE_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct clat_graph clat_graph;

enum {
  CLAT_OK = 0,
  CLAT_ERR_PARSE = 1,      /* malformed text / JSON input */
  CLAT_ERR_CONSTRAINT = 2, /* input violates a domain invariant */
  CLAT_ERR_DOMAIN = 3,     /* operation undefined for this input */
  CLAT_ERR_LIMIT = 4,      /* resource budget exceeded */
  CLAT_ERR_INTERNAL = 5
};

const char* clat_version(void);
const char* clat_last_error(void); /* thread-local message of the last failure */
void clat_string_free(char* s);
void clat_graph_free(clat_graph* g);

/* --- Schlafli symbols ---------------------------------------------------- */
int clat_symbol_canonical(const char* text, char** out);
int clat_symbol_classify(const char* text, char** out); /* "spherical" | ... */

/* --- construction ---------------------------------------------------------
 * spec: a Schlafli symbol ("{7,3}", "{5/2,5,3}", "{7/2,7}") or a named graph
 * ("petersen", "K6", "K5x2", "Q4", "halfQ6", "C12", "alpha4", "beta5",
 * "gamma3", "K5-K3", "24-cell", "600-cell", "120-cell", "C4xC4",
 * "pyramid:<spec>", "antipodal:<spec>", "lattice:<m>:<r>").
 * radius/margin apply to tiling patches and star honeycombs; pass -1 for the
 * defaults (margin defaults to the face size p). vertex_budget caps patch
 * growth; 0 means the built-in default. */
int clat_generate(const char* spec, int radius, int margin, int vertex_budget,
                  clat_graph** out);
int clat_graph_from_json(const char* json, clat_graph** out);
int clat_graph_to_json(const clat_graph* g, char** out);
int clat_graph_counts(const clat_graph* g, int* vertices, long long* edges);

/* --- metrics --------------------------------------------------------------- */
int clat_distances_json(const clat_graph* g, char** out);
int clat_distances_csv(const clat_graph* g, char** out);
int clat_girth(const clat_graph* g, int core_only, int* out); /* -1 = no cycle */
int clat_diameter(const clat_graph* g, int* out);             /* -1 = disconnected */
int clat_distance_stability(const char* symbol, int radius, int margin, int* stable);

/* --- hypermetric search -----------------------------------------------------
 * mode: "first" | "all". Writes a JSON array of violation certificates;
 * *violated is set to 1 when at least one was found. */
int clat_hypermetric_search(const clat_graph* g, int k, const char* mode,
                            long long tuple_budget, int threads, char** certs_json,
                            int* violated);

/* --- embeddings ------------------------------------------------------------ */
int clat_embed_verify(const clat_graph* g, const char* embedding_json, int core_only,
                      char** result_json);
int clat_partial_cube(const clat_graph* g, char** result_json);
int clat_zone_embed(const clat_graph* g, char** result_json);
int clat_cutcone(const clat_graph* g, int scale, int n_max, char** result_json);
int clat_catalog_graph(const char* name, clat_graph** out);
int clat_catalog_embedding(const char* name, char** embedding_json);
int clat_remark4(int n, char** json);

/* --- atlas and the density table -------------------------------------------- */
int clat_atlas_status(const char* symbol, char** json);
int clat_atlas_notes(char** json);
int clat_table2(char** json);
int clat_table2_text(char** out);
int clat_table2_entry(const char* cell, const char* vertex_figure, char** json);

/* --- reproduction report -----------------------------------------------------
 * options_json: {"budget": "default"|"tiny", "threads": n,
 *                "atlas_file": path}; all fields optional (pass NULL or "{}").
 * *failed / *skipped receive the entry counts. */
int clat_report_run(const char* options_json, char** report_json, char** report_text,
                    int* failed, int* skipped);

#ifdef __cplusplus
}
#endif

#endif /* CUTLATTICE_H */
