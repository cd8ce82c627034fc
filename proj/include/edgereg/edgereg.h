#ifndef EDGEREG_EDGEREG_H
#define EDGEREG_EDGEREG_H

/* C interface to the edgereg library. Every function returns an er_status;
   on failure er_last_error() describes the problem for the calling thread.
   Strings handed out by the library are released with er_string_free. */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define ER_API __declspec(dllexport)
#else
#define ER_API __attribute__((visibility("default")))
#endif

typedef enum er_status {
  ER_OK = 0,
  ER_PARSE_ERROR = 1,
  ER_DOMAIN_ERROR = 2,
  ER_RESOURCE_ERROR = 3,
  ER_USAGE_ERROR = 4,
  ER_INTERNAL_ERROR = 5
} er_status;

typedef enum er_field { ER_FIELD_QQ = 0, ER_FIELD_GFP = 1 } er_field;

typedef struct er_graph er_graph;

ER_API const char* er_last_error(void);
ER_API const char* er_status_name(er_status status);
ER_API void er_string_free(char* s);

/* Graphs: graph6 text or a JSON adjacency object. */
ER_API er_status er_graph_parse(const char* text, er_graph** out);
ER_API void er_graph_free(er_graph* g);
ER_API er_status er_graph_order(const er_graph* g, int* out);
ER_API er_status er_graph_to_graph6(const er_graph* g, char** out);
ER_API er_status er_graph_to_json(const er_graph* g, char** out);

/* Newline separated graph6 strings of all graphs on n vertices up to
   isomorphism. */
ER_API er_status er_enumerate(int n, int no_isolated, int guard_override, char** out);

/* {"order","edges","nu","zeta","zeta_witness","cochord","min_max_matching",
   "chordal","vertex_decomposable","shedding_set"} */
ER_API er_status er_invariants_json(const er_graph* g, int guard_override, char** out);

/* Regularity report of I(G)^q. */
ER_API er_status er_power_regularity_json(const er_graph* g, int q, er_field field, int guard_override, char** out);

/* Regularity report of a monomial ideal given as {"vars":[...],"gens":[[...]]}. */
ER_API er_status er_ideal_regularity_json(const char* ideal_json, er_field field, int guard_override, char** out);

/* Colon graph G' of (I^{s+1} : e_1...e_s) for the edge list "i,j;k,l" (0-based
   vertices), with even-connection certificates and the regularity computed
   both through G' and through the monomial colon. */
ER_API er_status er_colon_json(const er_graph* g, const char* edges, er_field field, int guard_override, char** out);

/* P(G) as vertex names, with the degenerate members flagged. */
ER_API er_status er_reg_drop_set_json(const er_graph* g, er_field field, char** out);

/* JSON array of check ids. */
ER_API er_status er_check_ids_json(char** out);

typedef enum er_format { ER_FORMAT_JSON = 0, ER_FORMAT_CSV = 1, ER_FORMAT_CSV_WITH_HEADER = 2 } er_format;

/* Runs a named check. family_json may be NULL or an object with any of
   "nmin","nmax","qmax","smax","s3_samples","seed","connected","jobs",
   "field" ("qq"|"gfp"),"guard_override", "graphs" (array of graph6) and
   "source". The report is one JSON object or one CSV row. violations may be
   NULL; otherwise it receives the number of violations found. */
ER_API er_status er_verify(const char* id, const char* family_json, er_format format, char** out, int* violations);

/* Rank comparison of both fields on every homology computation. */
ER_API er_status er_set_field_audit(int enabled);
ER_API er_status er_field_audit_json(char** out); /* {"complexes","mismatches"} */
ER_API er_status er_reset_field_audit(void);

#ifdef __cplusplus
}
#endif

#endif
