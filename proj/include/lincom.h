#ifndef LINCOM_H
#define LINCOM_H

/* C interface to the vertex-cover solver. All functions returning
 * lincom_status set a thread-local message retrievable with
 * lincom_last_error() on failure. Handles are opaque; every *_destroy /
 * lincom_free_* accepts NULL. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lincom_status {
    LINCOM_OK = 0,
    LINCOM_ERR_INVALID_ARGUMENT = 1, /* bad handle, id range, option value */
    LINCOM_ERR_PARSE = 2,            /* malformed instance or solution file */
    LINCOM_ERR_IO = 3,               /* unreadable/unwritable path */
    LINCOM_ERR_INTERNAL = 4          /* broken invariant; always a bug */
} lincom_status;

const char* lincom_status_name(lincom_status status);
const char* lincom_last_error(void); /* empty string when no error yet */

/* ---- graphs ------------------------------------------------------------ */

typedef struct lincom_graph lincom_graph;

/* endpoints holds edge_count (u,v) pairs, 0-based; duplicates and self-loops
 * are dropped. */
lincom_status lincom_graph_from_edges(const int32_t* endpoints, int64_t edge_count,
                                      int32_t vertex_count, lincom_graph** out);
lincom_status lincom_graph_from_dimacs_file(const char* path, lincom_graph** out);
lincom_status lincom_graph_from_dimacs_string(const char* text, lincom_graph** out);
/* Erdos-Renyi G(n, edge_prob), reproducible for a given seed. */
lincom_status lincom_graph_random(int32_t vertex_count, double edge_prob,
                                  uint64_t seed, lincom_graph** out);
void lincom_graph_destroy(lincom_graph* graph);

int32_t lincom_graph_vertex_count(const lincom_graph* graph);
int64_t lincom_graph_edge_count(const lincom_graph* graph);
int32_t lincom_graph_max_degree(const lincom_graph* graph);
double lincom_graph_avg_degree(const lincom_graph* graph);

/* ---- solving ----------------------------------------------------------- */

typedef struct lincom_options {
    const char* variant;    /* "lincom", "initvc-only", "min-gain", "max-gain";
                               NULL means "lincom" */
    uint64_t seed;          /* default 1 */
    double cutoff_seconds;  /* wall-clock budget; default 1000 */
    int64_t max_steps;      /* exchange-step budget; < 0 means unlimited */
    int deterministic_ties; /* nonzero: ties break to the lowest vertex id */
} lincom_options;

void lincom_options_init(lincom_options* options); /* fills the defaults */

typedef struct lincom_result lincom_result;

lincom_status lincom_solve(const lincom_graph* graph, const lincom_options* options,
                           lincom_result** out);
void lincom_result_destroy(lincom_result* result);

int64_t lincom_result_cover_size(const lincom_result* result);
/* ascending 0-based ids, lincom_result_cover_size entries, owned by result */
const int32_t* lincom_result_cover(const lincom_result* result);
int lincom_result_optimal(const lincom_result* result); /* 1 = certified */
int64_t lincom_result_steps(const lincom_result* result);
double lincom_result_elapsed_seconds(const lincom_result* result);

/* operation counters, iterable in sorted name order */
size_t lincom_result_counter_count(const lincom_result* result);
lincom_status lincom_result_counter_at(const lincom_result* result, size_t index,
                                       const char** name_out, int64_t* value_out);
int64_t lincom_result_counter(const lincom_result* result, const char* name); /* -1 if absent */

/* ---- verification and solution files ----------------------------------- */

/* Independent O(|E|) check. valid_out gets 0/1; on an invalid cover fail_u /
 * fail_v (if non-NULL) get the 0-based endpoints of the first uncovered
 * edge. */
lincom_status lincom_verify_cover(const lincom_graph* graph, const int32_t* vertices,
                                  int64_t count, int* valid_out,
                                  int32_t* fail_u, int32_t* fail_v);

/* Format on disk: "s vc <size> <optimal|unknown>" then one "v <id>" line per
 * vertex, ids 1-based. */
lincom_status lincom_write_solution_file(const char* path, const int32_t* vertices,
                                         int64_t count, int optimal);
lincom_status lincom_read_solution_file(const char* path, int32_t** vertices_out,
                                        int64_t* count_out);
void lincom_free_vertices(int32_t* vertices);

/* ---- benchmark suites --------------------------------------------------- */

typedef struct lincom_suite_options {
    const char* const* instance_paths; /* DIMACS files */
    size_t instance_count;
    const char* variant;    /* as in lincom_options */
    int64_t seed_lo;        /* inclusive seed range, default 1..1 */
    int64_t seed_hi;
    double cutoff_seconds;  /* default 1000 */
    int64_t max_steps;      /* < 0 means unlimited */
    int deterministic_ties;
    int jobs;               /* worker threads, default 1 */
    const char* baseline_csv;  /* optional: adds a delta column to the table */
    const char* solutions_dir; /* optional: best cover per instance */
    int emit_jsonl;            /* nonzero: records as JSON lines, else CSV */
} lincom_suite_options;

void lincom_suite_options_init(lincom_suite_options* options);

/* Runs every (instance, seed) pair. records_out (per-run data) and table_out
 * (per-instance aggregate table) receive heap strings when non-NULL; free
 * them with lincom_free_string. Unreadable instances mark their table row
 * FAILED, set *any_failed_out (when non-NULL), and do not abort the rest. */
lincom_status lincom_run_suite(const lincom_suite_options* options, char** records_out,
                               char** table_out, int* any_failed_out);
void lincom_free_string(char* text);

#ifdef __cplusplus
}
#endif

#endif
