/* C interface to the information-centrality minimization toolkit.
 *
 * Every fallible call returns an error code; icm_last_error() holds the
 * message for the most recent failure on the calling thread. Handles are
 * opaque and must be released with the matching _free call. Output pointers
 * are written only on ICM_OK.
 */
#ifndef ICM_H
#define ICM_H

#include <stdint.h>

#ifndef ICM_API
#if defined(_WIN32)
#define ICM_API
#else
#define ICM_API __attribute__((visibility("default")))
#endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

enum {
  ICM_OK = 0,
  ICM_ERR_INVALID = 1,  /* bad arguments or graph state */
  ICM_ERR_PARSE = 2,    /* malformed edge list or configuration text */
  ICM_ERR_IO = 3,       /* file not readable or writable */
  ICM_ERR_INTERNAL = 4, /* unexpected failure */
  ICM_ERR_BUDGET = 5    /* exhaustive-search work limit exceeded */
};

typedef struct icm_graph icm_graph;
typedef struct icm_result icm_result;

/* Message for the last error on this thread; never NULL. */
ICM_API const char* icm_last_error(void);

/* Graph handles. Edge lists are whitespace-separated label pairs, one per
 * line; # and % start comments. */
ICM_API int icm_graph_load_file(const char* path, icm_graph** out);
ICM_API int icm_graph_load_text(const char* text, icm_graph** out);
ICM_API int icm_graph_generate_ba(int n, int m0, uint64_t seed, icm_graph** out);
ICM_API int icm_graph_generate_ws(int n, int k_ring, double p, uint64_t seed,
                          icm_graph** out);
ICM_API int icm_graph_largest_component(const icm_graph* g, icm_graph** out);
/* NULL or empty path writes to stdout. */
ICM_API int icm_graph_save_file(const icm_graph* g, const char* path);
/* Counts return -1 on a NULL handle. */
ICM_API int icm_graph_node_count(const icm_graph* g);
ICM_API int icm_graph_edge_count(const icm_graph* g);
ICM_API int icm_graph_is_connected(const icm_graph* g);
ICM_API void icm_graph_free(icm_graph* g);

/* Runs the experiment described by key=value lines (# starts a comment;
 * later assignments win). icm_config_defaults lists every key with its
 * default value. */
ICM_API int icm_run_kv(const char* kv_text, icm_result** out);

ICM_API int icm_config_defaults(char** out_text);
ICM_API void icm_text_free(char* text);

/* NULL or empty path writes to stdout. */
ICM_API int icm_result_write_csv(const icm_result* r, const char* path);
ICM_API int icm_result_csv(const icm_result* r, char** out_text);
ICM_API const char* icm_result_summary(const icm_result* r);
/* Output path configured for the run; empty if none. */
ICM_API const char* icm_result_output_path(const icm_result* r);
/* 0 when every run removed k edges, 1 otherwise. */
ICM_API int icm_result_exit_code(const icm_result* r);
ICM_API void icm_result_free(icm_result* r);

#ifdef __cplusplus
}
#endif

#endif /* ICM_H */
