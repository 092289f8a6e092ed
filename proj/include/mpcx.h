/* mpcx — message passing complexity toolkit, C API.
 *
 * Opaque handles + integer status codes. Every function returns MPCX_OK on
 * success; on failure it returns the error code and leaves a human-readable
 * message in mpcx_last_error() (thread-local). Handles are created and
 * destroyed by the library; destroy functions accept NULL.
 */
#ifndef MPCX_H
#define MPCX_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mpcx_status {
    MPCX_OK = 0,
    MPCX_ERR_INVALID_PARAMETERS = 1,
    MPCX_ERR_NODE_OUT_OF_RANGE = 2,
    MPCX_ERR_PARSE = 3,
    MPCX_ERR_IO = 4,
    MPCX_ERR_GENERATION_EXHAUSTED = 5,
    MPCX_ERR_ENUMERATION_TOO_LARGE = 6,
    MPCX_ERR_NOT_SIMULABLE = 7,
    MPCX_ERR_EMPTY_DATASET = 8,
    MPCX_ERR_MISSING_TARGETS = 9,
    MPCX_ERR_UNSUPPORTED_ARCH = 10,
    MPCX_ERR_UNKNOWN_CHANNEL = 11,
    MPCX_ERR_UNKNOWN = 99
} mpcx_status;

typedef enum mpcx_arch {
    MPCX_ARCH_MLP = 0,
    MPCX_ARCH_STANDARD = 1,
    MPCX_ARCH_VIRTUAL_NODE = 2,
    MPCX_ARCH_GSN = 3,
    MPCX_ARCH_FRAGNET = 4,
    MPCX_ARCH_CIN = 5
} mpcx_arch;

typedef enum mpcx_task_kind {
    MPCX_TASK_RETAIN = 0,
    MPCX_TASK_PROPAGATE = 1,
    MPCX_TASK_RING = 2
} mpcx_task_kind;

typedef struct mpcx_graph mpcx_graph;
typedef struct mpcx_dataset mpcx_dataset;

typedef struct mpcx_task {
    int kind;              /* mpcx_task_kind */
    int64_t source;        /* propagate/ring: marked source u (ignored for retain) */
    int64_t target;        /* v */
    const int64_t* cycle;  /* ring only: node ids of the planted cycle, in order */
    size_t cycle_len;
} mpcx_task;

typedef struct mpcx_estimate {
    uint64_t trials;
    uint64_t successes;
    double p_hat;
    double mpc_nats;       /* valid when mpc_infinite == 0 */
    int mpc_infinite;
    double ci_lo, ci_hi;   /* Wilson 95% interval on p_hat */
    int64_t effective_layers;
} mpcx_estimate;

typedef struct mpcx_bound {
    int is_upper;          /* 0 = lower bound, 1 = upper bound */
    double value_nats;
    int infinite;
    int lift_audited;      /* 0 = paper-stated constant, 1 = audited on the lift */
    char formula_id[48];
} mpcx_bound;

typedef struct mpcx_exact_result {
    double p;
    double mpc_nats;
    int mpc_infinite;
    uint64_t channels;     /* enumerated message channels */
    char ratio[128];       /* exact probability as "num/den" */
} mpcx_exact_result;

/* Thread-local message for the most recent failure in this thread. */
const char* mpcx_last_error(void);
const char* mpcx_version(void);

/* ---- graphs ---------------------------------------------------------- */
mpcx_status mpcx_graph_gen_regular(int64_t n, int64_t r, uint64_t seed, mpcx_graph** out);
mpcx_status mpcx_graph_gen_erdos_renyi(int64_t n, double p, uint64_t seed, mpcx_graph** out);
/* Planted ring: also reports the designated node v and the cycle (caller
 * buffer of capacity cycle_cap; *cycle_len gets the length). */
mpcx_status mpcx_graph_gen_planted_ring(int64_t n, int64_t r, int64_t s, uint64_t seed,
                                        mpcx_graph** out, int64_t* v, int64_t* cycle,
                                        size_t cycle_cap, size_t* cycle_len);
mpcx_status mpcx_graph_gen_cycle(int64_t n, mpcx_graph** out);
mpcx_status mpcx_graph_gen_path(int64_t n, mpcx_graph** out);
mpcx_status mpcx_graph_load(const char* path, mpcx_graph** out);
mpcx_status mpcx_graph_save(const mpcx_graph* g, const char* path);
void mpcx_graph_free(mpcx_graph* g);

int64_t mpcx_graph_node_count(const mpcx_graph* g);
int64_t mpcx_graph_edge_count(const mpcx_graph* g);
mpcx_status mpcx_graph_degree(const mpcx_graph* g, int64_t v, int64_t* out);
/* 1 when every node has the same degree (written to *r), else 0. */
mpcx_status mpcx_graph_regular_degree(const mpcx_graph* g, int* is_regular, int64_t* r);
/* BFS distances from src into out[0..n-1]; unreachable = -1. */
mpcx_status mpcx_graph_bfs(const mpcx_graph* g, int64_t src, int64_t* out, size_t out_len);
/* Stable WL identity hash (refined to the partition fixpoint) as 32 hex
 * chars; buf_len must be >= 33. layers < 0 selects the stable refinement. */
mpcx_status mpcx_graph_wl_hash_hex(const mpcx_graph* g, int64_t layers, char* buf,
                                   size_t buf_len);
/* WL color of one node after `layers` rounds, 32 hex chars. */
mpcx_status mpcx_graph_wl_color_hex(const mpcx_graph* g, int64_t layers, int64_t node,
                                    char* buf, size_t buf_len);
/* Export the message passing graph of an architecture (roles + masks). */
mpcx_status mpcx_graph_save_lift(const mpcx_graph* g, int arch, int64_t max_cycle,
                                 const char* path);

/* ---- complexity ------------------------------------------------------ */
mpcx_status mpcx_estimate_mpc(const mpcx_graph* g, int arch, int64_t max_cycle,
                              const mpcx_task* task, int64_t layers, uint64_t trials,
                              uint64_t seed, int threads, mpcx_estimate* out);
mpcx_status mpcx_exact_mpc(const mpcx_graph* g, int arch, int64_t max_cycle,
                           const mpcx_task* task, int64_t layers, uint64_t cap,
                           mpcx_exact_result* out);

/* Analytic bounds. Each call fills up to `cap` bounds and stores the count. */
mpcx_status mpcx_bound_retain(const mpcx_graph* g, int arch, int64_t max_cycle, int64_t layers,
                              mpcx_bound* out);
mpcx_status mpcx_bound_transfer(int arch, int64_t n, int64_t r, int64_t D, mpcx_bound* out,
                                size_t cap, size_t* count);
mpcx_status mpcx_bound_ring(int arch, int64_t s, int64_t r, mpcx_bound* out, size_t cap,
                            size_t* count);
/* Walk-probability bound computed on the lift of `arch` (original node ids
 * are preserved by every lift). */
mpcx_status mpcx_rw_lower_bound(const mpcx_graph* g, int arch, int64_t max_cycle,
                                int64_t layers, int64_t u, int64_t v, mpcx_bound* out);

/* ---- datasets & WL statistics ---------------------------------------- */
mpcx_status mpcx_dataset_new(mpcx_dataset** out);
/* Add a graph file; picks up its optional per-node "targets" field. */
mpcx_status mpcx_dataset_add_file(mpcx_dataset* ds, const char* path);
/* Add every *.json under a directory (sorted), or one file. */
mpcx_status mpcx_dataset_add_path(mpcx_dataset* ds, const char* path);
void mpcx_dataset_free(mpcx_dataset* ds);

int64_t mpcx_dataset_size(const mpcx_dataset* ds);
mpcx_status mpcx_dataset_node_count(const mpcx_dataset* ds, int64_t graph, int64_t* out);
mpcx_status mpcx_uniqueness_fraction(const mpcx_dataset* ds, int64_t layers, double* out);
/* Per (graph, node) WLC verdict, flattened in dataset order: 0 = deducible,
 * 1 = infinite. out must hold the total node count. */
mpcx_status mpcx_wlc(const mpcx_dataset* ds, int64_t layers, uint8_t* out, size_t out_len);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MPCX_H */
