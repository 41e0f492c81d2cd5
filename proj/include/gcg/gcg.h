/* Generalized conditional gradient toolkit - C API.
 *
 * All functions return a gcg_status; GCG_OK means success. On failure,
 * gcg_last_error() returns a thread-local human-readable message. Objects are
 * opaque handles created by gcg_*_create functions and released by the
 * matching gcg_*_destroy; handles are immutable after creation and may be
 * shared across threads.
 */
#ifndef GCG_H
#define GCG_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(GCG_BUILD_SHARED)
#define GCG_API __declspec(dllexport)
#else
#define GCG_API __declspec(dllimport)
#endif
#else
#define GCG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gcg_status {
  GCG_OK = 0,
  GCG_ERR_DIMENSION_MISMATCH,
  GCG_ERR_NONFINITE,
  GCG_ERR_INVALID_ARGUMENT,
  GCG_ERR_INFEASIBLE_POINT,
  GCG_ERR_INFEASIBLE_START,
  GCG_ERR_LINESEARCH_STALLED,
  GCG_ERR_DEGENERATE_DIRECTION,
  GCG_ERR_NEGATIVE_GAP,
  GCG_ERR_NONCONVEX_FIXTURE,
  GCG_ERR_DIMENSION_TOO_LARGE,
  GCG_ERR_INSUFFICIENT_TRACE,
  GCG_ERR_INVARIANT_VIOLATION,
  GCG_ERR_PARSE,
  GCG_ERR_IO,
  GCG_ERR_UNKNOWN
} gcg_status;

typedef enum gcg_termination {
  GCG_TERM_GAP_BELOW_TOL = 0,
  GCG_TERM_MAX_ITERS = 1,
  GCG_TERM_STATIONARY_STEP = 2,
  GCG_TERM_LINESEARCH_STALLED = 3
} gcg_termination;

typedef struct gcg_smooth gcg_smooth;
typedef struct gcg_nonsmooth gcg_nonsmooth;
typedef struct gcg_problem gcg_problem;
typedef struct gcg_trace gcg_trace;
typedef struct gcg_audit gcg_audit;

GCG_API const char* gcg_version(void);
GCG_API const char* gcg_status_name(gcg_status status);
GCG_API const char* gcg_termination_name(gcg_termination term);
GCG_API const char* gcg_last_error(void);

/* ---- smooth oracles (matrices are row-major) ---- */

GCG_API gcg_status gcg_smooth_create_quadratic(int64_t dim,
                                               const double* q_matrix,
                                               const double* q_vector,
                                               gcg_smooth** out);
GCG_API gcg_status gcg_smooth_create_ppower(int64_t rows, int64_t dim,
                                            const double* a, const double* b,
                                            double pexp, gcg_smooth** out);
GCG_API gcg_status gcg_smooth_create_logistic(int64_t rows, int64_t dim,
                                              const double* a,
                                              const double* labels,
                                              gcg_smooth** out);
GCG_API gcg_status gcg_smooth_create_nonholder_well(int64_t dim, double knot,
                                                    double curvature,
                                                    gcg_smooth** out);
GCG_API void gcg_smooth_destroy(gcg_smooth* s);
GCG_API gcg_status gcg_smooth_value(const gcg_smooth* s, const double* x,
                                    int64_t dim, double* out);
GCG_API gcg_status gcg_smooth_gradient(const gcg_smooth* s, const double* x,
                                       int64_t dim, double* out);

/* ---- nonsmooth terms / linear minimization oracles ---- */

GCG_API gcg_status gcg_nonsmooth_create_simplex(int64_t dim, double radius,
                                                gcg_nonsmooth** out);
GCG_API gcg_status gcg_nonsmooth_create_l1_ball(int64_t dim, double radius,
                                                gcg_nonsmooth** out);
GCG_API gcg_status gcg_nonsmooth_create_l2_ball(int64_t dim, double radius,
                                                gcg_nonsmooth** out);
GCG_API gcg_status gcg_nonsmooth_create_box(int64_t dim, const double* lower,
                                            const double* upper,
                                            gcg_nonsmooth** out);
GCG_API gcg_status gcg_nonsmooth_create_elastic_net(int64_t dim, double lambda1,
                                                    double lambda2,
                                                    gcg_nonsmooth** out);
GCG_API void gcg_nonsmooth_destroy(gcg_nonsmooth* t);
/* g(x); writes +infinity for points outside dom g */
GCG_API gcg_status gcg_nonsmooth_value(const gcg_nonsmooth* t, const double* x,
                                       int64_t dim, double* out);
/* argmin_v <c,v> + g(v); writes the minimizer and g at it */
GCG_API gcg_status gcg_nonsmooth_lmo(const gcg_nonsmooth* t, const double* cost,
                                     int64_t dim, double* v_out,
                                     double* g_v_out);

/* ---- problems and the Frank-Wolfe gap ---- */

GCG_API gcg_status gcg_problem_create(const gcg_smooth* s,
                                      const gcg_nonsmooth* t,
                                      gcg_problem** out);
GCG_API void gcg_problem_destroy(gcg_problem* p);
GCG_API int64_t gcg_problem_dim(const gcg_problem* p);
/* gap, subproblem solution v (optional) at x; x must lie in dom g */
GCG_API gcg_status gcg_frank_wolfe_gap(const gcg_problem* p, const double* x,
                                       int64_t dim, double* gap_out,
                                       double* v_out /* nullable */);

/* ---- solver options ---- */

typedef struct gcg_nm_options {
  double beta;
  double sigma;
  double p;
  int pk_schedule; /* 0 constant, 1 harmonic-to-one */
  double pk_value;
  double gap_tol;
  int64_t max_iters;
  int max_backtracks;
} gcg_nm_options;
GCG_API void gcg_nm_options_init(gcg_nm_options* o);

typedef struct gcg_pf_options {
  double l_init;
  double gap_tol;
  int64_t max_iters;
  int max_backtracks;
} gcg_pf_options;
GCG_API void gcg_pf_options_init(gcg_pf_options* o);

/* ---- solver runs and traces ---- */

GCG_API gcg_status gcg_solve_nm(const gcg_problem* p, const double* x0,
                                int64_t dim, const gcg_nm_options* opt,
                                gcg_trace** out);
GCG_API gcg_status gcg_solve_pf(const gcg_problem* p, const double* x0,
                                int64_t dim, const gcg_pf_options* opt,
                                gcg_trace** out);

typedef struct gcg_record {
  int64_t k;
  double f_x;
  double f_ref;
  double gap;
  double step;
  int backtracks;
  int has_l; /* nonzero when l_k is meaningful */
  double l_k;
  int64_t elapsed_ns;
} gcg_record;

GCG_API int64_t gcg_trace_rows(const gcg_trace* t);
GCG_API gcg_status gcg_trace_row(const gcg_trace* t, int64_t i,
                                 gcg_record* out);
GCG_API gcg_termination gcg_trace_termination(const gcg_trace* t);
GCG_API gcg_status gcg_trace_final_x(const gcg_trace* t, double* out,
                                     int64_t dim);
GCG_API gcg_status gcg_trace_write_csv(const gcg_trace* t, const char* path,
                                       int include_timing);
GCG_API gcg_status gcg_trace_read_csv(const char* path, gcg_trace** out);
GCG_API void gcg_trace_destroy(gcg_trace* t);

/* ---- trace audits ----
 * With a problem and start point the audit replays the run and cross-checks
 * every recorded field (including the tau clamp); pass NULL for both to run
 * the row-only checks. */

GCG_API gcg_status gcg_audit_nm(const gcg_problem* p /* nullable */,
                                const double* x0 /* nullable */, int64_t dim,
                                const gcg_trace* t, const gcg_nm_options* opt,
                                gcg_audit** out);
GCG_API gcg_status gcg_audit_pf(const gcg_problem* p /* nullable */,
                                const double* x0 /* nullable */, int64_t dim,
                                const gcg_trace* t, const gcg_pf_options* opt,
                                gcg_audit** out);
GCG_API int gcg_audit_total(const gcg_audit* a);
GCG_API int gcg_audit_passed(const gcg_audit* a);
/* first trace row named by a failed check; -1 when everything passed */
GCG_API int64_t gcg_audit_first_failed_row(const gcg_audit* a);
GCG_API const char* gcg_audit_text(const gcg_audit* a);
GCG_API void gcg_audit_destroy(gcg_audit* a);

/* ---- experiment harness (config files drive everything) ---- */

typedef struct gcg_overrides {
  int has_seed;
  uint64_t seed;
  int has_max_iters;
  int64_t max_iters;
  const char* out_dir; /* NULL keeps the config's choice */
  int quiet;
  int timing; /* write measured elapsed_ns (breaks byte determinism) */
} gcg_overrides;
GCG_API void gcg_overrides_init(gcg_overrides* o);

typedef struct gcg_run_summary {
  int termination; /* gcg_termination */
  int solver_error;
  double final_f;
  double final_gap;
  double min_gap;
  int64_t iterations;
  int64_t elapsed_ns;
  char name[128];
  char trace_path[512];
  char plot_path[512];
  char summary_path[512];
  char message[256];
} gcg_run_summary;

/* Runs one config file end to end (trace, plot and summary files). Returns
 * GCG_OK when the solver ran to a termination status, including MaxIters;
 * solver failures (infeasible start, stall) return their error code with the
 * summary partially filled. */
GCG_API gcg_status gcg_run_config(const char* config_path,
                                  const gcg_overrides* ov,
                                  gcg_run_summary* out);

/* Audits a trace file against the config that produced it. checks_failed
 * receives the number of failed checks; first_failed_row the smallest
 * offending trace row (-1 if none). The report is written beside the trace. */
GCG_API gcg_status gcg_audit_files(const char* trace_path,
                                   const char* config_path,
                                   const gcg_overrides* ov, int* checks_failed,
                                   int64_t* first_failed_row,
                                   char* report_path, size_t report_path_len);

typedef struct gcg_bench_summary {
  int64_t runs_total;
  int64_t runs_failed;
  char table_path[512];
  char rate_report_path[512];
} gcg_bench_summary;

/* Runs every config in a suite file concurrently; failed runs are counted,
 * siblings complete. */
GCG_API gcg_status gcg_bench(const char* suite_path, const gcg_overrides* ov,
                             gcg_bench_summary* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GCG_H */
