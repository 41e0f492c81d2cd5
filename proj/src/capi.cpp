#include "gcg/gcg.h"

#include <cstring>
#include <string>

#include "gcg/experiment.hpp"
#include "gcg/gap.hpp"
#include "gcg/problem.hpp"
#include "gcg/solver_nonmonotone.hpp"
#include "gcg/solver_parameter_free.hpp"
#include "gcg/trace_io.hpp"
#include "gcg/verify.hpp"

struct gcg_smooth {
  gcg::SmoothOracle impl;
};
struct gcg_nonsmooth {
  gcg::NonsmoothTerm impl;
};
struct gcg_problem {
  gcg::Problem impl;
};
struct gcg_trace {
  std::vector<gcg::IterateRecord> trace;
  gcg::Termination status = gcg::Termination::MaxIters;
  bool has_status = false;
  gcg::Vector x_final;
};
struct gcg_audit {
  gcg::AuditReport report;
  std::string text;
};

namespace {

thread_local std::string t_last_error;

gcg_status map_code(gcg::ErrorCode code) {
  using EC = gcg::ErrorCode;
  switch (code) {
    case EC::DimensionMismatch: return GCG_ERR_DIMENSION_MISMATCH;
    case EC::NonFiniteValue: return GCG_ERR_NONFINITE;
    case EC::InvalidArgument: return GCG_ERR_INVALID_ARGUMENT;
    case EC::InfeasibleQueryPoint: return GCG_ERR_INFEASIBLE_POINT;
    case EC::StartPointInfeasible: return GCG_ERR_INFEASIBLE_START;
    case EC::LinesearchStalled: return GCG_ERR_LINESEARCH_STALLED;
    case EC::DegenerateDirection: return GCG_ERR_DEGENERATE_DIRECTION;
    case EC::NegativeGap: return GCG_ERR_NEGATIVE_GAP;
    case EC::NonConvexFixture: return GCG_ERR_NONCONVEX_FIXTURE;
    case EC::DimensionTooLarge: return GCG_ERR_DIMENSION_TOO_LARGE;
    case EC::InsufficientTrace: return GCG_ERR_INSUFFICIENT_TRACE;
    case EC::InvariantViolation: return GCG_ERR_INVARIANT_VIOLATION;
    case EC::ParseError: return GCG_ERR_PARSE;
    case EC::IoError: return GCG_ERR_IO;
  }
  return GCG_ERR_UNKNOWN;
}

/// Runs `fn`, converting exceptions into status codes + the thread-local
/// message.
template <typename Fn>
gcg_status guarded(Fn&& fn) {
  try {
    fn();
    return GCG_OK;
  } catch (const gcg::Error& e) {
    t_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return GCG_ERR_UNKNOWN;
  } catch (...) {
    t_last_error = "unknown error";
    return GCG_ERR_UNKNOWN;
  }
}

gcg_status invalid(const char* msg) {
  t_last_error = msg;
  return GCG_ERR_INVALID_ARGUMENT;
}

gcg::Vector to_vector(const double* data, int64_t n) {
  return Eigen::Map<const gcg::Vector>(data, n);
}

gcg::Matrix to_matrix(const double* data, int64_t rows, int64_t cols) {
  // C callers pass row-major
  return Eigen::Map<
      const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                          Eigen::RowMajor>>(data, rows, cols);
}

gcg::NmConfig to_nm_config(const gcg_nm_options* o) {
  gcg::NmConfig c;
  if (!o) return c;
  c.beta = o->beta;
  c.sigma = o->sigma;
  c.p = o->p;
  c.pk_schedule = o->pk_schedule == 1 ? gcg::PkSchedule::HarmonicToOne
                                      : gcg::PkSchedule::Constant;
  c.pk_value = o->pk_value;
  c.gap_tol = o->gap_tol;
  c.max_iters = o->max_iters;
  c.max_backtracks = o->max_backtracks;
  return c;
}

gcg::PfConfig to_pf_config(const gcg_pf_options* o) {
  gcg::PfConfig c;
  if (!o) return c;
  c.l_init = o->l_init;
  c.gap_tol = o->gap_tol;
  c.max_iters = o->max_iters;
  c.max_backtracks = o->max_backtracks;
  return c;
}

gcg_termination map_termination(gcg::Termination t) {
  switch (t) {
    case gcg::Termination::GapBelowTol: return GCG_TERM_GAP_BELOW_TOL;
    case gcg::Termination::MaxIters: return GCG_TERM_MAX_ITERS;
    case gcg::Termination::StationaryStep: return GCG_TERM_STATIONARY_STEP;
    case gcg::Termination::LinesearchStalled:
      return GCG_TERM_LINESEARCH_STALLED;
  }
  return GCG_TERM_MAX_ITERS;
}

void copy_string(char* dst, size_t len, const std::string& src) {
  if (!dst || len == 0) return;
  std::snprintf(dst, len, "%s", src.c_str());
}

gcg::RunOverrides to_overrides(const gcg_overrides* ov) {
  gcg::RunOverrides r;
  if (!ov) return r;
  if (ov->has_seed) r.seed = ov->seed;
  if (ov->has_max_iters) r.max_iters = ov->max_iters;
  if (ov->out_dir) r.out_dir = std::string(ov->out_dir);
  r.quiet = ov->quiet != 0;
  r.timing = ov->timing != 0;
  return r;
}

void fill_summary(gcg_run_summary* out, const gcg::RunSummary& s) {
  std::memset(out, 0, sizeof(*out));
  out->termination = map_termination(s.status);
  out->solver_error = s.solver_error ? 1 : 0;
  out->final_f = s.final_f;
  out->final_gap = s.final_gap;
  out->min_gap = s.min_gap;
  out->iterations = s.iterations;
  out->elapsed_ns = s.elapsed_ns;
  copy_string(out->name, sizeof(out->name), s.name);
  copy_string(out->trace_path, sizeof(out->trace_path), s.trace_path);
  copy_string(out->plot_path, sizeof(out->plot_path), s.plot_path);
  copy_string(out->summary_path, sizeof(out->summary_path), s.summary_path);
  copy_string(out->message, sizeof(out->message), s.message);
}

}  // namespace

extern "C" {

const char* gcg_version(void) { return "0.1.0"; }

const char* gcg_status_name(gcg_status status) {
  switch (status) {
    case GCG_OK: return "OK";
    case GCG_ERR_DIMENSION_MISMATCH: return "DimensionMismatch";
    case GCG_ERR_NONFINITE: return "NonFiniteValue";
    case GCG_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case GCG_ERR_INFEASIBLE_POINT: return "InfeasibleQueryPoint";
    case GCG_ERR_INFEASIBLE_START: return "StartPointInfeasible";
    case GCG_ERR_LINESEARCH_STALLED: return "LinesearchStalled";
    case GCG_ERR_DEGENERATE_DIRECTION: return "DegenerateDirection";
    case GCG_ERR_NEGATIVE_GAP: return "NegativeGap";
    case GCG_ERR_NONCONVEX_FIXTURE: return "NonConvexFixture";
    case GCG_ERR_DIMENSION_TOO_LARGE: return "DimensionTooLarge";
    case GCG_ERR_INSUFFICIENT_TRACE: return "InsufficientTrace";
    case GCG_ERR_INVARIANT_VIOLATION: return "InvariantViolation";
    case GCG_ERR_PARSE: return "ParseError";
    case GCG_ERR_IO: return "IoError";
    case GCG_ERR_UNKNOWN: return "Unknown";
  }
  return "Unknown";
}

const char* gcg_termination_name(gcg_termination term) {
  switch (term) {
    case GCG_TERM_GAP_BELOW_TOL: return "GapBelowTol";
    case GCG_TERM_MAX_ITERS: return "MaxIters";
    case GCG_TERM_STATIONARY_STEP: return "StationaryStep";
    case GCG_TERM_LINESEARCH_STALLED: return "LinesearchStalled";
  }
  return "Unknown";
}

const char* gcg_last_error(void) { return t_last_error.c_str(); }

gcg_status gcg_smooth_create_quadratic(int64_t dim, const double* q_matrix,
                                       const double* q_vector,
                                       gcg_smooth** out) {
  if (!q_matrix || !q_vector || !out || dim <= 0)
    return invalid("gcg_smooth_create_quadratic: bad arguments");
  return guarded([&] {
    *out = new gcg_smooth{gcg::SmoothOracle::quadratic(
        to_matrix(q_matrix, dim, dim), to_vector(q_vector, dim))};
  });
}

gcg_status gcg_smooth_create_ppower(int64_t rows, int64_t dim, const double* a,
                                    const double* b, double pexp,
                                    gcg_smooth** out) {
  if (!a || !b || !out || rows <= 0 || dim <= 0)
    return invalid("gcg_smooth_create_ppower: bad arguments");
  return guarded([&] {
    *out = new gcg_smooth{gcg::SmoothOracle::p_power_residual(
        to_matrix(a, rows, dim), to_vector(b, rows), pexp)};
  });
}

gcg_status gcg_smooth_create_logistic(int64_t rows, int64_t dim,
                                      const double* a, const double* labels,
                                      gcg_smooth** out) {
  if (!a || !labels || !out || rows <= 0 || dim <= 0)
    return invalid("gcg_smooth_create_logistic: bad arguments");
  return guarded([&] {
    *out = new gcg_smooth{gcg::SmoothOracle::logistic(to_matrix(a, rows, dim),
                                                      to_vector(labels, rows))};
  });
}

gcg_status gcg_smooth_create_nonholder_well(int64_t dim, double knot,
                                            double curvature,
                                            gcg_smooth** out) {
  if (!out || dim <= 0)
    return invalid("gcg_smooth_create_nonholder_well: bad arguments");
  return guarded([&] {
    *out = new gcg_smooth{
        gcg::SmoothOracle::non_holder_well(dim, knot, curvature)};
  });
}

void gcg_smooth_destroy(gcg_smooth* s) { delete s; }

gcg_status gcg_smooth_value(const gcg_smooth* s, const double* x, int64_t dim,
                            double* out) {
  if (!s || !x || !out) return invalid("gcg_smooth_value: bad arguments");
  return guarded([&] { *out = s->impl.value(to_vector(x, dim)); });
}

gcg_status gcg_smooth_gradient(const gcg_smooth* s, const double* x,
                               int64_t dim, double* out) {
  if (!s || !x || !out) return invalid("gcg_smooth_gradient: bad arguments");
  return guarded([&] {
    const gcg::Vector g = s->impl.gradient(to_vector(x, dim));
    std::memcpy(out, g.data(), sizeof(double) * g.size());
  });
}

gcg_status gcg_nonsmooth_create_simplex(int64_t dim, double radius,
                                        gcg_nonsmooth** out) {
  if (!out) return invalid("gcg_nonsmooth_create_simplex: bad arguments");
  return guarded([&] {
    *out = new gcg_nonsmooth{gcg::NonsmoothTerm::simplex(dim, radius)};
  });
}

gcg_status gcg_nonsmooth_create_l1_ball(int64_t dim, double radius,
                                        gcg_nonsmooth** out) {
  if (!out) return invalid("gcg_nonsmooth_create_l1_ball: bad arguments");
  return guarded([&] {
    *out = new gcg_nonsmooth{gcg::NonsmoothTerm::l1_ball(dim, radius)};
  });
}

gcg_status gcg_nonsmooth_create_l2_ball(int64_t dim, double radius,
                                        gcg_nonsmooth** out) {
  if (!out) return invalid("gcg_nonsmooth_create_l2_ball: bad arguments");
  return guarded([&] {
    *out = new gcg_nonsmooth{gcg::NonsmoothTerm::l2_ball(dim, radius)};
  });
}

gcg_status gcg_nonsmooth_create_box(int64_t dim, const double* lower,
                                    const double* upper, gcg_nonsmooth** out) {
  if (!lower || !upper || !out || dim <= 0)
    return invalid("gcg_nonsmooth_create_box: bad arguments");
  return guarded([&] {
    *out = new gcg_nonsmooth{
        gcg::NonsmoothTerm::box(to_vector(lower, dim), to_vector(upper, dim))};
  });
}

gcg_status gcg_nonsmooth_create_elastic_net(int64_t dim, double lambda1,
                                            double lambda2,
                                            gcg_nonsmooth** out) {
  if (!out) return invalid("gcg_nonsmooth_create_elastic_net: bad arguments");
  return guarded([&] {
    *out = new gcg_nonsmooth{
        gcg::NonsmoothTerm::elastic_net(dim, lambda1, lambda2)};
  });
}

void gcg_nonsmooth_destroy(gcg_nonsmooth* t) { delete t; }

gcg_status gcg_nonsmooth_value(const gcg_nonsmooth* t, const double* x,
                               int64_t dim, double* out) {
  if (!t || !x || !out) return invalid("gcg_nonsmooth_value: bad arguments");
  return guarded([&] { *out = t->impl.value(to_vector(x, dim)); });
}

gcg_status gcg_nonsmooth_lmo(const gcg_nonsmooth* t, const double* cost,
                             int64_t dim, double* v_out, double* g_v_out) {
  if (!t || !cost || !v_out || !g_v_out)
    return invalid("gcg_nonsmooth_lmo: bad arguments");
  return guarded([&] {
    const gcg::LmoResult r = t->impl.lmo(to_vector(cost, dim));
    std::memcpy(v_out, r.v.data(), sizeof(double) * r.v.size());
    *g_v_out = r.g_v;
  });
}

gcg_status gcg_problem_create(const gcg_smooth* s, const gcg_nonsmooth* t,
                              gcg_problem** out) {
  if (!s || !t || !out) return invalid("gcg_problem_create: bad arguments");
  return guarded(
      [&] { *out = new gcg_problem{gcg::Problem(s->impl, t->impl)}; });
}

void gcg_problem_destroy(gcg_problem* p) { delete p; }

int64_t gcg_problem_dim(const gcg_problem* p) { return p ? p->impl.dim() : 0; }

gcg_status gcg_frank_wolfe_gap(const gcg_problem* p, const double* x,
                               int64_t dim, double* gap_out, double* v_out) {
  if (!p || !x || !gap_out)
    return invalid("gcg_frank_wolfe_gap: bad arguments");
  return guarded([&] {
    const gcg::Vector xv = to_vector(x, dim);
    const double gx = p->impl.nonsmooth().value(xv);
    const gcg::GapResult gr = gcg::frank_wolfe_gap(p->impl, xv, gx);
    *gap_out = gr.gap;
    if (v_out) std::memcpy(v_out, gr.v.data(), sizeof(double) * gr.v.size());
  });
}

void gcg_nm_options_init(gcg_nm_options* o) {
  if (!o) return;
  const gcg::NmConfig c;
  o->beta = c.beta;
  o->sigma = c.sigma;
  o->p = c.p;
  o->pk_schedule = 0;
  o->pk_value = c.pk_value;
  o->gap_tol = c.gap_tol;
  o->max_iters = c.max_iters;
  o->max_backtracks = c.max_backtracks;
}

void gcg_pf_options_init(gcg_pf_options* o) {
  if (!o) return;
  const gcg::PfConfig c;
  o->l_init = c.l_init;
  o->gap_tol = c.gap_tol;
  o->max_iters = c.max_iters;
  o->max_backtracks = c.max_backtracks;
}

gcg_status gcg_solve_nm(const gcg_problem* p, const double* x0, int64_t dim,
                        const gcg_nm_options* opt, gcg_trace** out) {
  if (!p || !x0 || !out) return invalid("gcg_solve_nm: bad arguments");
  return guarded([&] {
    gcg::RunResult rr = gcg::nm_run(p->impl, to_vector(x0, dim), to_nm_config(opt));
    *out = new gcg_trace{std::move(rr.trace), rr.status, true,
                         std::move(rr.x_final)};
  });
}

gcg_status gcg_solve_pf(const gcg_problem* p, const double* x0, int64_t dim,
                        const gcg_pf_options* opt, gcg_trace** out) {
  if (!p || !x0 || !out) return invalid("gcg_solve_pf: bad arguments");
  return guarded([&] {
    gcg::RunResult rr = gcg::pf_run(p->impl, to_vector(x0, dim), to_pf_config(opt));
    *out = new gcg_trace{std::move(rr.trace), rr.status, true,
                         std::move(rr.x_final)};
  });
}

int64_t gcg_trace_rows(const gcg_trace* t) {
  return t ? static_cast<int64_t>(t->trace.size()) : 0;
}

gcg_status gcg_trace_row(const gcg_trace* t, int64_t i, gcg_record* out) {
  if (!t || !out || i < 0 || i >= static_cast<int64_t>(t->trace.size()))
    return invalid("gcg_trace_row: bad arguments");
  const gcg::IterateRecord& r = t->trace[static_cast<std::size_t>(i)];
  out->k = r.k;
  out->f_x = r.f_x;
  out->f_ref = r.f_ref;
  out->gap = r.gap;
  out->step = r.step;
  out->backtracks = r.backtracks;
  out->has_l = r.l_k.has_value() ? 1 : 0;
  out->l_k = r.l_k.value_or(0.0);
  out->elapsed_ns = r.elapsed_ns;
  return GCG_OK;
}

gcg_termination gcg_trace_termination(const gcg_trace* t) {
  return t && t->has_status ? map_termination(t->status) : GCG_TERM_MAX_ITERS;
}

gcg_status gcg_trace_final_x(const gcg_trace* t, double* out, int64_t dim) {
  if (!t || !out || t->x_final.size() != dim)
    return invalid("gcg_trace_final_x: bad arguments");
  std::memcpy(out, t->x_final.data(), sizeof(double) * dim);
  return GCG_OK;
}

gcg_status gcg_trace_write_csv(const gcg_trace* t, const char* path,
                               int include_timing) {
  if (!t || !path) return invalid("gcg_trace_write_csv: bad arguments");
  return guarded(
      [&] { gcg::write_trace_csv(path, t->trace, include_timing != 0); });
}

gcg_status gcg_trace_read_csv(const char* path, gcg_trace** out) {
  if (!path || !out) return invalid("gcg_trace_read_csv: bad arguments");
  return guarded([&] {
    auto trace = gcg::read_trace_csv(path);
    *out = new gcg_trace{std::move(trace), gcg::Termination::MaxIters, false,
                         gcg::Vector()};
  });
}

void gcg_trace_destroy(gcg_trace* t) { delete t; }

gcg_status gcg_audit_nm(const gcg_problem* p, const double* x0, int64_t dim,
                        const gcg_trace* t, const gcg_nm_options* opt,
                        gcg_audit** out) {
  if (!t || !out) return invalid("gcg_audit_nm: bad arguments");
  if ((p == nullptr) != (x0 == nullptr))
    return invalid("gcg_audit_nm: provide both problem and x0, or neither");
  return guarded([&] {
    gcg::AuditReport rep =
        p ? gcg::audit_replay(p->impl, to_vector(x0, dim), t->trace,
                              to_nm_config(opt))
          : gcg::audit_trace(t->trace, to_nm_config(opt));
    auto* a = new gcg_audit{std::move(rep), {}};
    a->text = a->report.to_text();
    *out = a;
  });
}

gcg_status gcg_audit_pf(const gcg_problem* p, const double* x0, int64_t dim,
                        const gcg_trace* t, const gcg_pf_options* opt,
                        gcg_audit** out) {
  if (!t || !out) return invalid("gcg_audit_pf: bad arguments");
  if ((p == nullptr) != (x0 == nullptr))
    return invalid("gcg_audit_pf: provide both problem and x0, or neither");
  return guarded([&] {
    gcg::AuditReport rep =
        p ? gcg::audit_replay(p->impl, to_vector(x0, dim), t->trace,
                              to_pf_config(opt))
          : gcg::audit_trace(t->trace, to_pf_config(opt));
    auto* a = new gcg_audit{std::move(rep), {}};
    a->text = a->report.to_text();
    *out = a;
  });
}

int gcg_audit_total(const gcg_audit* a) { return a ? a->report.total() : 0; }

int gcg_audit_passed(const gcg_audit* a) {
  return a ? a->report.passed_count() : 0;
}

int64_t gcg_audit_first_failed_row(const gcg_audit* a) {
  return a ? a->report.first_failed_row() : -1;
}

const char* gcg_audit_text(const gcg_audit* a) {
  return a ? a->text.c_str() : "";
}

void gcg_audit_destroy(gcg_audit* a) { delete a; }

void gcg_overrides_init(gcg_overrides* o) {
  if (!o) return;
  std::memset(o, 0, sizeof(*o));
}

gcg_status gcg_run_config(const char* config_path, const gcg_overrides* ov,
                          gcg_run_summary* out) {
  if (!config_path || !out) return invalid("gcg_run_config: bad arguments");
  return guarded([&] {
    const gcg::RunSummary s =
        gcg::run_config_file(config_path, to_overrides(ov));
    fill_summary(out, s);
    if (s.solver_error)
      throw gcg::Error(s.error_code.value_or(gcg::ErrorCode::InvalidArgument),
                       s.message);
  });
}

gcg_status gcg_audit_files(const char* trace_path, const char* config_path,
                           const gcg_overrides* ov, int* checks_failed,
                           int64_t* first_failed_row, char* report_path,
                           size_t report_path_len) {
  if (!trace_path || !config_path || !checks_failed || !first_failed_row)
    return invalid("gcg_audit_files: bad arguments");
  return guarded([&] {
    const gcg::Experiment ex =
        gcg::load_experiment(config_path, to_overrides(ov));
    const auto trace = gcg::read_trace_csv(trace_path);
    // a trace whose rows carry curvature values cannot come from an nm config
    const bool has_l = !trace.empty() && trace.front().l_k.has_value();
    if (ex.algorithm == gcg::Algorithm::Nm && has_l)
      gcg::raise(gcg::ErrorCode::ParseError,
                 "trace/config mismatch: nm config but trace carries l_k");
    gcg::AuditReport rep =
        ex.algorithm == gcg::Algorithm::Nm
            ? gcg::audit_replay(ex.problem, ex.x0, trace, ex.nm)
            : gcg::audit_replay(ex.problem, ex.x0, trace, ex.pf);
    *checks_failed = rep.total() - rep.passed_count();
    *first_failed_row = rep.first_failed_row();
    const std::string rp = std::string(trace_path) + ".audit.txt";
    std::FILE* f = std::fopen(rp.c_str(), "wb");
    if (!f) gcg::raise(gcg::ErrorCode::IoError, "cannot write " + rp);
    const std::string text = rep.to_text();
    std::fwrite(text.data(), 1, text.size(), f);
    std::fclose(f);
    if (report_path) copy_string(report_path, report_path_len, rp);
  });
}

gcg_status gcg_bench(const char* suite_path, const gcg_overrides* ov,
                     gcg_bench_summary* out) {
  if (!suite_path || !out) return invalid("gcg_bench: bad arguments");
  return guarded([&] {
    const gcg::BenchResult br = gcg::run_bench(suite_path, to_overrides(ov));
    std::memset(out, 0, sizeof(*out));
    out->runs_total = static_cast<int64_t>(br.runs.size());
    for (const auto& r : br.runs)
      out->runs_failed += r.error.empty() ? 0 : 1;
    copy_string(out->table_path, sizeof(out->table_path), br.table_path);
    copy_string(out->rate_report_path, sizeof(out->rate_report_path),
                br.rate_report_path);
  });
}

}  // extern "C"
