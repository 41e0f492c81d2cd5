// Command-line front end for the gcg shared library. Talks to the solver
// exclusively through the C API in gcg/gcg.h.
//
// Exit codes:
//   solve: 0 converged (GapBelowTol/StationaryStep), 2 MaxIters,
//          3 solver error, 1 config/file error
//   audit: 0 all checks pass, 4 audit failure, 1 config/file error
//   bench: 0 all runs converged, 2 some runs failed, 1 suite/config error

#include <cinttypes>
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "gcg/gcg.h"

namespace {

struct GlobalFlags {
  std::string out_dir;
  std::uint64_t seed = 0;
  bool has_seed = false;
  std::int64_t max_iters = 0;
  bool has_max_iters = false;
  bool quiet = false;
  bool timing = false;
};

gcg_overrides make_overrides(const GlobalFlags& g) {
  gcg_overrides ov;
  gcg_overrides_init(&ov);
  ov.has_seed = g.has_seed ? 1 : 0;
  ov.seed = g.seed;
  ov.has_max_iters = g.has_max_iters ? 1 : 0;
  ov.max_iters = g.max_iters;
  ov.out_dir = g.out_dir.empty() ? nullptr : g.out_dir.c_str();
  ov.quiet = g.quiet ? 1 : 0;
  ov.timing = g.timing ? 1 : 0;
  return ov;
}

bool is_config_error(gcg_status st) {
  return st == GCG_ERR_PARSE || st == GCG_ERR_IO ||
         st == GCG_ERR_INVALID_ARGUMENT || st == GCG_ERR_DIMENSION_MISMATCH;
}

int run_solve(const std::string& config, const GlobalFlags& g) {
  gcg_overrides ov = make_overrides(g);
  gcg_run_summary summary;
  const gcg_status st = gcg_run_config(config.c_str(), &ov, &summary);
  if (st != GCG_OK) {
    std::fprintf(stderr, "gcg solve: %s: %s\n", gcg_status_name(st),
                 gcg_last_error());
    return is_config_error(st) ? 1 : 3;
  }
  if (!g.quiet) {
    std::printf("%s: %s after %" PRId64 " iterations, final gap %g\n",
                summary.name,
                gcg_termination_name(
                    static_cast<gcg_termination>(summary.termination)),
                summary.iterations, summary.final_gap);
  }
  return summary.termination == GCG_TERM_MAX_ITERS ? 2 : 0;
}

int run_audit(const std::string& trace, const std::string& config,
              const GlobalFlags& g) {
  gcg_overrides ov = make_overrides(g);
  int failed = 0;
  std::int64_t first_row = -1;
  char report_path[512] = {0};
  const gcg_status st =
      gcg_audit_files(trace.c_str(), config.c_str(), &ov, &failed, &first_row,
                      report_path, sizeof(report_path));
  if (st != GCG_OK) {
    std::fprintf(stderr, "gcg audit: %s: %s\n", gcg_status_name(st),
                 gcg_last_error());
    return 1;
  }
  if (failed > 0) {
    std::fprintf(stderr,
                 "gcg audit: %d check(s) failed, first failing row %" PRId64
                 " (report: %s)\n",
                 failed, first_row, report_path);
    return 4;
  }
  if (!g.quiet)
    std::printf("audit passed, report written to %s\n", report_path);
  return 0;
}

int run_bench(const std::string& suite, const GlobalFlags& g) {
  gcg_overrides ov = make_overrides(g);
  gcg_bench_summary summary;
  const gcg_status st = gcg_bench(suite.c_str(), &ov, &summary);
  if (st != GCG_OK) {
    std::fprintf(stderr, "gcg bench: %s: %s\n", gcg_status_name(st),
                 gcg_last_error());
    return 1;
  }
  if (!g.quiet) {
    std::printf("bench: %" PRId64 "/%" PRId64 " runs ok, table %s, rates %s\n",
                summary.runs_total - summary.runs_failed, summary.runs_total,
                summary.table_path, summary.rate_report_path);
  }
  return summary.runs_failed > 0 ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized conditional gradient solver harness"};
  app.require_subcommand(1);

  GlobalFlags g;
  app.add_option("--out-dir", g.out_dir, "output directory override")
      ->envname("GCG_OUT_DIR");
  auto* seed_opt = app.add_option("--seed", g.seed, "seed override");
  auto* iters_opt =
      app.add_option("--max-iters", g.max_iters, "iteration budget override");
  app.add_flag("--quiet", g.quiet, "suppress progress output");
  app.add_flag("--timing", g.timing,
               "write measured elapsed_ns into trace files (breaks byte "
               "determinism)");

  std::string config, trace, suite;
  auto* solve = app.add_subcommand("solve", "run one experiment config");
  solve->fallthrough();
  solve->add_option("config", config, "experiment config file")->required();
  auto* audit =
      app.add_subcommand("audit", "re-verify a trace against its config");
  audit->fallthrough();
  audit->add_option("trace", trace, "trace CSV produced by solve")->required();
  audit->add_option("config", config, "config that produced the trace")
      ->required();
  auto* bench = app.add_subcommand("bench", "run a suite of configs");
  bench->fallthrough();
  bench->add_option("suite", suite, "suite file listing configs")->required();

  CLI11_PARSE(app, argc, argv);
  g.has_seed = seed_opt->count() > 0;
  g.has_max_iters = iters_opt->count() > 0;

  if (solve->parsed()) return run_solve(config, g);
  if (audit->parsed()) return run_audit(trace, config, g);
  if (bench->parsed()) return run_bench(suite, g);
  return 1;
}
