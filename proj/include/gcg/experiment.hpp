#pragma once

#include <optional>
#include <string>

#include "gcg/problem.hpp"
#include "gcg/types.hpp"

namespace gcg {

enum class Algorithm { Nm, Pf };

/// Command-line / caller overrides applied on top of a config file.
struct RunOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> max_iters;
  std::optional<std::string> out_dir;
  bool quiet = false;
  bool timing = false;  // write measured elapsed_ns into trace files
};

/// A fully instantiated experiment: problem, start point, solver choice and
/// parameters. Identical config + seed always instantiates identical data.
struct Experiment {
  std::string name;
  std::uint64_t seed = 0;
  Problem problem;
  Vector x0;
  Algorithm algorithm = Algorithm::Nm;
  NmConfig nm;
  PfConfig pf;
  std::string output_basename;
  std::string out_dir = ".";
};

/// Parses a YAML experiment config (grammar documented in the README).
/// Raises ParseError with file/field diagnostics on malformed input.
Experiment load_experiment(const std::string& path,
                           const RunOverrides& ov = {});

struct RunSummary {
  std::string name;
  Termination status = Termination::MaxIters;
  bool solver_error = false;  // stall, infeasible start, oracle failure
  std::optional<ErrorCode> error_code;
  std::string message;
  double final_f = 0.0;
  double final_gap = 0.0;
  double min_gap = 0.0;
  std::int64_t iterations = 0;
  std::int64_t elapsed_ns = 0;
  std::string trace_path;
  std::string plot_path;
  std::string summary_path;
};

/// Runs the experiment and writes <out>/<name>.trace.csv, .plot.csv and
/// .summary.txt. Solver errors (stall, infeasible start) are reported in the
/// summary rather than thrown; config and I/O errors still throw.
RunSummary run_experiment(const Experiment& ex, const RunOverrides& ov = {});

/// Convenience: load + run.
RunSummary run_config_file(const std::string& path, const RunOverrides& ov = {});

struct BenchRun {
  std::string config_path;
  std::optional<RunSummary> summary;  // empty when the config failed to load
  std::string error;
};

struct BenchResult {
  std::vector<BenchRun> runs;
  std::string table_path;        // combined min-gap-vs-iteration CSV
  std::string rate_report_path;  // rate_slope report for Hoelder fixtures
  bool all_ok = false;
};

/// Runs every config listed in a YAML suite file (runs execute concurrently;
/// each owns its output files). A failing run is recorded and does not abort
/// its siblings. An empty suite raises ParseError.
BenchResult run_bench(const std::string& suite_path,
                      const RunOverrides& ov = {});

const char* algorithm_name(Algorithm a);

}  // namespace gcg
