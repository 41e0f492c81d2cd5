#include "gcg/experiment.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "gcg/rng.hpp"
#include "gcg/solver_nonmonotone.hpp"
#include "gcg/solver_parameter_free.hpp"
#include "gcg/trace_io.hpp"
#include "gcg/verify.hpp"

namespace fs = std::filesystem;

namespace gcg {

const char* algorithm_name(Algorithm a) {
  return a == Algorithm::Nm ? "nm" : "pf";
}

namespace {

[[noreturn]] void parse_fail(const std::string& path, const std::string& what) {
  raise(ErrorCode::ParseError, path + ": " + what);
}

double as_double(const YAML::Node& n, const std::string& path,
                 const std::string& field) {
  if (!n || !n.IsScalar()) parse_fail(path, "missing scalar field '" + field + "'");
  try {
    return n.as<double>();
  } catch (const YAML::Exception&) {
    parse_fail(path, "field '" + field + "' is not a number");
  }
}

std::int64_t as_int(const YAML::Node& n, const std::string& path,
                    const std::string& field) {
  if (!n || !n.IsScalar()) parse_fail(path, "missing scalar field '" + field + "'");
  try {
    return n.as<std::int64_t>();
  } catch (const YAML::Exception&) {
    parse_fail(path, "field '" + field + "' is not an integer");
  }
}

std::string as_string(const YAML::Node& n, const std::string& path,
                      const std::string& field) {
  if (!n || !n.IsScalar()) parse_fail(path, "missing scalar field '" + field + "'");
  return n.as<std::string>();
}

Vector parse_vector(const YAML::Node& n, const std::string& path,
                    const std::string& field) {
  if (!n || !n.IsSequence())
    parse_fail(path, "field '" + field + "' must be a sequence of numbers");
  Vector v(n.size());
  for (std::size_t i = 0; i < n.size(); ++i)
    v[static_cast<Index>(i)] = as_double(n[i], path, field);
  return v;
}

Matrix parse_inline_matrix(const YAML::Node& n, const std::string& path,
                           const std::string& field) {
  if (!n.IsSequence() || n.size() == 0 || !n[0].IsSequence())
    parse_fail(path, "field '" + field + "' must be a sequence of rows");
  const std::size_t rows = n.size(), cols = n[0].size();
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!n[i].IsSequence() || n[i].size() != cols)
      parse_fail(path, "field '" + field + "' has ragged rows");
    for (std::size_t j = 0; j < cols; ++j)
      m(static_cast<Index>(i), static_cast<Index>(j)) =
          as_double(n[i][j], path, field);
  }
  return m;
}

Matrix parse_csv_matrix(const std::string& csv_path, const std::string& path,
                        const std::string& field) {
  std::ifstream in(csv_path);
  if (!in)
    parse_fail(path, "field '" + field + "': cannot open CSV file " + csv_path);
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        parse_fail(path, "field '" + field + "': bad number '" + cell +
                             "' in " + csv_path);
      }
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) parse_fail(path, "field '" + field + "': empty CSV");
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size())
      parse_fail(path, "field '" + field + "': ragged CSV rows");
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m(static_cast<Index>(i), static_cast<Index>(j)) = rows[i][j];
  }
  return m;
}

/// matrix: inline rows, {csv: file}, or {random: gaussian|spd, rows: m}.
Matrix parse_matrix(const YAML::Node& n, const std::string& path,
                    const std::string& field, Index dim, Rng& rng,
                    const fs::path& base_dir) {
  if (!n) parse_fail(path, "missing field '" + field + "'");
  if (n.IsSequence()) return parse_inline_matrix(n, path, field);
  if (n.IsMap()) {
    if (n["csv"]) {
      const fs::path p = base_dir / as_string(n["csv"], path, field + ".csv");
      return parse_csv_matrix(p.string(), path, field);
    }
    if (n["random"]) {
      const std::string kind = as_string(n["random"], path, field + ".random");
      const double scale =
          n["scale"] ? as_double(n["scale"], path, field + ".scale") : 1.0;
      if (kind == "spd") return rng.spd_matrix(dim) * scale;
      if (kind == "gaussian") {
        const Index rows =
            n["rows"] ? as_int(n["rows"], path, field + ".rows") : dim;
        return rng.normal_matrix(rows, dim) * scale;
      }
      parse_fail(path, "field '" + field + "': unknown random kind '" + kind + "'");
    }
  }
  parse_fail(path, "field '" + field + "' must be rows, {csv:...} or {random:...}");
}

Vector parse_vector_spec(const YAML::Node& n, const std::string& path,
                         const std::string& field, Index len, Rng& rng) {
  if (!n) parse_fail(path, "missing field '" + field + "'");
  if (n.IsSequence()) return parse_vector(n, path, field);
  if (n.IsMap() && n["random"]) {
    const std::string kind = as_string(n["random"], path, field + ".random");
    const double scale =
        n["scale"] ? as_double(n["scale"], path, field + ".scale") : 1.0;
    if (kind == "gaussian") return rng.normal_vector(len) * scale;
    if (kind == "uniform") return rng.uniform_vector(len, -scale, scale);
    if (kind == "labels") return rng.sign_labels(len);
    parse_fail(path, "field '" + field + "': unknown random kind '" + kind + "'");
  }
  parse_fail(path, "field '" + field + "' must be a sequence or {random:...}");
}

SmoothOracle parse_smooth(const YAML::Node& n, const std::string& path,
                          Index dim, Rng& rng, const fs::path& base_dir) {
  if (!n || !n.IsMap()) parse_fail(path, "missing 'smooth' section");
  const std::string kind = as_string(n["kind"], path, "smooth.kind");
  if (kind == "quadratic") {
    Matrix q = parse_matrix(n["matrix"], path, "smooth.matrix", dim, rng, base_dir);
    Vector qv = n["vector"]
                    ? parse_vector_spec(n["vector"], path, "smooth.vector", dim, rng)
                    : Vector(Vector::Zero(dim));
    return SmoothOracle::quadratic(std::move(q), std::move(qv));
  }
  if (kind == "ppower") {
    Matrix a = parse_matrix(n["matrix"], path, "smooth.matrix", dim, rng, base_dir);
    Vector b = parse_vector_spec(n["vector"], path, "smooth.vector", a.rows(), rng);
    const double pexp = as_double(n["pexp"], path, "smooth.pexp");
    return SmoothOracle::p_power_residual(std::move(a), std::move(b), pexp);
  }
  if (kind == "logistic") {
    Matrix a = parse_matrix(n["matrix"], path, "smooth.matrix", dim, rng, base_dir);
    Vector y = parse_vector_spec(n["labels"], path, "smooth.labels", a.rows(), rng);
    return SmoothOracle::logistic(std::move(a), std::move(y));
  }
  if (kind == "nonholder_well") {
    const double knot = n["knot"] ? as_double(n["knot"], path, "smooth.knot")
                                  : std::exp(-2.0);
    const double curv =
        n["curvature"] ? as_double(n["curvature"], path, "smooth.curvature") : 1.0;
    return SmoothOracle::non_holder_well(dim, knot, curv);
  }
  parse_fail(path, "unknown smooth.kind '" + kind + "'");
}

NonsmoothTerm parse_nonsmooth(const YAML::Node& n, const std::string& path,
                              Index dim) {
  if (!n || !n.IsMap()) parse_fail(path, "missing 'nonsmooth' section");
  const std::string kind = as_string(n["kind"], path, "nonsmooth.kind");
  if (kind == "simplex")
    return NonsmoothTerm::simplex(dim, as_double(n["radius"], path, "nonsmooth.radius"));
  if (kind == "l1_ball")
    return NonsmoothTerm::l1_ball(dim, as_double(n["radius"], path, "nonsmooth.radius"));
  if (kind == "l2_ball")
    return NonsmoothTerm::l2_ball(dim, as_double(n["radius"], path, "nonsmooth.radius"));
  if (kind == "box") {
    Vector lo = parse_vector(n["lower"], path, "nonsmooth.lower");
    Vector hi = parse_vector(n["upper"], path, "nonsmooth.upper");
    return NonsmoothTerm::box(std::move(lo), std::move(hi));
  }
  if (kind == "elastic_net")
    return NonsmoothTerm::elastic_net(
        dim, as_double(n["lambda1"], path, "nonsmooth.lambda1"),
        as_double(n["lambda2"], path, "nonsmooth.lambda2"));
  parse_fail(path, "unknown nonsmooth.kind '" + kind + "'");
}

Vector parse_x0(const YAML::Node& n, const std::string& path,
                const NonsmoothTerm& g, Rng& rng) {
  if (!n) parse_fail(path, "missing field 'x0'");
  if (n.IsSequence()) return parse_vector(n, path, "x0");
  if (n.IsMap() && n["preset"]) {
    const std::string preset = as_string(n["preset"], path, "x0.preset");
    const Index dim = g.dim();
    if (preset == "center") {
      switch (g.kind()) {
        case NonsmoothTerm::Kind::Simplex:
          return Vector::Constant(dim, g.radius() / static_cast<double>(dim));
        case NonsmoothTerm::Kind::Box:
          return Vector(0.5 * (g.lower() + g.upper()));
        default:
          return Vector::Zero(dim);
      }
    }
    if (preset == "vertex") {
      switch (g.kind()) {
        case NonsmoothTerm::Kind::Simplex:
        case NonsmoothTerm::Kind::L1Ball:
        case NonsmoothTerm::Kind::L2Ball: {
          Vector v = Vector::Zero(dim);
          v[0] = g.radius();
          return v;
        }
        case NonsmoothTerm::Kind::Box:
          return g.upper();
        default:
          return Vector::Zero(dim);
      }
    }
    parse_fail(path, "unknown x0.preset '" + preset + "'");
  }
  if (n.IsMap() && n["random"]) {
    // random feasible point: a convex combination of LMO vertices
    const Index dim = g.dim();
    Vector x = g.lmo(rng.normal_vector(dim)).v;
    for (int i = 0; i < 4; ++i) {
      const double t = rng.uniform();
      x = (1.0 - t) * x + t * g.lmo(rng.normal_vector(dim)).v;
    }
    return x;
  }
  parse_fail(path, "field 'x0' must be a sequence, {preset:...} or {random:...}");
}

void parse_params(const YAML::Node& n, const std::string& path, NmConfig& nm,
                  PfConfig& pf) {
  if (!n) return;
  if (!n.IsMap()) parse_fail(path, "'params' must be a map");
  if (n["beta"]) nm.beta = as_double(n["beta"], path, "params.beta");
  if (n["sigma"]) nm.sigma = as_double(n["sigma"], path, "params.sigma");
  if (n["p"]) {
    nm.p = as_double(n["p"], path, "params.p");
    nm.pk_value = nm.p;  // default constant schedule follows p unless overridden
  }
  if (n["pk_schedule"]) {
    const std::string s = as_string(n["pk_schedule"], path, "params.pk_schedule");
    if (s == "constant")
      nm.pk_schedule = PkSchedule::Constant;
    else if (s == "harmonic_to_one")
      nm.pk_schedule = PkSchedule::HarmonicToOne;
    else
      parse_fail(path, "unknown params.pk_schedule '" + s + "'");
  }
  if (n["pk_value"]) nm.pk_value = as_double(n["pk_value"], path, "params.pk_value");
  if (n["l_init"]) pf.l_init = as_double(n["l_init"], path, "params.l_init");
  if (n["gap_tol"]) {
    nm.gap_tol = as_double(n["gap_tol"], path, "params.gap_tol");
    pf.gap_tol = nm.gap_tol;
  }
  if (n["max_iters"]) {
    nm.max_iters = as_int(n["max_iters"], path, "params.max_iters");
    pf.max_iters = nm.max_iters;
  }
  if (n["max_backtracks"]) {
    nm.max_backtracks =
        static_cast<int>(as_int(n["max_backtracks"], path, "params.max_backtracks"));
    pf.max_backtracks = nm.max_backtracks;
  }
}

}  // namespace

namespace {
Experiment load_experiment_impl(const std::string& path,
                                const RunOverrides& ov);
}

Experiment load_experiment(const std::string& path, const RunOverrides& ov) {
  try {
    return load_experiment_impl(path, ov);
  } catch (const YAML::Exception& e) {
    raise(ErrorCode::ParseError, path + ": " + e.what());
  }
}

namespace {

Experiment load_experiment_impl(const std::string& path,
                                const RunOverrides& ov) {
  YAML::Node root;
  try {
    root = YAML::LoadFile(path);
  } catch (const YAML::BadFile&) {
    raise(ErrorCode::IoError, "cannot open config: " + path);
  } catch (const YAML::Exception& e) {
    raise(ErrorCode::ParseError, path + ": " + e.what());
  }
  if (!root.IsMap()) parse_fail(path, "config must be a YAML map");

  const std::uint64_t seed =
      ov.seed ? *ov.seed
              : (root["seed"] ? root["seed"].as<std::uint64_t>() : 0u);
  Rng rng(seed);

  const Index dim = as_int(root["dim"], path, "dim");
  if (dim <= 0) parse_fail(path, "dim must be positive");

  const fs::path base_dir = fs::path(path).parent_path();
  SmoothOracle f = parse_smooth(root["smooth"], path, dim, rng, base_dir);
  NonsmoothTerm g = parse_nonsmooth(root["nonsmooth"], path, dim);
  require_same_dim(f.dim(), g.dim(), "config smooth vs nonsmooth");

  const std::string algo = as_string(root["algorithm"], path, "algorithm");
  if (algo != "nm" && algo != "pf")
    parse_fail(path, "algorithm must be 'nm' or 'pf'");

  Vector x0 = parse_x0(root["x0"], path, g, rng);

  Experiment ex{
      .name = root["name"] ? root["name"].as<std::string>()
                           : fs::path(path).stem().string(),
      .seed = seed,
      .problem = Problem(std::move(f), std::move(g)),
      .x0 = std::move(x0),
      .algorithm = algo == "nm" ? Algorithm::Nm : Algorithm::Pf,
  };
  parse_params(root["params"], path, ex.nm, ex.pf);
  if (ov.max_iters) {
    ex.nm.max_iters = *ov.max_iters;
    ex.pf.max_iters = *ov.max_iters;
  }
  ex.nm.validate();
  ex.pf.validate();

  ex.output_basename =
      root["output"] ? root["output"].as<std::string>() : ex.name;
  if (root["out_dir"]) ex.out_dir = root["out_dir"].as<std::string>();
  if (ov.out_dir) ex.out_dir = *ov.out_dir;
  return ex;
}

}  // namespace

namespace {

std::string summary_text(const RunSummary& s, Algorithm algo) {
  std::ostringstream os;
  os << "name: " << s.name << "\n"
     << "algorithm: " << algorithm_name(algo) << "\n"
     << "termination: " << termination_name(s.status) << "\n"
     << "solver_error: " << (s.solver_error ? "yes" : "no") << "\n"
     << "iterations: " << s.iterations << "\n"
     << "final_f: " << format_double(s.final_f) << "\n"
     << "final_gap: " << format_double(s.final_gap) << "\n"
     << "min_gap: " << format_double(s.min_gap) << "\n"
     << "wall_ms: " << static_cast<double>(s.elapsed_ns) * 1e-6 << "\n"
     << "trace: " << s.trace_path << "\n";
  if (!s.message.empty()) os << "message: " << s.message << "\n";
  return os.str();
}

}  // namespace

RunSummary run_experiment(const Experiment& ex, const RunOverrides& ov) {
  RunSummary s;
  s.name = ex.name;

  const auto t0 = std::chrono::steady_clock::now();
  RunResult rr;
  try {
    rr = ex.algorithm == Algorithm::Nm ? nm_run(ex.problem, ex.x0, ex.nm)
                                       : pf_run(ex.problem, ex.x0, ex.pf);
  } catch (const Error& e) {
    s.solver_error = true;
    s.error_code = e.code();
    s.message = std::string(error_code_name(e.code())) + ": " + e.what();
    s.status = Termination::MaxIters;
    if (!ov.quiet)
      std::cout << "[gcg] run " << s.name << " failed: " << s.message << "\n";
    return s;
  }
  s.elapsed_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();

  s.status = rr.status;
  if (rr.status == Termination::LinesearchStalled) {
    s.solver_error = true;
    s.error_code = ErrorCode::LinesearchStalled;
    s.message = "LinesearchStalled";
  }
  if (!rr.trace.empty()) {
    s.final_f = rr.trace.back().f_x;
    s.final_gap = rr.trace.back().gap;
    s.min_gap = rr.trace.front().gap;
    for (const auto& r : rr.trace) s.min_gap = std::min(s.min_gap, r.gap);
    s.iterations = rr.trace.back().k;
  }

  const fs::path dir(ov.out_dir ? *ov.out_dir : ex.out_dir);
  if (!dir.empty()) fs::create_directories(dir);
  s.trace_path = (dir / (ex.output_basename + ".trace.csv")).string();
  s.plot_path = (dir / (ex.output_basename + ".plot.csv")).string();
  s.summary_path = (dir / (ex.output_basename + ".summary.txt")).string();
  write_trace_csv(s.trace_path, rr.trace, ov.timing);
  write_plot_csv(s.plot_path, rr.trace);
  {
    std::ofstream out(s.summary_path);
    if (!out) raise(ErrorCode::IoError, "cannot write " + s.summary_path);
    out << summary_text(s, ex.algorithm);
  }
  if (!ov.quiet) {
    std::cout << "[gcg] " << s.name << ": " << termination_name(s.status)
              << " after " << s.iterations << " iterations, final gap "
              << s.final_gap << " -> " << s.trace_path << "\n";
  }
  return s;
}

RunSummary run_config_file(const std::string& path, const RunOverrides& ov) {
  return run_experiment(load_experiment(path, ov), ov);
}

BenchResult run_bench(const std::string& suite_path, const RunOverrides& ov) {
  YAML::Node root;
  try {
    root = YAML::LoadFile(suite_path);
  } catch (const YAML::BadFile&) {
    raise(ErrorCode::IoError, "cannot open suite: " + suite_path);
  } catch (const YAML::Exception& e) {
    raise(ErrorCode::ParseError, suite_path + ": " + e.what());
  }
  const YAML::Node runs = root["runs"];
  if (!runs || !runs.IsSequence() || runs.size() == 0)
    raise(ErrorCode::ParseError, suite_path + ": suite lists no runs");

  RunOverrides run_ov = ov;
  if (!ov.out_dir && root["out_dir"])
    run_ov.out_dir = root["out_dir"].as<std::string>();

  const fs::path base_dir = fs::path(suite_path).parent_path();
  std::vector<std::string> paths;
  for (const auto& r : runs)
    paths.push_back((base_dir / r.as<std::string>()).string());

  // one future per run; each run owns its own output files
  std::vector<std::future<BenchRun>> futures;
  futures.reserve(paths.size());
  for (const std::string& p : paths) {
    futures.push_back(std::async(std::launch::async, [p, run_ov]() {
      BenchRun br;
      br.config_path = p;
      try {
        RunOverrides quiet_ov = run_ov;
        quiet_ov.quiet = true;
        br.summary = run_config_file(p, quiet_ov);
        if (br.summary->solver_error) br.error = br.summary->message;
      } catch (const std::exception& e) {
        br.error = e.what();
      }
      return br;
    }));
  }

  BenchResult out;
  for (auto& f : futures) out.runs.push_back(f.get());
  out.all_ok = std::all_of(out.runs.begin(), out.runs.end(),
                           [](const BenchRun& r) { return r.error.empty(); });

  const fs::path dir(run_ov.out_dir ? *run_ov.out_dir : std::string("."));
  fs::create_directories(dir);

  // combined min-gap-vs-iteration table, one column per completed run
  out.table_path = (dir / "bench_table.csv").string();
  {
    std::vector<const BenchRun*> done;
    std::vector<std::vector<IterateRecord>> traces;
    for (const auto& r : out.runs) {
      if (r.summary && !r.summary->trace_path.empty()) {
        done.push_back(&r);
        traces.push_back(read_trace_csv(r.summary->trace_path));
      }
    }
    std::size_t max_rows = 0;
    for (const auto& t : traces) max_rows = std::max(max_rows, t.size());

    std::ofstream tab(out.table_path);
    if (!tab) raise(ErrorCode::IoError, "cannot write " + out.table_path);
    tab << "k";
    for (const auto* r : done) tab << ',' << r->summary->name;
    tab << "\n";
    std::vector<double> running(traces.size(),
                                std::numeric_limits<double>::infinity());
    for (std::size_t k = 0; k < max_rows; ++k) {
      tab << k;
      for (std::size_t t = 0; t < traces.size(); ++t) {
        tab << ',';
        if (k < traces[t].size()) {
          running[t] = std::min(running[t], traces[t][k].gap);
          tab << format_double(running[t]);
        }
      }
      tab << "\n";
    }
  }

  // rate report for runs whose smooth part has a known Hoelder exponent
  out.rate_report_path = (dir / "rate_report.txt").string();
  {
    std::ofstream rr(out.rate_report_path);
    if (!rr) raise(ErrorCode::IoError, "cannot write " + out.rate_report_path);
    for (const auto& r : out.runs) {
      if (!r.summary) {
        rr << r.config_path << ": not run (" << r.error << ")\n";
        continue;
      }
      std::optional<double> nu;
      try {
        const Experiment ex = load_experiment(r.config_path, run_ov);
        nu = ex.problem.smooth().holder_exponent();
      } catch (const std::exception&) {
      }
      try {
        const auto trace = read_trace_csv(r.summary->trace_path);
        const RateReport rep = rate_slope(trace, nu);
        rr << r.summary->name << ": " << rep.to_text() << "\n";
      } catch (const Error& e) {
        rr << r.summary->name << ": skipped (" << e.what() << ")\n";
      }
    }
  }

  if (!ov.quiet) {
    int failed = 0;
    for (const auto& r : out.runs) failed += r.error.empty() ? 0 : 1;
    std::cout << "[gcg] bench: " << out.runs.size() - failed << "/"
              << out.runs.size() << " runs completed, table " << out.table_path
              << ", rates " << out.rate_report_path << "\n";
    for (const auto& r : out.runs) {
      if (!r.error.empty())
        std::cout << "[gcg]   failed: " << r.config_path << ": " << r.error
                  << "\n";
    }
  }
  return out;
}

}  // namespace gcg
