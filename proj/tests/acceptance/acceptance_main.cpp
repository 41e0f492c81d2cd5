// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Usage: gcg_acceptance <configs_dir> <cli_path> <out_dir>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "gcg/experiment.hpp"
#include "gcg/rng.hpp"
#include "gcg/solver_nonmonotone.hpp"
#include "gcg/solver_parameter_free.hpp"
#include "gcg/trace_io.hpp"
#include "gcg/verify.hpp"

using namespace gcg;
namespace fs = std::filesystem;

namespace {

std::string g_configs_dir, g_cli, g_out_dir;
int g_failures = 0;

class Criterion {
 public:
  Criterion(int number, std::string title)
      : number_(number), title_(std::move(title)) {}

  void require(bool ok, const std::string& what) {
    if (!ok) {
      failed_ = true;
      details_.push_back(what);
    }
  }

  void note(const std::string& what) { notes_.push_back(what); }

  void finish(double elapsed_s) {
    std::printf("[%s] criterion %d: %s (%.2f s)\n", failed_ ? "FAIL" : "PASS",
                number_, title_.c_str(), elapsed_s);
    for (const auto& d : details_) std::printf("       ! %s\n", d.c_str());
    for (const auto& n : notes_) std::printf("       - %s\n", n.c_str());
    if (failed_) ++g_failures;
  }

 private:
  int number_;
  std::string title_;
  bool failed_ = false;
  std::vector<std::string> details_;
  std::vector<std::string> notes_;
};

void run_criterion(int number, const std::string& title,
                   const std::function<void(Criterion&)>& body) {
  Criterion c(number, title);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("unexpected exception: ") + e.what());
  }
  c.finish(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
               .count());
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

int run_cli(const std::string& args) {
  const std::string cmd = g_cli + " " + args + " >/dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return rc < 0 ? rc : WEXITSTATUS(rc);
}

Problem box_quad_1d() {
  Matrix q(1, 1);
  q << 1.0;
  return Problem(SmoothOracle::quadratic(q, Vector::Zero(1)),
                 NonsmoothTerm::box(Vector::Constant(1, -1.0),
                                    Vector::Constant(1, 1.0)));
}

Problem well_box_4d() {
  return Problem(SmoothOracle::non_holder_well(4, std::exp(-2.0), 1.0),
                 NonsmoothTerm::box(Vector::Constant(4, -1.0),
                                    Vector::Constant(4, 1.0)));
}

double min_gap(const std::vector<IterateRecord>& trace) {
  double m = trace.front().gap;
  for (const auto& r : trace) m = std::min(m, r.gap);
  return m;
}

Vector random_feasible(const NonsmoothTerm& g, Rng& rng) {
  Vector x = g.lmo(rng.normal_vector(g.dim())).v;
  for (int i = 0; i < 3; ++i) {
    const double t = rng.uniform();
    x = (1.0 - t) * x + t * g.lmo(rng.normal_vector(g.dim())).v;
  }
  return x;
}

// ---------------------------------------------------------------------------
// shared fixture construction (instances frozen by seed)
// ---------------------------------------------------------------------------

Problem interior_quad(Index n, std::uint64_t seed, NonsmoothTerm g,
                      const Vector& x_target) {
  Rng rng(seed);
  const Matrix q = rng.spd_matrix(n);
  return Problem(SmoothOracle::quadratic(q, -(q * x_target)), std::move(g));
}

struct MatrixCombo {
  std::string name;
  Problem prob;
  Vector x0;
  bool use_pf;
  NmConfig nm;
  PfConfig pf;
};

std::vector<MatrixCombo> invariant_matrix() {
  const auto nm_cfg = [](double p, double pkv, PkSchedule s) {
    NmConfig c;
    c.p = p;
    c.pk_value = pkv;
    c.pk_schedule = s;
    c.gap_tol = 0.0;
    c.max_iters = 1200;
    return c;
  };
  const auto pf_cfg = [](double l) {
    PfConfig c;
    c.l_init = l;
    c.gap_tol = 0.0;
    c.max_iters = 1200;
    return c;
  };

  std::vector<MatrixCombo> out;
  {
    Vector xt(5);
    xt << 0.3, 0.25, 0.2, 0.15, 0.1;
    Problem p = interior_quad(5, 11, NonsmoothTerm::simplex(5, 1.0), xt);
    const Vector x0 = Vector::Constant(5, 0.2);
    out.push_back({"quad/simplex nm monotone", p, x0, false,
                   nm_cfg(1.0, 1.0, PkSchedule::Constant), {}});
    out.push_back({"quad/simplex nm harmonic", p, x0, false,
                   nm_cfg(0.01, 0.01, PkSchedule::HarmonicToOne), {}});
    out.push_back({"quad/simplex pf", p, x0, true, {}, pf_cfg(1.0)});
  }
  {
    Vector xt = Vector::Zero(6);
    xt[0] = 0.25;
    xt[2] = -0.15;
    Problem p = interior_quad(6, 12, NonsmoothTerm::l1_ball(6, 1.0), xt);
    Vector x0 = Vector::Zero(6);
    x0[0] = 1.0;
    out.push_back({"quad/l1 nm pbar=0.7", p, x0, false,
                   nm_cfg(0.5, 0.7, PkSchedule::Constant), {}});
    out.push_back({"quad/l1 pf tiny-L", p, x0, true, {}, pf_cfg(1e-6)});
  }
  {
    Rng rng(13);
    const Matrix a = rng.normal_matrix(15, 10);
    const Vector xh = rng.uniform_vector(10, 0.2, 0.5);
    Problem p(SmoothOracle::p_power_residual(a, a * xh, 1.5),
              NonsmoothTerm::l1_ball(10, 1.0));
    Vector x0 = Vector::Zero(10);
    x0[0] = 1.0;
    out.push_back({"ppower/l1 nm", p, x0, false,
                   nm_cfg(0.5, 0.5, PkSchedule::Constant), {}});
  }
  {
    Rng rng(14);
    const Matrix a = rng.normal_matrix(12, 5);
    Vector xh(5);
    xh << 0.8, 0.6, 0.4, 0.2, 0.0;  // sums to 2: optimum outside the simplex
    Problem p(SmoothOracle::p_power_residual(a, a * xh, 1.5),
              NonsmoothTerm::simplex(5, 1.0));
    out.push_back(
        {"ppower/simplex pf", p, Vector::Constant(5, 0.2), true, {}, pf_cfg(1.0)});
  }
  {
    Rng rng(15);
    const Matrix a = rng.normal_matrix(20, 6);
    Problem p(SmoothOracle::logistic(a, rng.sign_labels(20)),
              NonsmoothTerm::box(Vector::Constant(6, -1.0),
                                 Vector::Constant(6, 1.0)));
    out.push_back({"logistic/box nm harmonic", p, Vector::Zero(6), false,
                   nm_cfg(0.1, 0.1, PkSchedule::HarmonicToOne), {}});
    out.push_back(
        {"logistic/box pf huge-L", p, Vector::Zero(6), true, {}, pf_cfg(100.0)});
  }
  {
    Rng rng(16);
    const Matrix b = rng.normal_matrix(10, 10);
    Matrix q = b.transpose() * b;
    for (int i = 0; i < 10; ++i) q(i, i) += 0.01;  // condition number ~1e4
    q = ((q + q.transpose()) * 0.5).eval();
    Problem p(SmoothOracle::quadratic(q, rng.normal_vector(10)),
              NonsmoothTerm::elastic_net(10, 0.5, 0.05));
    out.push_back({"elastic-net quad nm", p, Vector::Zero(10), false,
                   nm_cfg(0.5, 0.5, PkSchedule::Constant), {}});
    out.push_back({"elastic-net quad pf", p, Vector::Zero(10), true, {},
                   pf_cfg(1.0)});
  }
  {
    Vector xt(4);
    xt << 0.2, -0.1, 0.15, 0.05;
    Problem p = interior_quad(4, 17, NonsmoothTerm::l2_ball(4, 1.0), xt);
    Vector x0 = Vector::Zero(4);
    x0[0] = 1.0;
    out.push_back({"quad/l2 nm", p, x0, false,
                   nm_cfg(0.5, 0.5, PkSchedule::Constant), {}});
    out.push_back({"quad/l2 pf", p, x0, true, {}, pf_cfg(1.0)});
  }
  return out;
}

// criterion-3 convex fixtures: (problem, name). The reference start point is
// a deterministic feasible point.
struct ConvexFixture {
  std::string name;
  Problem prob;
  Vector x0;
};

std::vector<ConvexFixture> convex_fixtures() {
  std::vector<ConvexFixture> out;
  {
    Rng rng(7);
    const Matrix q = rng.spd_matrix(5);
    const Vector c = rng.normal_vector(5) * 2.0;
    out.push_back({"quadratic/simplex n=5",
                   Problem(SmoothOracle::quadratic(q, c),
                           NonsmoothTerm::simplex(5, 1.0)),
                   Vector::Constant(5, 0.2)});
  }
  {
    Rng rng(99);
    const Matrix a = rng.normal_matrix(15, 10);
    Vector xh = Vector::Zero(10);
    xh[0] = 0.3;
    xh[3] = -0.2;
    Vector x0 = Vector::Zero(10);
    x0[0] = 1.0;
    out.push_back({"ppower(1.5)/l1-ball n=10",
                   Problem(SmoothOracle::p_power_residual(a, a * xh, 1.5),
                           NonsmoothTerm::l1_ball(10, 1.0)),
                   x0});
  }
  {
    Rng rng(55);
    const Matrix q = rng.spd_matrix(10);
    const Vector c = rng.normal_vector(10);
    out.push_back({"elastic-net quadratic n=10",
                   Problem(SmoothOracle::quadratic(q, c),
                           NonsmoothTerm::elastic_net(10, 0.5, 1.0)),
                   Vector::Zero(10)});
  }
  return out;
}

// ---------------------------------------------------------------------------

void criterion_1(Criterion& c) {
  const Problem prob = box_quad_1d();
  const Vector x0 = Vector::Constant(1, 1.0);

  NmConfig nm;
  nm.beta = 0.5;
  nm.sigma = 0.1;
  nm.p = 1.0;
  nm.pk_value = 1.0;

  nm_run(prob, x0, nm);  // warmup
  auto t0 = std::chrono::steady_clock::now();
  const RunResult rn = nm_run(prob, x0, nm);
  const double nm_s = seconds_since(t0);

  c.require(rn.status == Termination::GapBelowTol, "nm: not GapBelowTol");
  c.require(rn.trace.size() == 2, "nm: expected 2 trace rows");
  c.require(rn.trace[0].backtracks == 1, "nm: i_0 != 1");
  c.require(rn.trace[0].step == 0.5, "nm: step != beta^1");
  c.require(rn.trace[0].gap == 2.0, "nm: G(x^0) != 2");
  c.require(rn.x_final[0] == 0.0, "nm: x^1 != 0 bit-exactly");
  c.require(rn.trace[1].f_ref == 0.0, "nm: F_1 != 0 bit-exactly");
  c.require(rn.trace[1].k == 1, "nm: terminated at the wrong iteration");
  c.require(nm_s < 1e-3, "nm run took >= 1 ms");

  PfConfig pf;
  pf.l_init = 1.0;
  pf_run(prob, x0, pf);  // warmup
  t0 = std::chrono::steady_clock::now();
  const RunResult rp = pf_run(prob, x0, pf);
  const double pf_s = seconds_since(t0);

  c.require(rp.status == Termination::GapBelowTol, "pf: not GapBelowTol");
  c.require(rp.trace.size() == 2, "pf: expected 2 trace rows");
  c.require(rp.trace[0].backtracks == 0, "pf: i != 0");
  c.require(rp.trace[0].l_k.has_value() && *rp.trace[0].l_k == 0.5,
            "pf: L_0 != 0.5 bit-exactly");
  c.require(rp.trace[0].step == 0.5, "pf: tau_0 != 0.5 bit-exactly");
  c.require(rp.x_final[0] == 0.0, "pf: x^1 != 0 bit-exactly");
  c.require(pf_s < 1e-3, "pf run took >= 1 ms");
}

void criterion_2(Criterion& c) {
  const auto t0 = std::chrono::steady_clock::now();
  auto combos = invariant_matrix();
  c.require(combos.size() >= 12, "fixture matrix smaller than 12 combos");
  for (auto& combo : combos) {
    RunResult rr = combo.use_pf ? pf_run(combo.prob, combo.x0, combo.pf)
                                : nm_run(combo.prob, combo.x0, combo.nm);
    c.require(rr.trace.size() >= 1001,
              combo.name + ": fewer than 1e3 iterations (" +
                  std::to_string(rr.trace.size()) + " rows)");
    const AuditReport rep =
        combo.use_pf ? audit_replay(combo.prob, combo.x0, rr.trace, combo.pf)
                     : audit_replay(combo.prob, combo.x0, rr.trace, combo.nm);
    if (!rep.all_passed()) {
      std::int64_t row = rep.first_failed_row();
      c.require(false, combo.name + ": audit violation at row " +
                           std::to_string(row));
    }
  }
  c.require(seconds_since(t0) < 60.0, "matrix exceeded the 60 s budget");
  c.note(std::to_string(combos.size()) +
         " (problem, g, algorithm, config) combos, 1201 rows each, replay "
         "audits clean");
}

void criterion_3(Criterion& c) {
  for (const auto& fx : convex_fixtures()) {
    const ReferenceMinimum ref = reference_minimum(fx.prob, fx.x0);

    NmConfig nm;  // defaults: gap_tol 1e-6, max_iters 1e5
    auto t0 = std::chrono::steady_clock::now();
    const RunResult rn = nm_run(fx.prob, fx.x0, nm);
    const double nm_s = seconds_since(t0);
    c.require(rn.status == Termination::GapBelowTol,
              fx.name + " nm: gap did not reach 1e-6 (status " +
                  termination_name(rn.status) + ")");
    c.require(nm_s < 30.0, fx.name + " nm: exceeded 30 s");
    const double nm_excess = rn.trace.back().f_x - ref.f_star;
    c.require(nm_excess <= 1e-6 + 1e-8,
              fx.name + " nm: F - F* = " + std::to_string(nm_excess));

    PfConfig pf;
    t0 = std::chrono::steady_clock::now();
    const RunResult rp = pf_run(fx.prob, fx.x0, pf);
    const double pf_s = seconds_since(t0);
    c.require(rp.status == Termination::GapBelowTol,
              fx.name + " pf: gap did not reach 1e-6 (status " +
                  termination_name(rp.status) + ")");
    c.require(pf_s < 30.0, fx.name + " pf: exceeded 30 s");
    const double pf_excess = rp.trace.back().f_x - ref.f_star;
    c.require(pf_excess <= 1e-6 + 1e-8,
              fx.name + " pf: F - F* = " + std::to_string(pf_excess));

    std::ostringstream os;
    os << fx.name << ": nm " << rn.trace.back().k << " iters, pf "
       << rp.trace.back().k << " iters, F-F* <= " << std::max(nm_excess, pf_excess);
    c.note(os.str());
  }
}

void criterion_4(Criterion& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const Problem prob = well_box_4d();
  const Vector x0 = Vector::Constant(4, 1.0);

  NmConfig nm;  // defaults; beta = 0.5 lands on the stationary point exactly
  nm.gap_tol = 1e-6;
  const RunResult rn = nm_run(prob, x0, nm);
  c.require(rn.trace.back().k <= 100000, "nm: exceeded the iteration budget");
  c.require(min_gap(rn.trace) <= 1e-5,
            "nm: min gap " + std::to_string(min_gap(rn.trace)));
  c.require(audit_replay(prob, x0, rn.trace, nm).all_passed(),
            "nm: per-step invariants violated");

  // The fp-representable gap floor of this profile is ~5.4e-3 (phi' >=
  // 1/ln(1/t_min)); reaching 1e-5 requires landing on the stationary point
  // exactly, so L_{-1} is chosen to make tau_0 = 1/2 in exact dyadic
  // arithmetic: L_{-1} = G(x^0)/8 with ||d^0||^2 = 16.
  const double g0 = frank_wolfe_gap(prob, x0, 0.0).gap;
  PfConfig pf;
  pf.l_init = g0 / 8.0;
  pf.gap_tol = 1e-6;
  const RunResult rp = pf_run(prob, x0, pf);
  c.require(rp.trace.back().k <= 100000, "pf: exceeded the iteration budget");
  c.require(min_gap(rp.trace) <= 1e-5,
            "pf: min gap " + std::to_string(min_gap(rp.trace)));
  c.require(audit_replay(prob, x0, rp.trace, pf).all_passed(),
            "pf: per-step invariants violated");
  c.require(seconds_since(t0) < 60.0, "exceeded the 60 s budget");
  c.note("both solvers reach the non-Hoelder stationary point exactly "
         "(min gap 0); invariants audited");
}

void criterion_5(Criterion& c) {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(505);
  double worst = 0.0;
  for (Index dim : {1, 2, 3}) {
    std::vector<NonsmoothTerm> variants;
    variants.push_back(NonsmoothTerm::simplex(dim, 1.0));
    variants.push_back(NonsmoothTerm::l1_ball(dim, 1.5));
    variants.push_back(NonsmoothTerm::l2_ball(dim, 1.0));
    variants.push_back(NonsmoothTerm::box(rng.uniform_vector(dim, -2.0, -0.1),
                                          rng.uniform_vector(dim, 0.1, 2.0)));
    variants.push_back(NonsmoothTerm::elastic_net(dim, 0.5, 1.0));
    for (const auto& term : variants) {
      for (int trial = 0; trial < 200; ++trial) {
        const Vector cost = rng.uniform_vector(dim, -1.0, 1.0);
        const auto lm = term.lmo(cost);
        const double closed = cost.dot(lm.v) + lm.g_v;
        const double brute = brute_lmo_objective(term, cost);
        worst = std::max(worst, std::abs(brute - closed));
        if (std::abs(brute - closed) > 1e-6) {
          c.require(false, "variant " +
                               std::to_string(static_cast<int>(term.kind())) +
                               " dim " + std::to_string(dim) +
                               ": |closed - brute| = " +
                               std::to_string(std::abs(brute - closed)));
        }
      }
    }
  }
  c.require(seconds_since(t0) < 10.0, "exceeded the 10 s budget");
  std::ostringstream os;
  os << "5 variants x dims {1,2,3} x 200 costs; worst objective deviation "
     << worst;
  c.note(os.str());
}

void criterion_6(Criterion& c) {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(606);

  {
    const auto o = SmoothOracle::quadratic(rng.spd_matrix(5),
                                           rng.normal_vector(5));
    std::vector<Vector> pts;
    for (int i = 0; i < 100; ++i) pts.push_back(rng.normal_vector(5));
    c.require(grad_check(o, pts).all_passed(), "quadratic gradient check");
  }
  {
    const Matrix a = rng.normal_matrix(8, 5);
    const Vector b = rng.normal_vector(8);
    const auto o = SmoothOracle::p_power_residual(a, b, 1.5);
    std::vector<Vector> pts;
    while (pts.size() < 100) {
      const Vector x = rng.normal_vector(5);
      if ((a * x - b).cwiseAbs().minCoeff() >= 1e-2) pts.push_back(x);
    }
    c.require(grad_check(o, pts).all_passed(), "p-power gradient check");
  }
  {
    const Matrix a = rng.normal_matrix(8, 5);
    const auto o = SmoothOracle::logistic(a, rng.sign_labels(8));
    std::vector<Vector> pts;
    for (int i = 0; i < 100; ++i) pts.push_back(rng.normal_vector(5));
    c.require(grad_check(o, pts).all_passed(), "logistic gradient check");
  }
  {
    const double knot = std::exp(-2.0);
    const auto o = SmoothOracle::non_holder_well(3, knot, 1.0);
    std::vector<Vector> pts;
    while (pts.size() < 100) {
      const Vector x = rng.uniform_vector(3, -1.0, 1.0);
      bool ok = true;
      for (Index i = 0; i < 3; ++i) {
        const double a = std::abs(x[i]);
        if (a < 1e-3 || std::abs(a - knot) < 1e-3) ok = false;
      }
      if (ok) pts.push_back(x);
    }
    c.require(grad_check(o, pts).all_passed(), "well gradient check");
  }
  c.require(seconds_since(t0) < 5.0, "exceeded the 5 s budget");
  c.note("central differences at 100 random points per oracle variant");
}

void criterion_7(Criterion& c) {
  // (a) tampered trace fails the audit at the tampered row; the interior
  // optimum keeps this instance zig-zagging, so the budget is exhausted
  Vector xt(5);
  xt << 0.3, 0.25, 0.2, 0.15, 0.1;
  const Problem prob = interior_quad(5, 11, NonsmoothTerm::simplex(5, 1.0), xt);
  const Vector x0 = Vector::Constant(5, 0.2);
  NmConfig nm;
  nm.gap_tol = 0.0;
  nm.max_iters = 100;
  const RunResult rr = nm_run(prob, x0, nm);
  c.require(rr.trace.size() == 101, "tamper fixture ended early");
  auto tampered = rr.trace;
  const std::int64_t bad_row = 41;
  tampered[41].f_x += 1e-3;
  const AuditReport rep = audit_replay(prob, x0, tampered, nm);
  c.require(!rep.all_passed(), "tampered trace passed the audit");
  c.require(rep.first_failed_row() == bad_row,
            "audit flagged row " + std::to_string(rep.first_failed_row()) +
                " instead of " + std::to_string(bad_row));

  // ... and through the CLI against the trace file (exit 4)
  const fs::path dir = fs::path(g_out_dir) / "crit7";
  fs::create_directories(dir);
  const std::string cfg = g_configs_dir + "/quad_simplex_nm.yaml";
  c.require(run_cli("solve " + cfg + " --out-dir " + dir.string() +
                    " --quiet") == 0,
            "CLI solve of the fixture config failed");
  const fs::path trace_path = dir / "quad_simplex_nm.trace.csv";
  {
    auto trace = read_trace_csv(trace_path.string());
    trace[1].f_x += 1e-3;
    write_trace_csv(trace_path.string(), trace);
  }
  c.require(run_cli("audit " + trace_path.string() + " " + cfg + " --quiet") ==
                4,
            "CLI audit of the tampered trace did not exit 4");

  // (b) l1-only elastic net rejected with the supercoerciveness message
  bool rejected = false;
  try {
    NonsmoothTerm::elastic_net(3, 1.0, 0.0);
  } catch (const Error& e) {
    rejected = std::string(e.what()).find("supercoercive") != std::string::npos;
  }
  c.require(rejected, "lambda2 = 0 not rejected with the supercoercive message");

  // (c) infeasible start point
  bool infeasible = false;
  try {
    nm_run(box_quad_1d(), Vector::Constant(1, 2.0), NmConfig{});
  } catch (const Error& e) {
    infeasible = e.code() == ErrorCode::StartPointInfeasible;
  }
  c.require(infeasible, "infeasible x0 did not raise StartPointInfeasible");

  // ... and exit code 3 through the CLI
  const fs::path bad_cfg = dir / "infeasible.yaml";
  {
    std::ofstream out(bad_cfg);
    out << "name: infeasible\ndim: 1\n"
           "smooth: {kind: quadratic, matrix: [[1.0]], vector: [0.0]}\n"
           "nonsmooth: {kind: box, lower: [-1.0], upper: [1.0]}\n"
           "x0: [2.0]\nalgorithm: nm\noutput: infeasible\n";
  }
  c.require(run_cli("solve " + bad_cfg.string() + " --out-dir " +
                    dir.string() + " --quiet") == 3,
            "CLI did not exit 3 on an infeasible start point");
}

void criterion_8(Criterion& c) {
  const fs::path dir_a = fs::path(g_out_dir) / "det_a";
  const fs::path dir_b = fs::path(g_out_dir) / "det_b";
  fs::create_directories(dir_a);
  fs::create_directories(dir_b);

  for (const char* cfg :
       {"quad_simplex_nm.yaml", "quad_simplex_pf.yaml", "ppower_l1_pf.yaml"}) {
    const std::string path = g_configs_dir + "/" + cfg;
    c.require(run_cli("solve " + path + " --out-dir " + dir_a.string() +
                      " --quiet") == 0,
              std::string(cfg) + ": first run failed");
    c.require(run_cli("solve " + path + " --out-dir " + dir_b.string() +
                      " --quiet") == 0,
              std::string(cfg) + ": second run failed");
    const std::string base = fs::path(cfg).stem().string();
    const std::string a = slurp(dir_a / (base + ".trace.csv"));
    const std::string b = slurp(dir_b / (base + ".trace.csv"));
    c.require(!a.empty() && a == b,
              std::string(cfg) + ": trace files differ between runs");
    const std::string pa = slurp(dir_a / (base + ".plot.csv"));
    const std::string pb = slurp(dir_b / (base + ".plot.csv"));
    c.require(!pa.empty() && pa == pb,
              std::string(cfg) + ": plot files differ between runs");
  }
  c.note("repeated cmd_solve runs are byte-identical (trace and plot files)");
}

void criterion_9(Criterion& c) {
  // quadratic zig-zag (nu = 1) and p-power zig-zag (nu = 0.5), 5000 iterations
  Matrix qi = Matrix::Identity(3, 3);
  Vector qv(3);
  qv << -0.5, -0.3, -0.2;  // interior optimum keeps the gap decaying
  const Problem quad(SmoothOracle::quadratic(qi, qv),
                     NonsmoothTerm::simplex(3, 1.0));
  NmConfig nm;
  nm.gap_tol = 0.0;
  nm.max_iters = 5000;
  Vector e1 = Vector::Zero(3);
  e1[0] = 1.0;
  const RunResult rq = nm_run(quad, e1, nm);
  const RateReport quad_rate =
      rate_slope(rq.trace, quad.smooth().holder_exponent());

  Rng rng(13);
  const Matrix a = rng.normal_matrix(15, 10);
  const Vector xh = rng.uniform_vector(10, 0.2, 0.5);
  const Problem pp(SmoothOracle::p_power_residual(a, a * xh, 1.5),
                   NonsmoothTerm::l1_ball(10, 1.0));
  Vector x0 = Vector::Zero(10);
  x0[0] = 1.0;
  const RunResult rp = nm_run(pp, x0, nm);
  const RateReport pp_rate = rate_slope(rp.trace, pp.smooth().holder_exponent());

  c.require(quad_rate.points_used >= 100, "quadratic rate fit has no points");
  c.require(quad_rate.theoretical_exponent.has_value() &&
                std::abs(*quad_rate.theoretical_exponent + 0.5) < 1e-12,
            "quadratic theoretical exponent is not -1/2");
  c.require(pp_rate.points_used >= 100, "p-power rate fit has no points");
  c.require(pp_rate.theoretical_exponent.has_value() &&
                std::abs(*pp_rate.theoretical_exponent + 1.0 / 3.0) < 1e-12,
            "p-power theoretical exponent is not -1/3");

  const fs::path report = fs::path(g_out_dir) / "rate_report.txt";
  {
    std::ofstream out(report);
    out << "quadratic/simplex (nu=1): " << quad_rate.to_text() << "\n"
        << "ppower-1.5/l1-ball (nu=0.5): " << pp_rate.to_text() << "\n";
  }
  c.require(fs::exists(report), "rate report not written");
  std::ostringstream os;
  os << "slopes: quadratic " << quad_rate.slope << " (theory -0.5), p-power "
     << pp_rate.slope << " (theory -0.333); no tolerance enforced";
  c.note(os.str());
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 4) {
    std::fprintf(stderr, "usage: %s <configs_dir> <cli_path> <out_dir>\n",
                 argv[0]);
    return 2;
  }
  g_configs_dir = argv[1];
  g_cli = argv[2];
  g_out_dir = argv[3];
  fs::create_directories(g_out_dir);

  run_criterion(1, "1-D hand-trace fixture, bit-exact, < 1 ms", criterion_1);
  run_criterion(2, "invariant audits over the fixture matrix", criterion_2);
  run_criterion(3, "convex optimality against the reference minimizer",
                criterion_3);
  run_criterion(4, "non-Hoelder convergence on the well-over-box fixture",
                criterion_4);
  run_criterion(5, "LMO brute-force equivalence", criterion_5);
  run_criterion(6, "finite-difference gradient checks", criterion_6);
  run_criterion(7, "negative controls", criterion_7);
  run_criterion(8, "byte-identical traces for identical config and seed",
                criterion_8);
  run_criterion(9, "informational rate-slope report", criterion_9);

  if (g_failures == 0) {
    std::printf("acceptance: all 9 criteria passed\n");
  } else {
    std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
  }
  return g_failures == 0 ? 0 : 1;
}
