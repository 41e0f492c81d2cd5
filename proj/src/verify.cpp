#include "gcg/verify.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "gcg/gap.hpp"
#include "gcg/solver_nonmonotone.hpp"
#include "gcg/solver_parameter_free.hpp"

namespace gcg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Accumulates the worst violation of `value <= bound + tol` style checks.
class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  void expect_le(double value, double bound, double tol,
                 const std::string& location) {
    const double violation = value - bound;
    if (violation > tol && violation > result_.worst) {
      result_.passed = false;
      result_.worst = violation;
      result_.location = location;
    }
  }

  void expect_close(double value, double target, double rel_tol,
                    const std::string& location) {
    const double err =
        std::abs(value - target) / std::max(1.0, std::abs(target));
    if (err > rel_tol && err > result_.worst) {
      result_.passed = false;
      result_.worst = err;
      result_.location = location;
    }
  }

  /// Pure relative comparison; exact match required when the target is zero.
  /// Suits steps and curvature estimates, whose magnitudes span many decades.
  void expect_rel(double value, double target, double rel_tol,
                  const std::string& location) {
    const double err = target == 0.0
                           ? (value == 0.0 ? 0.0 : std::abs(value))
                           : std::abs(value - target) / std::abs(target);
    if (err > rel_tol && err > result_.worst) {
      result_.passed = false;
      result_.worst = err;
      result_.location = location;
    }
  }

  void fail(double magnitude, const std::string& location) {
    if (!result_.passed && magnitude <= result_.worst) return;
    result_.passed = false;
    result_.worst = magnitude;
    result_.location = location;
  }

  CheckResult take() { return std::move(result_); }

 private:
  CheckResult result_;
};

std::string row_loc(std::int64_t k) { return "row " + std::to_string(k); }

double slack(double scale) { return 1e-10 * std::max(1.0, std::abs(scale)); }

}  // namespace

int AuditReport::passed_count() const {
  int n = 0;
  for (const auto& c : checks) n += c.passed ? 1 : 0;
  return n;
}

std::int64_t AuditReport::first_failed_row() const {
  std::int64_t best = -1;
  for (const auto& c : checks) {
    if (c.passed) continue;
    if (c.location.rfind("row ", 0) == 0) {
      const std::int64_t k = std::stoll(c.location.substr(4));
      if (best < 0 || k < best) best = k;
    }
  }
  return best;
}

std::string AuditReport::to_text() const {
  std::ostringstream os;
  os << "audit: " << passed_count() << "/" << total() << " checks passed\n";
  for (const auto& c : checks) {
    os << (c.passed ? "  [pass] " : "  [FAIL] ") << c.name;
    if (!c.passed)
      os << "  worst violation " << c.worst << " at " << c.location;
    os << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// gradient check
// ---------------------------------------------------------------------------

AuditReport grad_check(const SmoothOracle& oracle,
                       const std::vector<Vector>& points, double h,
                       double tol) {
  Check chk("central-difference gradient match");
  for (std::size_t p = 0; p < points.size(); ++p) {
    const Vector& x = points[p];
    const Vector g = oracle.gradient(x);
    Vector e = Vector::Zero(x.size());
    for (Index i = 0; i < x.size(); ++i) {
      e[i] = h;
      const double fd =
          (oracle.value(x + e) - oracle.value(x - e)) / (2.0 * h);
      e[i] = 0.0;
      const double err = std::abs(fd - g[i]) / std::max(1.0, std::abs(g[i]));
      if (err > tol) {
        chk.fail(err, "point " + std::to_string(p) + " coordinate " +
                          std::to_string(i));
      }
    }
  }
  AuditReport rep;
  rep.checks.push_back(chk.take());
  return rep;
}

// ---------------------------------------------------------------------------
// brute-force subproblem / gap oracles
// ---------------------------------------------------------------------------

namespace {

double lin_obj(const Vector& c, const Vector& v, double gv) {
  return c.dot(v) + gv;
}

/// min over all corners of the box (exact for a linear objective).
double box_corner_min(const Vector& c, const Vector& lo, const Vector& hi) {
  const Index n = c.size();
  double best = kInf;
  for (int mask = 0; mask < (1 << n); ++mask) {
    Vector v(n);
    for (Index i = 0; i < n; ++i) v[i] = (mask >> i) & 1 ? hi[i] : lo[i];
    best = std::min(best, c.dot(v));
  }
  return best;
}

/// 1-D grid minimization with nested refinement around the incumbent.
template <typename F>
double refine_min_1d(F&& objective, double lo, double hi, int points,
                     int rounds) {
  double best = kInf, best_t = lo;
  for (int round = 0; round < rounds; ++round) {
    const double span = hi - lo;
    for (int i = 0; i < points; ++i) {
      const double t = lo + span * static_cast<double>(i) / (points - 1);
      const double val = objective(t);
      if (val < best) {
        best = val;
        best_t = t;
      }
    }
    const double cell = span / (points - 1);
    lo = best_t - 2.0 * cell;
    hi = best_t + 2.0 * cell;
  }
  return best;
}

double sphere_obj(const Vector& c, double r, double theta, double phi3,
                  int dim) {
  if (dim == 2) {
    return r * (c[0] * std::cos(theta) + c[1] * std::sin(theta));
  }
  const double st = std::sin(theta);
  return r * (c[0] * st * std::cos(phi3) + c[1] * st * std::sin(phi3) +
              c[2] * std::cos(theta));
}

double l2_sphere_min(const Vector& c, double r, int grid) {
  const Index n = c.size();
  if (n == 1) return std::min(c[0] * r, -c[0] * r);
  if (n == 2) {
    // single angular grid of `grid` points, as fine as requested
    double best = kInf;
    for (int i = 0; i < grid; ++i) {
      const double theta = 2.0 * M_PI * static_cast<double>(i) / grid;
      best = std::min(best, sphere_obj(c, r, theta, 0.0, 2));
    }
    return best;
  }
  // dim 3: coarse (theta, phi) grid plus nested refinement around the best
  // cell; a single 1e4-point grid is too coarse for 1e-6 objective accuracy.
  int nt = 64, np = 128;
  double t_lo = 0.0, t_hi = M_PI, p_lo = 0.0, p_hi = 2.0 * M_PI;
  double best = kInf, best_t = 0.0, best_p = 0.0;
  for (int round = 0; round < 5; ++round) {
    for (int i = 0; i < nt; ++i) {
      const double theta = t_lo + (t_hi - t_lo) * static_cast<double>(i) / (nt - 1);
      for (int j = 0; j < np; ++j) {
        const double phi = p_lo + (p_hi - p_lo) * static_cast<double>(j) / (np - 1);
        const double val = sphere_obj(c, r, theta, phi, 3);
        if (val < best) {
          best = val;
          best_t = theta;
          best_p = phi;
        }
      }
    }
    const double ct = (t_hi - t_lo) / (nt - 1), cp = (p_hi - p_lo) / (np - 1);
    t_lo = best_t - 2.0 * ct;
    t_hi = best_t + 2.0 * ct;
    p_lo = best_p - 2.0 * cp;
    p_hi = best_p + 2.0 * cp;
    nt = np = 33;
  }
  return best;
}

}  // namespace

double brute_lmo_objective(const NonsmoothTerm& term, const Vector& cost,
                           int grid) {
  require_same_dim(cost.size(), term.dim(), "brute_lmo_objective");
  const Index n = term.dim();
  if (n > 3)
    raise(ErrorCode::DimensionTooLarge,
          "brute_lmo_objective: enumeration supports dim <= 3");

  switch (term.kind()) {
    case NonsmoothTerm::Kind::Simplex: {
      double best = kInf;
      for (Index j = 0; j < n; ++j)
        best = std::min(best, cost[j] * term.radius());
      return best;
    }
    case NonsmoothTerm::Kind::L1Ball: {
      double best = kInf;
      for (Index j = 0; j < n; ++j) {
        best = std::min(best, cost[j] * term.radius());
        best = std::min(best, -cost[j] * term.radius());
      }
      return best;
    }
    case NonsmoothTerm::Kind::Box:
      return box_corner_min(cost, term.lower(), term.upper());
    case NonsmoothTerm::Kind::L2Ball:
      return l2_sphere_min(cost, term.radius(), grid);
    case NonsmoothTerm::Kind::ElasticNet: {
      // separable: per-coordinate grid over the interval that provably
      // contains the minimizer
      const double l1 = term.lambda1(), l2 = term.lambda2();
      double total = 0.0;
      for (Index i = 0; i < n; ++i) {
        const double radius = (std::abs(cost[i]) + l1) / l2;
        const double ci = cost[i];
        auto obj = [&](double t) {
          return ci * t + l1 * std::abs(t) + 0.5 * l2 * t * t;
        };
        total += refine_min_1d(obj, -radius, radius, std::max(grid / 5, 501), 3);
      }
      return total;
    }
  }
  raise(ErrorCode::InvalidArgument, "brute_lmo_objective: unknown variant");
}

double brute_gap(const Problem& prob, const Vector& x, int grid) {
  if (prob.dim() > 3)
    raise(ErrorCode::DimensionTooLarge, "brute_gap: supports dim <= 3");
  const double g_x = prob.nonsmooth().value(x);
  if (!std::isfinite(g_x))
    raise(ErrorCode::InfeasibleQueryPoint, "brute_gap: x outside dom g");
  const Vector c = prob.smooth().gradient(x);
  const double subproblem_min = brute_lmo_objective(prob.nonsmooth(), c, grid);
  return c.dot(x) + g_x - subproblem_min;
}

// ---------------------------------------------------------------------------
// reference minimizer (proximal subgradient, diminishing steps)
// ---------------------------------------------------------------------------

namespace {

/// Euclidean projection onto the simplex {v >= 0, sum v = r} (sort-based).
Vector project_simplex(const Vector& z, double r) {
  const Index n = z.size();
  std::vector<double> u(z.data(), z.data() + n);
  std::sort(u.begin(), u.end(), std::greater<double>());
  double cum = 0.0, theta = 0.0;
  for (Index j = 0; j < n; ++j) {
    cum += u[j];
    const double t = (cum - r) / static_cast<double>(j + 1);
    if (u[j] - t > 0.0) theta = t;
  }
  Vector out(n);
  for (Index i = 0; i < n; ++i) out[i] = std::max(z[i] - theta, 0.0);
  return out;
}

/// Euclidean projection onto the l1 ball of the given radius.
Vector project_l1_ball(const Vector& z, double r) {
  if (z.cwiseAbs().sum() <= r) return z;
  const Vector w = project_simplex(z.cwiseAbs(), r);
  Vector out(z.size());
  for (Index i = 0; i < z.size(); ++i)
    out[i] = (z[i] >= 0.0 ? 1.0 : -1.0) * w[i];
  return out;
}

void require_convex_smooth(const SmoothOracle& f) {
  switch (f.kind()) {
    case SmoothOracle::Kind::NonHolderWell:
      raise(ErrorCode::NonConvexFixture,
            "reference_minimum: NonHolderWell is not convex");
    case SmoothOracle::Kind::Quadratic: {
      Eigen::SelfAdjointEigenSolver<Matrix> es(f.matrix(),
                                               Eigen::EigenvaluesOnly);
      const double lo = es.eigenvalues().minCoeff();
      const double hi = es.eigenvalues().cwiseAbs().maxCoeff();
      if (lo < -1e-10 * std::max(1.0, hi))
        raise(ErrorCode::NonConvexFixture,
              "reference_minimum: quadratic term is not positive semidefinite");
      return;
    }
    default:
      return;  // PPowerResidual and Logistic are convex by construction
  }
}

}  // namespace

ReferenceMinimum reference_minimum(const Problem& prob, const Vector& x0) {
  require_convex_smooth(prob.smooth());
  const NonsmoothTerm& g = prob.nonsmooth();

  Vector x = x0;
  if (!std::isfinite(g.value(x))) {
    // start from a feasible point; the scheme is projection-based anyway
    x = g.lmo(Vector::Zero(prob.dim())).v;
  }

  ReferenceMinimum best;
  best.x_star = x;
  best.f_star = prob.objective(x);

  constexpr std::int64_t kMaxIters = 1000000;
  for (std::int64_t k = 0; k < kMaxIters; ++k) {
    const double t = 1.0 / std::sqrt(static_cast<double>(k + 1));
    const Vector z = x - t * prob.smooth().gradient(x);
    Vector next;
    switch (g.kind()) {
      case NonsmoothTerm::Kind::Simplex:
        next = project_simplex(z, g.radius());
        break;
      case NonsmoothTerm::Kind::L1Ball:
        next = project_l1_ball(z, g.radius());
        break;
      case NonsmoothTerm::Kind::L2Ball: {
        const double n2 = norm(z);
        next = n2 <= g.radius() ? z : Vector((g.radius() / n2) * z);
        break;
      }
      case NonsmoothTerm::Kind::Box:
        next = z.cwiseMax(g.lower()).cwiseMin(g.upper());
        break;
      case NonsmoothTerm::Kind::ElasticNet: {
        // prox of t*(l1 |.|_1 + l2/2 |.|^2): soft threshold then shrink
        next.resize(z.size());
        const double thr = t * g.lambda1(), shrink = 1.0 + t * g.lambda2();
        for (Index i = 0; i < z.size(); ++i) {
          const double soft = std::max(std::abs(z[i]) - thr, 0.0);
          next[i] = (z[i] >= 0.0 ? 1.0 : -1.0) * soft / shrink;
        }
        break;
      }
    }

    const double change = norm(next - x);
    x = std::move(next);
    const double fx = prob.objective(x);
    best.iterations = k + 1;
    if (fx < best.f_star) {
      best.f_star = fx;
      best.x_star = x;
    }
    if (change <= 1e-12) break;
  }
  return best;
}

// ---------------------------------------------------------------------------
// trace audits
// ---------------------------------------------------------------------------

namespace {

bool is_step_row(const IterateRecord& r) { return r.step > 0.0; }

}  // namespace

AuditReport audit_trace(const std::vector<IterateRecord>& trace,
                        const NmConfig& cfg) {
  cfg.validate();
  Check decrement("nm decrement: F_{k+1} <= F_k - p*sigma*beta^i*G");
  Check domination("nm reference domination: F(x^k) <= F_k");
  Check ref_monotone("nm reference monotonicity: F_{k+1} <= F_k");
  Check ref_recursion("nm reference recursion matches the p_k schedule");
  Check step_shape("nm step equals beta^backtracks");
  Check level_set("nm level set: F(x^k) <= F(x^0)");
  Check gap_sign("gap nonnegative");
  Check step_range("step lies in [0,1]");
  Check schema("nm rows carry no curvature column");

  const double f0 = trace.empty() ? 0.0 : trace.front().f_x;
  for (std::size_t j = 0; j < trace.size(); ++j) {
    const IterateRecord& r = trace[j];
    const std::string loc = row_loc(r.k);
    gap_sign.expect_le(-r.gap, 0.0, 0.0, loc);
    step_range.expect_le(r.step, 1.0, 0.0, loc);
    step_range.expect_le(-r.step, 0.0, 0.0, loc);
    domination.expect_le(r.f_x, r.f_ref, slack(r.f_ref) * 1e-2, loc);
    level_set.expect_le(r.f_x, f0, slack(f0), loc);
    if (r.l_k.has_value()) schema.fail(1.0, loc);

    if (!is_step_row(r)) continue;
    double expected_step = 1.0;
    for (int i = 0; i < r.backtracks; ++i) expected_step *= cfg.beta;
    step_shape.expect_rel(r.step, expected_step, 1e-12, loc);

    if (j + 1 < trace.size()) {
      // transition checks blame the destination row, where the new values live
      const IterateRecord& nxt = trace[j + 1];
      const std::string nloc = row_loc(nxt.k);
      decrement.expect_le(nxt.f_ref,
                          r.f_ref - cfg.p * cfg.sigma * r.step * r.gap,
                          slack(r.f_ref), nloc);
      ref_monotone.expect_le(nxt.f_ref, r.f_ref, slack(r.f_ref), nloc);
      const double p_next = cfg.next_p(r.k);
      ref_recursion.expect_close(
          nxt.f_ref, p_next * nxt.f_x + (1.0 - p_next) * r.f_ref, 1e-12, nloc);
    }
  }

  AuditReport rep;
  rep.checks.push_back(decrement.take());
  rep.checks.push_back(domination.take());
  rep.checks.push_back(ref_monotone.take());
  rep.checks.push_back(ref_recursion.take());
  rep.checks.push_back(step_shape.take());
  rep.checks.push_back(level_set.take());
  rep.checks.push_back(gap_sign.take());
  rep.checks.push_back(step_range.take());
  rep.checks.push_back(schema.take());
  return rep;
}

AuditReport audit_trace(const std::vector<IterateRecord>& trace,
                        const PfConfig& cfg) {
  cfg.validate();
  Check decrement("pf decrement: F(x^{k+1}) <= F(x^k) - tau/4*G");
  Check monotone("pf monotonicity: F(x^k) nonincreasing");
  Check schedule("pf curvature schedule: L_k = 2^{i-1} L_{k-1}");
  Check ref_identity("pf reference equals objective");
  Check level_set("pf level set: F(x^k) <= F(x^0)");
  Check gap_sign("gap nonnegative");
  Check step_range("step lies in [0,1]");

  const double f0 = trace.empty() ? 0.0 : trace.front().f_x;
  double l_prev = cfg.l_init;
  for (std::size_t j = 0; j < trace.size(); ++j) {
    const IterateRecord& r = trace[j];
    const std::string loc = row_loc(r.k);
    gap_sign.expect_le(-r.gap, 0.0, 0.0, loc);
    step_range.expect_le(r.step, 1.0, 0.0, loc);
    step_range.expect_le(-r.step, 0.0, 0.0, loc);
    ref_identity.expect_close(r.f_ref, r.f_x, 0.0, loc);
    level_set.expect_le(r.f_x, f0, slack(f0), loc);

    if (!is_step_row(r)) continue;
    if (!r.l_k.has_value()) {
      schedule.fail(1.0, loc);
      continue;
    }
    schedule.expect_rel(*r.l_k, std::ldexp(l_prev, r.backtracks - 1), 1e-12,
                        loc);
    l_prev = *r.l_k;

    if (j + 1 < trace.size()) {
      const IterateRecord& nxt = trace[j + 1];
      const std::string nloc = row_loc(nxt.k);
      decrement.expect_le(nxt.f_x, r.f_x - 0.25 * r.step * r.gap,
                          slack(r.f_x), nloc);
      monotone.expect_le(nxt.f_x, r.f_x, slack(r.f_x), nloc);
    }
  }

  AuditReport rep;
  rep.checks.push_back(decrement.take());
  rep.checks.push_back(monotone.take());
  rep.checks.push_back(schedule.take());
  rep.checks.push_back(ref_identity.take());
  rep.checks.push_back(level_set.take());
  rep.checks.push_back(gap_sign.take());
  rep.checks.push_back(step_range.take());
  return rep;
}

namespace {

void compare_common(Check& chk, const IterateRecord& rec,
                    const IterateRecord& replayed) {
  const std::string loc = row_loc(rec.k);
  chk.expect_close(rec.f_x, replayed.f_x, 1e-12, loc);
  chk.expect_close(rec.f_ref, replayed.f_ref, 1e-12, loc);
  chk.expect_close(rec.gap, replayed.gap, 1e-12, loc);
  chk.expect_rel(rec.step, replayed.step, 1e-12, loc);
  if (rec.backtracks != replayed.backtracks) chk.fail(1.0, loc);
}

}  // namespace

AuditReport audit_replay(const Problem& prob, const Vector& x0,
                         const std::vector<IterateRecord>& trace,
                         const NmConfig& cfg) {
  AuditReport rep = audit_trace(trace, cfg);
  Check replay("nm replay: recorded rows match a deterministic re-run");
  Check gap_match("nm replay: recorded gap matches recomputation");

  RunResult rerun = nm_run(prob, x0, cfg);
  if (rerun.trace.size() != trace.size()) {
    replay.fail(static_cast<double>(rerun.trace.size() > trace.size()
                                        ? rerun.trace.size() - trace.size()
                                        : trace.size() - rerun.trace.size()),
                row_loc(static_cast<std::int64_t>(
                    std::min(rerun.trace.size(), trace.size()))));
  }
  const std::size_t rows = std::min(rerun.trace.size(), trace.size());
  for (std::size_t j = 0; j < rows; ++j) {
    compare_common(replay, trace[j], rerun.trace[j]);
    gap_match.expect_close(trace[j].gap, rerun.trace[j].gap, 1e-12,
                           row_loc(trace[j].k));
  }
  rep.checks.push_back(replay.take());
  rep.checks.push_back(gap_match.take());
  return rep;
}

AuditReport audit_replay(const Problem& prob, const Vector& x0,
                         const std::vector<IterateRecord>& trace,
                         const PfConfig& cfg) {
  AuditReport rep = audit_trace(trace, cfg);
  Check replay("pf replay: recorded rows match a deterministic re-run");
  Check clamp("pf replay: tau equals min(1, G/(2 L ||d||^2))");
  Check clamp_bound("pf replay: 2 L tau ||d||^2 <= G");

  // step the solver manually so d^k is available for the clamp recomputation
  cfg.validate();
  bool replay_ok = true;
  PfState st;
  try {
    st = pf_init(prob, x0, cfg);
  } catch (const Error&) {
    replay.fail(1.0, row_loc(0));
    replay_ok = false;
  }
  std::size_t j = 0;
  while (replay_ok && j < trace.size()) {
    GapResult gr;
    try {
      gr = frank_wolfe_gap(prob, st.x, st.g_x);
    } catch (const Error&) {
      replay.fail(1.0, row_loc(trace[j].k));
      break;
    }
    std::optional<Termination> term;
    try {
      term = pf_step(prob, st, cfg);
    } catch (const Error&) {
      term = Termination::LinesearchStalled;
    }
    if (st.trace.size() != j + 1) {
      replay.fail(1.0, row_loc(trace[j].k));
      break;
    }
    const IterateRecord& replayed = st.trace[j];
    compare_common(replay, trace[j], replayed);
    if (trace[j].l_k.has_value() != replayed.l_k.has_value()) {
      replay.fail(1.0, row_loc(trace[j].k));
    } else if (trace[j].l_k.has_value()) {
      replay.expect_rel(*trace[j].l_k, *replayed.l_k, 1e-12,
                        row_loc(trace[j].k));
    }
    if (trace[j].step > 0.0 && trace[j].l_k.has_value()) {
      const double d_norm2 = inner(gr.d, gr.d);
      const double tau_expected =
          std::min(1.0, trace[j].gap / (2.0 * *trace[j].l_k * d_norm2));
      clamp.expect_rel(trace[j].step, tau_expected, 1e-12,
                       row_loc(trace[j].k));
      clamp_bound.expect_le(2.0 * *trace[j].l_k * trace[j].step * d_norm2,
                            trace[j].gap, slack(trace[j].gap),
                            row_loc(trace[j].k));
    }
    ++j;
    if (term) {
      if (j != trace.size()) replay.fail(1.0, row_loc(trace[j - 1].k));
      break;
    }
  }

  rep.checks.push_back(replay.take());
  rep.checks.push_back(clamp.take());
  rep.checks.push_back(clamp_bound.take());
  return rep;
}

// ---------------------------------------------------------------------------
// rate slope
// ---------------------------------------------------------------------------

std::string RateReport::to_text() const {
  std::ostringstream os;
  os << "rate_slope: fitted slope of log(min-gap) vs log(k) over the final "
        "decade = "
     << slope << " (" << points_used << " points)";
  if (theoretical_exponent) {
    os << "; theoretical exponent -nu/(1+nu) = " << *theoretical_exponent;
  } else {
    os << "; no Hoelder exponent applies (no rate is guaranteed)";
  }
  os << ". Informational only: constants are unknown at desk scale.";
  return os.str();
}

RateReport rate_slope(const std::vector<IterateRecord>& trace,
                      std::optional<double> holder_exponent) {
  if (trace.size() < 1000)
    raise(ErrorCode::InsufficientTrace,
          "rate_slope: needs at least 1000 trace rows, got " +
              std::to_string(trace.size()));

  // running min of the gap
  std::vector<double> min_gap(trace.size());
  double running = kInf;
  for (std::size_t j = 0; j < trace.size(); ++j) {
    running = std::min(running, trace[j].gap);
    min_gap[j] = running;
  }

  const std::size_t k_max = trace.size() - 1;
  const std::size_t k_lo = std::max<std::size_t>(1, k_max / 10);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::int64_t n = 0;
  for (std::size_t k = k_lo; k <= k_max; ++k) {
    if (!(min_gap[k] > 0.0)) break;  // log undefined past an exact hit
    const double lx = std::log(static_cast<double>(k));
    const double ly = std::log(min_gap[k]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }

  RateReport rep;
  rep.points_used = n;
  if (n >= 2) {
    const double denom = n * sxx - sx * sx;
    rep.slope = denom != 0.0 ? (n * sxy - sx * sy) / denom : 0.0;
    rep.intercept = (sy - rep.slope * sx) / n;
  }
  if (holder_exponent && *holder_exponent > 0.0)
    rep.theoretical_exponent = -*holder_exponent / (1.0 + *holder_exponent);
  return rep;
}

}  // namespace gcg
