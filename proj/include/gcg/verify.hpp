#pragma once

#include <string>

#include "gcg/problem.hpp"
#include "gcg/types.hpp"

namespace gcg {

struct CheckResult {
  std::string name;
  bool passed = true;
  double worst = 0.0;    // magnitude of the worst violation seen
  std::string location;  // iterate index or probe point of the worst violation
};

struct AuditReport {
  std::vector<CheckResult> checks;

  int total() const { return static_cast<int>(checks.size()); }
  int passed_count() const;
  bool all_passed() const { return passed_count() == total(); }
  /// Smallest trace row index carried by a failed check, -1 if none applies.
  std::int64_t first_failed_row() const;
  std::string to_text() const;
};

/// Central-difference gradient validation: per coordinate,
/// |fd - grad_i| <= tol * max(1, |grad_i|) with fd = (f(x+h e_i)-f(x-h e_i))/2h.
/// Failures are report entries, never exceptions.
AuditReport grad_check(const SmoothOracle& oracle,
                       const std::vector<Vector>& points, double h = 1e-6,
                       double tol = 1e-4);

/// Enumerated objective of the linear subproblem min_v <c,v> + g(v), never
/// consulting the closed-form LMO: vertices for polytopes, angular grids with
/// nested refinement for the l2 ball, per-coordinate grids for the elastic
/// net. dim <= 3 only. Always >= the true minimum.
double brute_lmo_objective(const NonsmoothTerm& term, const Vector& cost,
                           int grid = 10000);

/// Frank-Wolfe gap by enumeration: <c,x> + g(x) - brute_lmo_objective.
/// Lower-bounds the true gap; ties it to 1e-6 when the enumeration contains
/// the exact minimizer (polytope vertices do).
double brute_gap(const Problem& prob, const Vector& x, int grid = 10000);

struct ReferenceMinimum {
  double f_star = 0.0;
  Vector x_star;
  std::int64_t iterations = 0;
};

/// Proximal subgradient reference minimizer with diminishing steps 1/sqrt(k+1),
/// run for up to 1e6 iterations or until the iterate stops moving (1e-12).
/// Requires a convex smooth part; NonHolderWell raises NonConvexFixture.
/// Returns the best objective value seen (an upper bound on F*).
ReferenceMinimum reference_minimum(const Problem& prob, const Vector& x0);

/// Row-only trace audits: every per-row invariant that is recomputable from
/// the recorded fields alone (decrement, reference domination, monotone
/// reference, level set, step shape, curvature schedule).
AuditReport audit_trace(const std::vector<IterateRecord>& trace,
                        const NmConfig& cfg);
AuditReport audit_trace(const std::vector<IterateRecord>& trace,
                        const PfConfig& cfg);

/// Replay audits: deterministically re-runs the solver from (prob, x0) and
/// cross-checks every recorded field, the gap, and the tau clamp
/// tau = min(1, G/(2 L ||d||^2)) against recomputed quantities.
AuditReport audit_replay(const Problem& prob, const Vector& x0,
                         const std::vector<IterateRecord>& trace,
                         const NmConfig& cfg);
AuditReport audit_replay(const Problem& prob, const Vector& x0,
                         const std::vector<IterateRecord>& trace,
                         const PfConfig& cfg);

struct RateReport {
  double slope = 0.0;      // least-squares slope of log(min-gap) vs log(k)
  double intercept = 0.0;
  std::int64_t points_used = 0;
  /// -nu/(1+nu) when the Hoelder exponent nu is known; informational only.
  std::optional<double> theoretical_exponent;
  std::string to_text() const;
};

/// Qualitative convergence-rate estimate over the final decade of iterations.
/// Raises InsufficientTrace for traces shorter than 1000 rows.
RateReport rate_slope(const std::vector<IterateRecord>& trace,
                      std::optional<double> holder_exponent);

}  // namespace gcg
