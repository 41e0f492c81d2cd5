#pragma once

#include <chrono>
#include <optional>

#include "gcg/gap.hpp"

namespace gcg {

/// State of the nonmonotone generalized conditional gradient method.
/// Invariants maintained across steps: F(x^k) = f_x + g_x <= f_ref for k >= 1,
/// f_ref = F(x^0) at k = 0, and f_ref is nonincreasing in k.
struct NmState {
  std::int64_t k = 0;
  Vector x;
  double f_x = 0.0;    // f(x^k)
  double g_x = 0.0;    // g(x^k)
  double f_ref = 0.0;  // F_k
  std::vector<IterateRecord> trace;
  std::chrono::steady_clock::time_point start{};
};

struct NmLinesearchResult {
  int backtracks = 0;  // i_k
  double step = 0.0;   // beta^{i_k}
  Vector x_next;
  double f_obj_next = 0.0;  // F(x^{k+1})
  double f_next = 0.0;      // f part
  double g_next = 0.0;      // g part
};

/// Evaluates F(x^0), g(x^0) and seeds F_0 = F(x^0). Raises
/// StartPointInfeasible when x0 lies outside dom g.
NmState nm_init(const Problem& prob, Vector x0);

/// Backtracking search for the smallest i with
///   F(x + beta^i d) <= f_ref - sigma * beta^i * gap.
/// The comparison is exact (no slack); see NmConfig::max_backtracks for the
/// stall cutoff, which raises LinesearchStalled.
NmLinesearchResult nm_linesearch(const Problem& prob, const Vector& x,
                                 double f_ref, const GapResult& gr,
                                 const NmConfig& cfg);

/// One iteration: gap, termination checks, linesearch, reference update
///   F_{k+1} = p_{k+1} F(x^{k+1}) + (1 - p_{k+1}) F_k.
/// Appends one IterateRecord. Returns the termination status when the run is
/// over, nullopt otherwise.
std::optional<Termination> nm_step(const Problem& prob, NmState& st,
                                   const NmConfig& cfg);

/// Runs from x0 until GapBelowTol, MaxIters, StationaryStep, or a linesearch
/// stall (returned as a status; the trace up to the stall is preserved).
RunResult nm_run(const Problem& prob, const Vector& x0, const NmConfig& cfg);

}  // namespace gcg
