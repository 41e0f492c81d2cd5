#pragma once

#include <chrono>
#include <optional>

#include "gcg/gap.hpp"

namespace gcg {

/// State of the parameter-free generalized conditional gradient method.
struct PfState {
  std::int64_t k = 0;
  Vector x;
  double f_x = 0.0;     // f(x^k)
  double g_x = 0.0;     // g(x^k)
  double l_prev = 1.0;  // L_{k-1}
  std::vector<IterateRecord> trace;
  std::chrono::steady_clock::time_point start{};
};

struct PfLinesearchResult {
  int backtracks = 0;       // accepted i
  double l_accepted = 0.0;  // L_k = 2^{i-1} L_{k-1}
  double tau = 0.0;         // tau_k
  Vector x_next;
  double f_obj_next = 0.0;  // F(x^{k+1})
  double f_next = 0.0;
  double g_next = 0.0;
};

/// tau = min(1, gap / (2 l d_norm2)). Raises DegenerateDirection when
/// d_norm2 <= 1e-28 (the caller should have terminated already).
double pf_trial_step(double l, double gap, double d_norm2);

PfState pf_init(const Problem& prob, Vector x0, const PfConfig& cfg);

/// Backtracking with the curvature schedule L^{(i)} = 2^{i-1} L_{k-1} (the
/// first trial halves the previous estimate) and acceptance
///   F(x + tau d) <= F(x^k) - tau/2 * gap + L/2 * tau^2 * ||d||^2.
PfLinesearchResult pf_linesearch(const Problem& prob, const Vector& x,
                                 double f_curr, const GapResult& gr,
                                 double l_prev, const PfConfig& cfg);

std::optional<Termination> pf_step(const Problem& prob, PfState& st,
                                   const PfConfig& cfg);

RunResult pf_run(const Problem& prob, const Vector& x0, const PfConfig& cfg);

}  // namespace gcg
