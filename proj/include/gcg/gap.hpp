#pragma once

#include "gcg/problem.hpp"

namespace gcg {

struct GapResult {
  double gap = 0.0;  // Frank-Wolfe gap G(x), >= 0
  Vector v;          // subproblem solution v*
  Vector d;          // d = v - x
  double g_v = 0.0;  // g(v*)
};

/// Frank-Wolfe gap G(x) = <grad f(x), x - v*> + g(x) - g(v*), where v* solves
/// the linear subproblem. g(x) is passed in (`g_x`) rather than recomputed so
/// feasibility decisions stay consistent within a solver iteration.
///
/// A tiny negative raw value (>= -1e-12) is clamped to zero; anything more
/// negative indicates an LMO defect and raises NegativeGap.
GapResult frank_wolfe_gap(const Problem& prob, const Vector& x, double g_x);

namespace detail {
double finalize_gap(double raw);
}

}  // namespace gcg
