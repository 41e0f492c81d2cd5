#pragma once

#include <cmath>

#include "gcg/problem.hpp"
#include "gcg/rng.hpp"

namespace gcg::test {

/// 1-D hand-trace fixture: f = x^2/2 over the box [-1, 1].
inline Problem box_quad_1d() {
  Matrix q(1, 1);
  q << 1.0;
  return Problem(SmoothOracle::quadratic(q, Vector::Zero(1)),
                 NonsmoothTerm::box(Vector::Constant(1, -1.0),
                                    Vector::Constant(1, 1.0)));
}

inline Vector vec(std::initializer_list<double> vals) {
  Vector v(static_cast<Index>(vals.size()));
  Index i = 0;
  for (double x : vals) v[i++] = x;
  return v;
}

/// Random point with finite g for any shipped variant: a convex combination
/// of LMO outputs (all of which lie in dom g).
inline Vector random_feasible(const NonsmoothTerm& g, Rng& rng) {
  Vector x = g.lmo(rng.normal_vector(g.dim())).v;
  for (int i = 0; i < 3; ++i) {
    const double t = rng.uniform();
    x = (1.0 - t) * x + t * g.lmo(rng.normal_vector(g.dim())).v;
  }
  return x;
}

}  // namespace gcg::test
