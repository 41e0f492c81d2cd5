#pragma once

#include "gcg/nonsmooth_term.hpp"
#include "gcg/smooth_oracle.hpp"

namespace gcg {

/// Composite problem: minimize F(x) = f(x) + g(x).
class Problem {
 public:
  Problem(SmoothOracle smooth, NonsmoothTerm nonsmooth)
      : smooth_(std::move(smooth)), nonsmooth_(std::move(nonsmooth)) {
    require_same_dim(smooth_.dim(), nonsmooth_.dim(), "Problem f vs g");
  }

  Index dim() const { return smooth_.dim(); }
  const SmoothOracle& smooth() const { return smooth_; }
  const NonsmoothTerm& nonsmooth() const { return nonsmooth_; }

  /// F(x) = f(x) + g(x); +infinity outside dom g.
  double objective(const Vector& x) const {
    const double gx = nonsmooth_.value(x);
    if (!std::isfinite(gx)) return gx;
    return smooth_.value(x) + gx;
  }

 private:
  SmoothOracle smooth_;
  NonsmoothTerm nonsmooth_;
};

}  // namespace gcg
