#include "gcg/gap.hpp"

#include <cmath>
#include <string>

namespace gcg {

namespace detail {

double finalize_gap(double raw) {
  if (raw >= 0.0) return raw;
  if (raw >= -1e-12) return 0.0;
  raise(ErrorCode::NegativeGap,
        "Frank-Wolfe gap is " + std::to_string(raw) +
            " < -1e-12; the LMO or gradient is defective");
}

}  // namespace detail

GapResult frank_wolfe_gap(const Problem& prob, const Vector& x, double g_x) {
  require_same_dim(x.size(), prob.dim(), "frank_wolfe_gap");
  if (!std::isfinite(g_x))
    raise(ErrorCode::InfeasibleQueryPoint,
          "frank_wolfe_gap: query point lies outside dom g");

  const Vector c = prob.smooth().gradient(x);
  LmoResult lm = prob.nonsmooth().lmo(c);

  GapResult r;
  r.v = std::move(lm.v);
  r.g_v = lm.g_v;
  r.d = r.v - x;
  r.gap = detail::finalize_gap(c.dot(x - r.v) + g_x - r.g_v);
  return r;
}

}  // namespace gcg
