#include "gcg/solver_nonmonotone.hpp"

#include <cmath>
#include <string>

namespace gcg {

namespace {

std::int64_t elapsed_ns(const NmState& st) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(
             std::chrono::steady_clock::now() - st.start)
      .count();
}

}  // namespace

NmState nm_init(const Problem& prob, Vector x0) {
  require_same_dim(x0.size(), prob.dim(), "nm_run x0");
  require_finite(x0, "nm_run x0");

  NmState st;
  st.start = std::chrono::steady_clock::now();
  st.g_x = prob.nonsmooth().value(x0);
  if (!std::isfinite(st.g_x))
    raise(ErrorCode::StartPointInfeasible,
          "StartPointInfeasible: x0 lies outside dom g");
  st.x = std::move(x0);
  st.f_x = prob.smooth().value(st.x);
  st.f_ref = st.f_x + st.g_x;  // F_0 = F(x^0)
  return st;
}

NmLinesearchResult nm_linesearch(const Problem& prob, const Vector& x,
                                 double f_ref, const GapResult& gr,
                                 const NmConfig& cfg) {
  double step = 1.0;  // beta^0
  for (int i = 0; i <= cfg.max_backtracks; ++i) {
    Vector trial = x + step * gr.d;
    const double g_trial = prob.nonsmooth().value(trial);
    if (std::isfinite(g_trial)) {
      const double f_trial = prob.smooth().value(trial);
      const double obj = f_trial + g_trial;
      if (obj <= f_ref - cfg.sigma * step * gr.gap) {
        NmLinesearchResult res;
        res.backtracks = i;
        res.step = step;
        res.x_next = std::move(trial);
        res.f_obj_next = obj;
        res.f_next = f_trial;
        res.g_next = g_trial;
        return res;
      }
    }
    step *= cfg.beta;
  }
  raise(ErrorCode::LinesearchStalled,
        "nonmonotone linesearch exceeded " +
            std::to_string(cfg.max_backtracks) +
            " backtracks: either an oracle defect or the required decrement "
            "is below floating-point resolution");
}

std::optional<Termination> nm_step(const Problem& prob, NmState& st,
                                   const NmConfig& cfg) {
  const GapResult gr = frank_wolfe_gap(prob, st.x, st.g_x);

  IterateRecord rec;
  rec.k = st.k;
  rec.f_x = st.f_x + st.g_x;
  rec.f_ref = st.f_ref;
  rec.gap = gr.gap;

  if (gr.gap <= cfg.gap_tol) {
    rec.elapsed_ns = elapsed_ns(st);
    st.trace.push_back(rec);
    return Termination::GapBelowTol;
  }
  if (st.k >= cfg.max_iters) {
    rec.elapsed_ns = elapsed_ns(st);
    st.trace.push_back(rec);
    return Termination::MaxIters;
  }
  if (norm(gr.d) <= kStationaryDirTol) {
    rec.elapsed_ns = elapsed_ns(st);
    st.trace.push_back(rec);
    return Termination::StationaryStep;
  }

  NmLinesearchResult ls;
  try {
    ls = nm_linesearch(prob, st.x, st.f_ref, gr, cfg);
  } catch (const Error&) {
    // keep the stalled iterate visible in the trace
    rec.elapsed_ns = elapsed_ns(st);
    st.trace.push_back(rec);
    throw;
  }

  const double p_next = cfg.next_p(st.k);
  const double f_ref_next = p_next * ls.f_obj_next + (1.0 - p_next) * st.f_ref;

  // descent guarantees re-checked on the computed values
  const double slack = 1e-10 * std::max(1.0, std::abs(st.f_ref));
  if (f_ref_next > st.f_ref - cfg.p * cfg.sigma * ls.step * gr.gap + slack)
    raise(ErrorCode::InvariantViolation,
          "nm_step: F_{k+1} exceeds F_k - p*sigma*beta^i*G(x^k) at k=" +
              std::to_string(st.k));
  if (ls.f_obj_next > f_ref_next + slack)
    raise(ErrorCode::InvariantViolation,
          "nm_step: F(x^{k+1}) exceeds F_{k+1} at k=" + std::to_string(st.k));

  rec.step = ls.step;
  rec.backtracks = ls.backtracks;
  rec.elapsed_ns = elapsed_ns(st);
  st.trace.push_back(rec);

  st.x = std::move(ls.x_next);
  st.f_x = ls.f_next;
  st.g_x = ls.g_next;
  st.f_ref = f_ref_next;
  ++st.k;
  return std::nullopt;
}

RunResult nm_run(const Problem& prob, const Vector& x0, const NmConfig& cfg) {
  cfg.validate();
  NmState st = nm_init(prob, x0);

  RunResult out;
  for (;;) {
    std::optional<Termination> term;
    try {
      term = nm_step(prob, st, cfg);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::LinesearchStalled) throw;
      out.status = Termination::LinesearchStalled;
      out.trace = std::move(st.trace);
      out.x_final = std::move(st.x);
      return out;
    }
    if (term) {
      out.status = *term;
      out.trace = std::move(st.trace);
      out.x_final = std::move(st.x);
      return out;
    }
  }
}

}  // namespace gcg
