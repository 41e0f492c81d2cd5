#include "gcg/solver_parameter_free.hpp"

#include <cmath>
#include <string>

namespace gcg {

namespace {

std::int64_t elapsed_ns(const PfState& st) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(
             std::chrono::steady_clock::now() - st.start)
      .count();
}

}  // namespace

double pf_trial_step(double l, double gap, double d_norm2) {
  if (d_norm2 <= kDegenerateDirNorm2)
    raise(ErrorCode::DegenerateDirection,
          "pf_trial_step: ||d||^2 <= 1e-28; the gap check should have "
          "terminated the run");
  return std::min(1.0, gap / (2.0 * l * d_norm2));
}

PfState pf_init(const Problem& prob, Vector x0, const PfConfig& cfg) {
  require_same_dim(x0.size(), prob.dim(), "pf_run x0");
  require_finite(x0, "pf_run x0");

  PfState st;
  st.start = std::chrono::steady_clock::now();
  st.g_x = prob.nonsmooth().value(x0);
  if (!std::isfinite(st.g_x))
    raise(ErrorCode::StartPointInfeasible,
          "StartPointInfeasible: x0 lies outside dom g");
  st.x = std::move(x0);
  st.f_x = prob.smooth().value(st.x);
  st.l_prev = cfg.l_init;
  return st;
}

PfLinesearchResult pf_linesearch(const Problem& prob, const Vector& x,
                                 double f_curr, const GapResult& gr,
                                 double l_prev, const PfConfig& cfg) {
  const double d_norm2 = inner(gr.d, gr.d);
  for (int i = 0; i <= cfg.max_backtracks; ++i) {
    const double l = std::ldexp(l_prev, i - 1);  // 2^{i-1} L_{k-1}
    const double tau = pf_trial_step(l, gr.gap, d_norm2);
    // tau underflows to 0 once 2 L ||d||^2 overflows; the criterion then
    // degenerates to F(x) <= F(x) and would freeze the iterate. Mathematically
    // tau > 0 always, so treat this as a rejection and let the stall surface.
    if (tau == 0.0) continue;
    Vector trial = x + tau * gr.d;
    const double g_trial = prob.nonsmooth().value(trial);
    if (std::isfinite(g_trial)) {
      const double f_trial = prob.smooth().value(trial);
      const double obj = f_trial + g_trial;
      const double rhs =
          f_curr - 0.5 * tau * gr.gap + 0.5 * l * tau * tau * d_norm2;
      if (obj <= rhs) {
        PfLinesearchResult res;
        res.backtracks = i;
        res.l_accepted = l;
        res.tau = tau;
        res.x_next = std::move(trial);
        res.f_obj_next = obj;
        res.f_next = f_trial;
        res.g_next = g_trial;
        return res;
      }
    }
  }
  raise(ErrorCode::LinesearchStalled,
        "parameter-free linesearch exceeded " +
            std::to_string(cfg.max_backtracks) +
            " doublings without acceptance");
}

std::optional<Termination> pf_step(const Problem& prob, PfState& st,
                                   const PfConfig& cfg) {
  const GapResult gr = frank_wolfe_gap(prob, st.x, st.g_x);

  IterateRecord rec;
  rec.k = st.k;
  rec.f_x = st.f_x + st.g_x;
  rec.f_ref = rec.f_x;  // the pf linesearch references F(x^k) itself
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
  const double d_norm2 = inner(gr.d, gr.d);
  if (d_norm2 <= kDegenerateDirNorm2) {
    rec.elapsed_ns = elapsed_ns(st);
    st.trace.push_back(rec);
    return Termination::StationaryStep;
  }

  PfLinesearchResult ls;
  try {
    ls = pf_linesearch(prob, st.x, rec.f_x, gr, st.l_prev, cfg);
  } catch (const Error&) {
    rec.elapsed_ns = elapsed_ns(st);
    st.trace.push_back(rec);
    throw;
  }

  // descent guarantees re-checked on the computed values
  const double f_slack = 1e-10 * std::max(1.0, std::abs(rec.f_x));
  if (ls.f_obj_next > rec.f_x - 0.25 * ls.tau * gr.gap + f_slack)
    raise(ErrorCode::InvariantViolation,
          "pf_step: F(x^{k+1}) exceeds F(x^k) - tau/4*G(x^k) at k=" +
              std::to_string(st.k));
  const double g_slack = 1e-10 * std::max(1.0, gr.gap);
  if (2.0 * ls.l_accepted * ls.tau * d_norm2 > gr.gap + g_slack)
    raise(ErrorCode::InvariantViolation,
          "pf_step: 2 L_k tau_k ||d||^2 exceeds G(x^k) at k=" +
              std::to_string(st.k));

  rec.step = ls.tau;
  rec.backtracks = ls.backtracks;
  rec.l_k = ls.l_accepted;
  rec.elapsed_ns = elapsed_ns(st);
  st.trace.push_back(rec);

  st.x = std::move(ls.x_next);
  st.f_x = ls.f_next;
  st.g_x = ls.g_next;
  st.l_prev = ls.l_accepted;
  ++st.k;
  return std::nullopt;
}

RunResult pf_run(const Problem& prob, const Vector& x0, const PfConfig& cfg) {
  cfg.validate();
  PfState st = pf_init(prob, x0, cfg);

  RunResult out;
  for (;;) {
    std::optional<Termination> term;
    try {
      term = pf_step(prob, st, cfg);
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
