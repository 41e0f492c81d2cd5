#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <vector>

#include "gcg/errors.hpp"

namespace gcg {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Standard dot product with a dimension check.
double inner(const Vector& a, const Vector& b);

/// Euclidean norm induced by inner().
double norm(const Vector& a);

void require_finite(double value, const char* what);
void require_finite(const Vector& v, const char* what);
void require_same_dim(Index a, Index b, const char* what);

enum class Termination {
  GapBelowTol,
  MaxIters,
  StationaryStep,
  LinesearchStalled,
};

const char* termination_name(Termination t);

/// One row of a solver trace. `step` and `backtracks` describe the step taken
/// from iterate k; they are zero on a terminal row where no step was taken.
struct IterateRecord {
  std::int64_t k = 0;
  double f_x = 0.0;    // F(x^k)
  double f_ref = 0.0;  // reference value used by the linesearch (F_k; F(x^k) for pf)
  double gap = 0.0;    // Frank-Wolfe gap at x^k
  double step = 0.0;   // accepted stepsize, in [0, 1]
  int backtracks = 0;
  std::optional<double> l_k;  // curvature estimate (parameter-free runs only)
  std::int64_t elapsed_ns = 0;
};

enum class PkSchedule {
  Constant,       // p_{k+1} = pk_value
  HarmonicToOne,  // p_{k+1} = max(p, 1/(k+2))
};

/// Parameters of the nonmonotone-Armijo solver.
struct NmConfig {
  double beta = 0.5;
  double sigma = 0.1;
  double p = 0.5;
  PkSchedule pk_schedule = PkSchedule::Constant;
  double pk_value = 0.5;  // Constant schedule only; must lie in [p, 1]
  double gap_tol = 1e-6;
  std::int64_t max_iters = 100000;
  int max_backtracks = 60;

  void validate() const;
  /// p_{k+1} for the step leaving iterate k. Always in [p, 1].
  double next_p(std::int64_t k) const;
};

/// Parameters of the parameter-free solver.
struct PfConfig {
  double l_init = 1.0;  // L_{-1}
  double gap_tol = 1e-6;
  std::int64_t max_iters = 100000;
  int max_backtracks = 80;

  void validate() const;
};

struct RunResult {
  std::vector<IterateRecord> trace;
  Termination status = Termination::MaxIters;
  Vector x_final;
};

/// Direction norms below this are treated as an exact stationary hit.
inline constexpr double kStationaryDirTol = 1e-14;

/// ||d||^2 threshold below which the parameter-free trial step is undefined.
inline constexpr double kDegenerateDirNorm2 = 1e-28;

}  // namespace gcg
