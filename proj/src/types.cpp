#include "gcg/types.hpp"

#include <cmath>
#include <string>

namespace gcg {

double inner(const Vector& a, const Vector& b) {
  require_same_dim(a.size(), b.size(), "inner");
  return a.dot(b);
}

double norm(const Vector& a) { return std::sqrt(a.dot(a)); }

void require_finite(double value, const char* what) {
  if (!std::isfinite(value)) {
    raise(ErrorCode::NonFiniteValue,
          std::string(what) + " produced a non-finite value");
  }
}

void require_finite(const Vector& v, const char* what) {
  if (!v.allFinite()) {
    raise(ErrorCode::NonFiniteValue,
          std::string(what) + " contains a non-finite coordinate");
  }
}

void require_same_dim(Index a, Index b, const char* what) {
  if (a != b) {
    raise(ErrorCode::DimensionMismatch,
          std::string(what) + ": dimensions differ (" + std::to_string(a) +
              " vs " + std::to_string(b) + ")");
  }
}

const char* termination_name(Termination t) {
  switch (t) {
    case Termination::GapBelowTol: return "GapBelowTol";
    case Termination::MaxIters: return "MaxIters";
    case Termination::StationaryStep: return "StationaryStep";
    case Termination::LinesearchStalled: return "LinesearchStalled";
  }
  return "Unknown";
}

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InfeasibleQueryPoint: return "InfeasibleQueryPoint";
    case ErrorCode::StartPointInfeasible: return "StartPointInfeasible";
    case ErrorCode::LinesearchStalled: return "LinesearchStalled";
    case ErrorCode::DegenerateDirection: return "DegenerateDirection";
    case ErrorCode::NegativeGap: return "NegativeGap";
    case ErrorCode::NonConvexFixture: return "NonConvexFixture";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::InsufficientTrace: return "InsufficientTrace";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

void NmConfig::validate() const {
  if (!(beta > 0.0 && beta < 1.0))
    raise(ErrorCode::InvalidArgument, "NmConfig: beta must lie in (0,1)");
  if (!(sigma > 0.0 && sigma < 1.0))
    raise(ErrorCode::InvalidArgument, "NmConfig: sigma must lie in (0,1)");
  if (!(p > 0.0 && p <= 1.0))
    raise(ErrorCode::InvalidArgument, "NmConfig: p must lie in (0,1]");
  if (pk_schedule == PkSchedule::Constant && !(pk_value >= p && pk_value <= 1.0))
    raise(ErrorCode::InvalidArgument, "NmConfig: pk_value must lie in [p,1]");
  if (!(gap_tol >= 0.0))
    raise(ErrorCode::InvalidArgument, "NmConfig: gap_tol must be >= 0");
  if (max_iters < 0)
    raise(ErrorCode::InvalidArgument, "NmConfig: max_iters must be >= 0");
  if (max_backtracks < 0)
    raise(ErrorCode::InvalidArgument, "NmConfig: max_backtracks must be >= 0");
}

double NmConfig::next_p(std::int64_t k) const {
  switch (pk_schedule) {
    case PkSchedule::Constant: return pk_value;
    case PkSchedule::HarmonicToOne:
      return std::max(p, 1.0 / static_cast<double>(k + 2));
  }
  return p;
}

void PfConfig::validate() const {
  if (!(l_init > 0.0))
    raise(ErrorCode::InvalidArgument, "PfConfig: l_init must be > 0");
  if (!(gap_tol >= 0.0))
    raise(ErrorCode::InvalidArgument, "PfConfig: gap_tol must be >= 0");
  if (max_iters < 0)
    raise(ErrorCode::InvalidArgument, "PfConfig: max_iters must be >= 0");
  if (max_backtracks < 0)
    raise(ErrorCode::InvalidArgument, "PfConfig: max_backtracks must be >= 0");
}

}  // namespace gcg
