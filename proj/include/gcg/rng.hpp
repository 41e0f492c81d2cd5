#pragma once

#include <cstdint>
#include <random>

#include "gcg/types.hpp"

namespace gcg {

/// Deterministic random source for fixture generation. A single 64-bit seed
/// drives an mt19937_64 stream; doubles are derived by fixed mappings
/// (uniform: top 53 bits scaled by 2^-53; normal: Box-Muller) instead of the
/// standard-library distributions, whose output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double normal();

  Vector uniform_vector(Index n, double lo, double hi);
  Vector normal_vector(Index n);
  Matrix normal_matrix(Index rows, Index cols);

  /// Symmetric positive definite matrix: B'B/n + ridge*I, entries of B normal.
  Matrix spd_matrix(Index n, double ridge = 0.1);

  /// Labels in {-1, +1}.
  Vector sign_labels(Index n);

 private:
  std::mt19937_64 engine_;
  bool have_cached_ = false;
  double cached_normal_ = 0.0;
};

}  // namespace gcg
