#pragma once

#include <optional>

#include "gcg/types.hpp"

namespace gcg {

/// Smooth part f of the composite objective F = f + g. Four families cover
/// the gradient regimes the solvers are tested against: Lipschitz
/// (Quadratic, Logistic), Hoelder with exponent pexp-1 (PPowerResidual), and
/// a gradient that is continuous but not Hoelder of any exponent at its
/// stationary point (NonHolderWell).
///
/// Oracles are immutable after construction; evaluation is pure.
class SmoothOracle {
 public:
  enum class Kind { Quadratic, PPowerResidual, Logistic, NonHolderWell };

  /// f(x) = x'Qx/2 + q'x. Q must be symmetric (checked to 1e-12).
  static SmoothOracle quadratic(Matrix q_matrix, Vector q_vector);

  /// f(x) = (1/pexp) * sum_i |(Ax-b)_i|^pexp, with 1 < pexp <= 2.
  /// pexp = 2 reduces exactly to half the squared residual.
  static SmoothOracle p_power_residual(Matrix a, Vector b, double pexp);

  /// f(x) = sum_i log(1 + exp(-y_i (Ax)_i)), labels y_i in {-1, +1}.
  static SmoothOracle logistic(Matrix a, Vector labels);

  /// f(x) = sum_j phi(x_j), where phi is even, phi(t) = t/ln(1/t) on (0, knot]
  /// and extends quadratically with curvature `curvature` beyond the knot.
  /// phi'(t) = 1/ln(1/t) + 1/ln(1/t)^2 -> 0 as t -> 0, slower than any t^nu:
  /// the gradient is continuous everywhere but not Hoelder at the stationary
  /// point 0. Requires 0 < knot <= e^-2 and curvature > 0.
  static SmoothOracle non_holder_well(Index dim, double knot, double curvature);

  Kind kind() const { return kind_; }
  Index dim() const { return dim_; }

  double value(const Vector& x) const;
  Vector gradient(const Vector& x) const;

  /// Hoelder exponent of the gradient where one is known; nullopt for
  /// NonHolderWell (that is its point).
  std::optional<double> holder_exponent() const;

  const Matrix& matrix() const { return a_; }       // Q or A
  const Vector& vector_term() const { return b_; }  // q, b, or labels
  double pexp() const { return pexp_; }
  double knot() const { return knot_; }
  double curvature() const { return curvature_; }

  /// Scalar well profile (exposed for verification).
  double well_phi(double t) const;
  double well_dphi(double t) const;

 private:
  SmoothOracle() = default;

  Kind kind_ = Kind::Quadratic;
  Index dim_ = 0;
  Matrix a_;
  Vector b_;
  double pexp_ = 2.0;
  double knot_ = 0.0;
  double curvature_ = 0.0;
  // cached well constants: phi and phi' at the knot
  double phi_knot_ = 0.0;
  double dphi_knot_ = 0.0;
};

}  // namespace gcg
