#pragma once

#include "gcg/types.hpp"

namespace gcg {

struct LmoResult {
  Vector v;     // minimizer of <c, v> + g(v)
  double g_v;   // g at the minimizer (always finite)
};

/// Nonsmooth convex part g of the composite objective, with closed-form
/// solutions of the linear subproblem argmin_v { <c, v> + g(v) }.
///
/// Every shipped variant is proper, closed, convex and supercoercive:
/// indicators of compact sets vacuously, ElasticNet through its quadratic
/// term (lambda2 > 0 is enforced at construction for that reason).
///
/// Tie-breaking is deterministic so traces reproduce: the lowest index wins
/// for Simplex/L1Ball, Box breaks c_i = 0 to the lower bound, and L1/L2 balls
/// return +radius * e_1 when c = 0.
class NonsmoothTerm {
 public:
  enum class Kind { Simplex, L1Ball, L2Ball, Box, ElasticNet };

  /// Indicator feasibility slack: iterates are convex combinations of
  /// feasible points and accumulate rounding error.
  static constexpr double kFeasTol = 1e-9;

  static NonsmoothTerm simplex(Index dim, double radius);
  static NonsmoothTerm l1_ball(Index dim, double radius);
  static NonsmoothTerm l2_ball(Index dim, double radius);
  static NonsmoothTerm box(Vector lower, Vector upper);
  static NonsmoothTerm elastic_net(Index dim, double lambda1, double lambda2);

  Kind kind() const { return kind_; }
  Index dim() const { return dim_; }
  bool is_indicator() const { return kind_ != Kind::ElasticNet; }

  /// g(x); +infinity outside dom g (indicators use kFeasTol).
  double value(const Vector& x) const;

  /// Solves argmin_v { <c, v> + g(v) } exactly.
  LmoResult lmo(const Vector& cost) const;

  double radius() const { return radius_; }
  const Vector& lower() const { return lower_; }
  const Vector& upper() const { return upper_; }
  double lambda1() const { return lambda1_; }
  double lambda2() const { return lambda2_; }

 private:
  NonsmoothTerm() = default;

  Kind kind_ = Kind::Box;
  Index dim_ = 0;
  double radius_ = 0.0;
  Vector lower_, upper_;
  double lambda1_ = 0.0, lambda2_ = 0.0;
};

}  // namespace gcg
