#include "gcg/nonsmooth_term.hpp"

#include <cmath>
#include <limits>

namespace gcg {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

NonsmoothTerm NonsmoothTerm::simplex(Index dim, double radius) {
  if (dim <= 0) raise(ErrorCode::InvalidArgument, "simplex: dim <= 0");
  if (!(radius > 0.0)) raise(ErrorCode::InvalidArgument, "simplex: radius <= 0");
  NonsmoothTerm t;
  t.kind_ = Kind::Simplex;
  t.dim_ = dim;
  t.radius_ = radius;
  return t;
}

NonsmoothTerm NonsmoothTerm::l1_ball(Index dim, double radius) {
  if (dim <= 0) raise(ErrorCode::InvalidArgument, "l1_ball: dim <= 0");
  if (!(radius > 0.0)) raise(ErrorCode::InvalidArgument, "l1_ball: radius <= 0");
  NonsmoothTerm t;
  t.kind_ = Kind::L1Ball;
  t.dim_ = dim;
  t.radius_ = radius;
  return t;
}

NonsmoothTerm NonsmoothTerm::l2_ball(Index dim, double radius) {
  if (dim <= 0) raise(ErrorCode::InvalidArgument, "l2_ball: dim <= 0");
  if (!(radius > 0.0)) raise(ErrorCode::InvalidArgument, "l2_ball: radius <= 0");
  NonsmoothTerm t;
  t.kind_ = Kind::L2Ball;
  t.dim_ = dim;
  t.radius_ = radius;
  return t;
}

NonsmoothTerm NonsmoothTerm::box(Vector lower, Vector upper) {
  require_same_dim(lower.size(), upper.size(), "box bounds");
  if (lower.size() == 0) raise(ErrorCode::InvalidArgument, "box: dim <= 0");
  if (!lower.allFinite() || !upper.allFinite())
    raise(ErrorCode::InvalidArgument, "box: bounds must be finite (compactness)");
  for (Index i = 0; i < lower.size(); ++i) {
    if (!(lower[i] <= upper[i]))
      raise(ErrorCode::InvalidArgument, "box: requires lower <= upper");
  }
  NonsmoothTerm t;
  t.kind_ = Kind::Box;
  t.dim_ = lower.size();
  t.lower_ = std::move(lower);
  t.upper_ = std::move(upper);
  return t;
}

NonsmoothTerm NonsmoothTerm::elastic_net(Index dim, double lambda1,
                                         double lambda2) {
  if (dim <= 0) raise(ErrorCode::InvalidArgument, "elastic_net: dim <= 0");
  if (!(lambda1 >= 0.0))
    raise(ErrorCode::InvalidArgument, "elastic_net: lambda1 must be >= 0");
  if (!(lambda2 > 0.0))
    raise(ErrorCode::InvalidArgument,
          "elastic_net: lambda2 must be > 0; the l1 norm alone is not "
          "supercoercive and the linear subproblem can be unbounded");
  NonsmoothTerm t;
  t.kind_ = Kind::ElasticNet;
  t.dim_ = dim;
  t.lambda1_ = lambda1;
  t.lambda2_ = lambda2;
  return t;
}

double NonsmoothTerm::value(const Vector& x) const {
  require_same_dim(x.size(), dim_, "g_value");
  switch (kind_) {
    case Kind::Simplex: {
      double sum = 0.0;
      for (Index i = 0; i < x.size(); ++i) {
        if (x[i] < -kFeasTol) return kInf;
        sum += x[i];
      }
      return std::abs(sum - radius_) <= kFeasTol ? 0.0 : kInf;
    }
    case Kind::L1Ball:
      return x.cwiseAbs().sum() <= radius_ + kFeasTol ? 0.0 : kInf;
    case Kind::L2Ball:
      return norm(x) <= radius_ + kFeasTol ? 0.0 : kInf;
    case Kind::Box:
      for (Index i = 0; i < x.size(); ++i) {
        if (x[i] < lower_[i] - kFeasTol || x[i] > upper_[i] + kFeasTol)
          return kInf;
      }
      return 0.0;
    case Kind::ElasticNet:
      return lambda1_ * x.cwiseAbs().sum() + 0.5 * lambda2_ * x.squaredNorm();
  }
  return kInf;
}

LmoResult NonsmoothTerm::lmo(const Vector& cost) const {
  require_same_dim(cost.size(), dim_, "lmo_solve");
  if (!cost.allFinite())
    raise(ErrorCode::NonFiniteValue, "lmo_solve: cost has non-finite entries");

  Vector v = Vector::Zero(dim_);
  switch (kind_) {
    case Kind::Simplex: {
      Index j = 0;
      for (Index i = 1; i < dim_; ++i)
        if (cost[i] < cost[j]) j = i;
      v[j] = radius_;
      return {std::move(v), 0.0};
    }
    case Kind::L1Ball: {
      Index j = 0;
      for (Index i = 1; i < dim_; ++i)
        if (std::abs(cost[i]) > std::abs(cost[j])) j = i;
      if (cost[j] == 0.0) {
        v[0] = radius_;
      } else {
        v[j] = cost[j] > 0.0 ? -radius_ : radius_;
      }
      return {std::move(v), 0.0};
    }
    case Kind::L2Ball: {
      const double n = norm(cost);
      if (n == 0.0) {
        v[0] = radius_;
      } else {
        v = -(radius_ / n) * cost;
      }
      return {std::move(v), 0.0};
    }
    case Kind::Box: {
      for (Index i = 0; i < dim_; ++i)
        v[i] = cost[i] < 0.0 ? upper_[i] : lower_[i];
      return {std::move(v), 0.0};
    }
    case Kind::ElasticNet: {
      // coordinatewise soft threshold
      for (Index i = 0; i < dim_; ++i) {
        const double shrunk = std::max(std::abs(cost[i]) - lambda1_, 0.0);
        v[i] = (cost[i] > 0.0 ? -1.0 : 1.0) * shrunk / lambda2_;
      }
      const double g_v = value(v);
      return {std::move(v), g_v};
    }
  }
  raise(ErrorCode::InvalidArgument, "lmo_solve: unknown variant");
}

}  // namespace gcg
