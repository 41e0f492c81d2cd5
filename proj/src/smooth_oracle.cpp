#include "gcg/smooth_oracle.hpp"

#include <cmath>
#include <string>

namespace gcg {

namespace {

double stable_log1pexp(double z) {
  // log(1 + exp(z)) without overflow for large z.
  if (z > 0.0) return z + std::log1p(std::exp(-z));
  return std::log1p(std::exp(z));
}

}  // namespace

SmoothOracle SmoothOracle::quadratic(Matrix q_matrix, Vector q_vector) {
  if (q_matrix.rows() != q_matrix.cols())
    raise(ErrorCode::InvalidArgument, "quadratic: Q must be square");
  require_same_dim(q_matrix.rows(), q_vector.size(), "quadratic Q vs q");
  const double asym = (q_matrix - q_matrix.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12)
    raise(ErrorCode::InvalidArgument,
          "quadratic: Q is not symmetric (max asymmetry " +
              std::to_string(asym) + ")");
  if (!q_matrix.allFinite() || !q_vector.allFinite())
    raise(ErrorCode::NonFiniteValue, "quadratic: Q/q must be finite");

  SmoothOracle o;
  o.kind_ = Kind::Quadratic;
  o.dim_ = q_vector.size();
  o.a_ = std::move(q_matrix);
  o.b_ = std::move(q_vector);
  return o;
}

SmoothOracle SmoothOracle::p_power_residual(Matrix a, Vector b, double pexp) {
  require_same_dim(a.rows(), b.size(), "p_power_residual A vs b");
  if (!(pexp > 1.0 && pexp <= 2.0))
    raise(ErrorCode::InvalidArgument,
          "p_power_residual: pexp must lie in (1,2]");
  if (!a.allFinite() || !b.allFinite())
    raise(ErrorCode::NonFiniteValue, "p_power_residual: A/b must be finite");

  SmoothOracle o;
  o.kind_ = Kind::PPowerResidual;
  o.dim_ = a.cols();
  o.a_ = std::move(a);
  o.b_ = std::move(b);
  o.pexp_ = pexp;
  return o;
}

SmoothOracle SmoothOracle::logistic(Matrix a, Vector labels) {
  require_same_dim(a.rows(), labels.size(), "logistic A vs labels");
  for (Index i = 0; i < labels.size(); ++i) {
    if (labels[i] != 1.0 && labels[i] != -1.0)
      raise(ErrorCode::InvalidArgument, "logistic: labels must be +1 or -1");
  }
  if (!a.allFinite())
    raise(ErrorCode::NonFiniteValue, "logistic: A must be finite");

  SmoothOracle o;
  o.kind_ = Kind::Logistic;
  o.dim_ = a.cols();
  o.a_ = std::move(a);
  o.b_ = std::move(labels);
  return o;
}

SmoothOracle SmoothOracle::non_holder_well(Index dim, double knot,
                                           double curvature) {
  if (dim <= 0) raise(ErrorCode::InvalidArgument, "non_holder_well: dim <= 0");
  if (!(knot > 0.0 && knot <= std::exp(-2.0)))
    raise(ErrorCode::InvalidArgument,
          "non_holder_well: knot must lie in (0, e^-2]");
  if (!(curvature > 0.0))
    raise(ErrorCode::InvalidArgument, "non_holder_well: curvature must be > 0");

  SmoothOracle o;
  o.kind_ = Kind::NonHolderWell;
  o.dim_ = dim;
  o.knot_ = knot;
  o.curvature_ = curvature;
  const double u = -std::log(knot);
  o.phi_knot_ = knot / u;
  o.dphi_knot_ = 1.0 / u + 1.0 / (u * u);
  return o;
}

double SmoothOracle::well_phi(double t) const {
  t = std::abs(t);
  if (t == 0.0) return 0.0;
  // u = ln(1/t) via -ln(t); 1/t itself overflows for subnormal t
  if (t <= knot_) return t / -std::log(t);
  const double s = t - knot_;
  return phi_knot_ + dphi_knot_ * s + 0.5 * curvature_ * s * s;
}

double SmoothOracle::well_dphi(double t) const {
  const double sign = (t > 0.0) ? 1.0 : (t < 0.0 ? -1.0 : 0.0);
  const double a = std::abs(t);
  if (a == 0.0) return 0.0;
  if (a <= knot_) {
    const double u = -std::log(a);
    return sign * (1.0 / u + 1.0 / (u * u));
  }
  return sign * (dphi_knot_ + curvature_ * (a - knot_));
}

double SmoothOracle::value(const Vector& x) const {
  require_same_dim(x.size(), dim_, "f_value");
  double v = 0.0;
  switch (kind_) {
    case Kind::Quadratic:
      v = 0.5 * x.dot(a_ * x) + b_.dot(x);
      break;
    case Kind::PPowerResidual: {
      const Vector r = a_ * x - b_;
      for (Index i = 0; i < r.size(); ++i)
        v += std::pow(std::abs(r[i]), pexp_);
      v /= pexp_;
      break;
    }
    case Kind::Logistic: {
      const Vector u = a_ * x;
      for (Index i = 0; i < u.size(); ++i) v += stable_log1pexp(-b_[i] * u[i]);
      break;
    }
    case Kind::NonHolderWell:
      for (Index j = 0; j < x.size(); ++j) v += well_phi(x[j]);
      break;
  }
  require_finite(v, "f_value");
  return v;
}

Vector SmoothOracle::gradient(const Vector& x) const {
  require_same_dim(x.size(), dim_, "f_grad");
  Vector g;
  switch (kind_) {
    case Kind::Quadratic:
      g = a_ * x + b_;
      break;
    case Kind::PPowerResidual: {
      const Vector r = a_ * x - b_;
      Vector s(r.size());
      for (Index i = 0; i < r.size(); ++i) {
        const double a = std::abs(r[i]);
        s[i] = (r[i] > 0.0 ? 1.0 : (r[i] < 0.0 ? -1.0 : 0.0)) *
               std::pow(a, pexp_ - 1.0);
      }
      g = a_.transpose() * s;
      break;
    }
    case Kind::Logistic: {
      const Vector u = a_ * x;
      Vector w(u.size());
      for (Index i = 0; i < u.size(); ++i) {
        const double z = b_[i] * u[i];
        w[i] = -b_[i] / (1.0 + std::exp(z));
      }
      g = a_.transpose() * w;
      break;
    }
    case Kind::NonHolderWell: {
      g.resize(x.size());
      for (Index j = 0; j < x.size(); ++j) g[j] = well_dphi(x[j]);
      break;
    }
  }
  require_finite(g, "f_grad");
  return g;
}

std::optional<double> SmoothOracle::holder_exponent() const {
  switch (kind_) {
    case Kind::Quadratic: return 1.0;
    case Kind::PPowerResidual: return pexp_ - 1.0;
    case Kind::Logistic: return 1.0;
    case Kind::NonHolderWell: return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace gcg
