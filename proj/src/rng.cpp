#include "gcg/rng.hpp"

#include <cmath>

namespace gcg {

double Rng::normal() {
  if (have_cached_) {
    have_cached_ = false;
    return cached_normal_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1], keeps log finite
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * M_PI * u2;
  cached_normal_ = r * std::sin(theta);
  have_cached_ = true;
  return r * std::cos(theta);
}

Vector Rng::uniform_vector(Index n, double lo, double hi) {
  Vector v(n);
  for (Index i = 0; i < n; ++i) v[i] = uniform(lo, hi);
  return v;
}

Vector Rng::normal_vector(Index n) {
  Vector v(n);
  for (Index i = 0; i < n; ++i) v[i] = normal();
  return v;
}

Matrix Rng::normal_matrix(Index rows, Index cols) {
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = normal();
  return m;
}

Matrix Rng::spd_matrix(Index n, double ridge) {
  const Matrix b = normal_matrix(n, n);
  Matrix q = (b.transpose() * b) / static_cast<double>(n);
  q += ridge * Matrix::Identity(n, n);
  // symmetrize exactly; B'B can carry one-ulp asymmetry
  q = ((q + q.transpose()) * 0.5).eval();
  return q;
}

Vector Rng::sign_labels(Index n) {
  Vector v(n);
  for (Index i = 0; i < n; ++i) v[i] = uniform() < 0.5 ? -1.0 : 1.0;
  return v;
}

}  // namespace gcg
