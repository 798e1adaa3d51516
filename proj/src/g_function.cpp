// Copyright 2026 The Vicinal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vicinal/g_function.hpp"

#include <cmath>

#include "vicinal/errors.hpp"

namespace vicinal {

namespace {

// 1 - g(y), summed from 2 sin^2(d / 2) so that it keeps full relative
// precision near the maximizer, where g itself rounds to 1.
double g_deficit(const GEstimator& est, const SpherePoint& y) {
  double sum = 0.0;
  for (std::size_t k = 0; k < est.size(); ++k) {
    const double s = std::sin(0.5 * dist(y, est.points()[k]));
    sum += est.weights()[k] * 2.0 * s * s;
  }
  return sum / est.weight_sum();
}

}  // namespace

GEstimator::GEstimator(std::vector<SpherePoint> points, std::vector<double> weights)
    : points_(std::move(points)), weights_(std::move(weights)) {
  if (points_.empty()) throw DomainError("g estimator needs at least one point");
  if (points_.size() != weights_.size()) {
    throw DomainError("g estimator needs one weight per point");
  }
  partial_sums_.reserve(weights_.size());
  double sum = 0.0;
  for (std::size_t k = 0; k < points_.size(); ++k) {
    require_same_dimension(points_[k], points_.front());
    if (!(weights_[k] > 0.0) || !std::isfinite(weights_[k])) {
      throw DomainError("g estimator weights must be positive and finite");
    }
    sum += weights_[k];
    partial_sums_.push_back(sum);
  }
}

GEstimator GEstimator::from_orbit(std::span<const SpherePoint> iterates, std::size_t start) {
  if (iterates.size() < start + 2) {
    throw DomainError("g estimator needs at least two orbit points after the start index");
  }
  std::vector<SpherePoint> points;
  std::vector<double> weights;
  for (std::size_t k = start; k + 1 < iterates.size(); ++k) {
    const double c = std::cos(dist(iterates[k + 1], iterates[k]));
    weights.push_back(c * c / (1.0 + c * c));
    points.push_back(iterates[k + 1]);
  }
  return GEstimator(std::move(points), std::move(weights));
}

GEstimator GEstimator::truncated(std::size_t n) const {
  if (n < 1 || n > points_.size()) throw DomainError("truncation length out of range");
  return GEstimator(std::vector<SpherePoint>(points_.begin(), points_.begin() + n),
                    std::vector<double>(weights_.begin(), weights_.begin() + n));
}

double g_estimate(const GEstimator& est, const SpherePoint& y) {
  double sum = 0.0;
  for (std::size_t k = 0; k < est.size(); ++k) {
    sum += est.weights()[k] * std::cos(dist(y, est.points()[k]));
  }
  return sum / est.weight_sum();
}

Eigen::VectorXd g_gradient(const GEstimator& est, const SpherePoint& y) {
  // grad_y cos d(y, z) = z - <y, z> y
  Eigen::VectorXd grad = Eigen::VectorXd::Zero(y.ambient_dim());
  for (std::size_t k = 0; k < est.size(); ++k) {
    const Eigen::VectorXd& z = est.points()[k].coords();
    grad += est.weights()[k] * (z - y.coords().dot(z) * y.coords());
  }
  return grad / est.weight_sum();
}

SpherePoint g_maximize(const GEstimator& est, const AdmissibleCap& cap, double tol) {
  if (!(tol > 0.0)) throw DomainError("g maximization tolerance must be positive");
  require_same_dimension(est.points().front(), cap.center());
  DescentProblem problem{[&](const SpherePoint& y) { return g_deficit(est, y); },
                         [&](const SpherePoint& y) -> Eigen::VectorXd {
                           return -g_gradient(est, y);
                         },
                         cap.ball()};
  DescentOptions options;
  options.tol = tol;
  // The Riemannian Hessian of 1 - g at y is g(y) I, and g(y) >= cos(2r) when
  // the points and y share the cap.
  options.modulus = std::cos(2.0 * cap.radius());
  DescentResult run = projected_descent(problem, est.points().back(), options);
  if (!run.converged) throw SolverError("g maximization did not converge");
  return run.point;
}

}  // namespace vicinal
