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

#include "vicinal/asymptotic_center.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "vicinal/descent.hpp"
#include "vicinal/errors.hpp"

namespace vicinal {

namespace {

constexpr double kInitialSharpness = 10.0;
constexpr double kFinalSharpness = 1e4;
constexpr int kMaxPolishSweeps = 100000;

double max_distance(std::span<const SpherePoint> tail, const SpherePoint& y) {
  double worst = 0.0;
  for (const auto& x : tail) worst = std::max(worst, dist(x, y));
  return worst;
}

// (1/s) log sum_k exp(s h_k) with h_k = 1 - cos d(x_k, y) = |y - x_k|^2 / 2.
DescentProblem smoothed_problem(std::span<const SpherePoint> tail, double sharpness,
                                const Ball& feasible) {
  auto heights = [tail](const SpherePoint& y) {
    std::vector<double> h;
    h.reserve(tail.size());
    for (const auto& x : tail) h.push_back(0.5 * (y.coords() - x.coords()).squaredNorm());
    return h;
  };
  auto value = [heights, sharpness](const SpherePoint& y) {
    const std::vector<double> h = heights(y);
    const double top = *std::max_element(h.begin(), h.end());
    double sum = 0.0;
    for (double v : h) sum += std::exp(sharpness * (v - top));
    return top + std::log(sum) / sharpness;
  };
  auto gradient = [tail, heights, sharpness](const SpherePoint& y) -> Eigen::VectorXd {
    const std::vector<double> h = heights(y);
    const double top = *std::max_element(h.begin(), h.end());
    Eigen::VectorXd grad = Eigen::VectorXd::Zero(y.ambient_dim());
    double total = 0.0;
    for (std::size_t k = 0; k < tail.size(); ++k) {
      const double w = std::exp(sharpness * (h[k] - top));
      const Eigen::VectorXd& x = tail[k].coords();
      // grad_y (1 - <y, x>) = -(x - <y, x> y)
      grad -= w * (x - y.coords().dot(x) * y.coords());
      total += w;
    }
    return grad / total;
  };
  return {value, gradient, feasible};
}

struct PolishResult {
  Eigen::VectorXd direction;
  bool converged;
};

// Hildreth's coordinate ascent on the dual of
//   min |w|^2 / 2  subject to  <x_k, w> >= 1,
// whose solution direction maximizes min_k <x_k, y>, i.e. minimizes the
// largest distance.
PolishResult polish_minimax(std::span<const SpherePoint> tail) {
  const Eigen::Index n = tail.front().ambient_dim();
  std::vector<double> multipliers(tail.size(), 0.0);
  Eigen::VectorXd w = Eigen::VectorXd::Zero(n);
  for (int sweep = 0; sweep < kMaxPolishSweeps; ++sweep) {
    const Eigen::VectorXd before = w;
    for (std::size_t k = 0; k < tail.size(); ++k) {
      const Eigen::VectorXd& x = tail[k].coords();
      const double updated = std::max(0.0, multipliers[k] + 1.0 - x.dot(w));
      w += (updated - multipliers[k]) * x;
      multipliers[k] = updated;
    }
    if ((w - before).norm() <= 1e-15 * w.norm()) return {w, true};
  }
  return {w, false};
}

}  // namespace

AsymptoticCenterEstimate asymptotic_center(std::span<const SpherePoint> points,
                                           std::size_t tail_start, const AdmissibleCap& cap,
                                           double tol) {
  if (tail_start >= points.size()) {
    throw DomainError("tail start must be smaller than the sequence length");
  }
  if (!(tol > 0.0)) throw DomainError("asymptotic center tolerance must be positive");
  const std::span<const SpherePoint> tail = points.subspan(tail_start);
  for (const auto& x : tail) require_same_dimension(x, cap.center());
  const std::size_t window = tail.size();

  Eigen::VectorXd mean = Eigen::VectorXd::Zero(cap.ambient_dim());
  for (const auto& x : tail) mean += x.coords();
  SpherePoint start = mean.norm() > 0.0 ? SpherePoint::normalized(mean) : tail.front();
  start = project_onto_ball(cap.ball(), start);

  SpherePoint smoothed = start;
  bool smoothing_converged = false;
  DescentOptions options;
  options.tol = tol;
  for (double s = kInitialSharpness;; s = std::min(2.0 * s, kFinalSharpness)) {
    DescentResult stage = projected_descent(smoothed_problem(tail, s, cap.ball()), smoothed,
                                            options);
    smoothed = stage.point;
    smoothing_converged = stage.converged;
    if (s == kFinalSharpness) break;
  }

  SpherePoint best = smoothed;
  double best_radius = max_distance(tail, smoothed);

  const PolishResult polish = polish_minimax(tail);
  if (polish.direction.norm() > 0.0) {
    SpherePoint polished =
        project_onto_ball(cap.ball(), SpherePoint::normalized(polish.direction));
    const double polished_radius = max_distance(tail, polished);
    if (polished_radius < best_radius) {
      best = std::move(polished);
      best_radius = polished_radius;
    }
  }
  if (!smoothing_converged && !polish.converged) {
    throw SolverError("asymptotic center: neither smoothing nor polish converged");
  }
  return {std::move(best), best_radius, tail_start, window};
}

double spherical_boundedness_margin(std::span<const SpherePoint> points,
                                    std::size_t tail_start, const AdmissibleCap& cap) {
  return kPi / 2 - asymptotic_center(points, tail_start, cap).radius;
}

}  // namespace vicinal
