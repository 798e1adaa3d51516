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

#pragma once

#include <span>
#include <vector>

#include "vicinal/descent.hpp"
#include "vicinal/sphere.hpp"

namespace vicinal {

/// Finite truncation of the weighted average
///
///   g(y) = (1 / sigma_n) sum_{k <= n} beta_k cos d(y, z_k),
///   sigma_n = beta_1 + ... + beta_n,
///
/// whose liminf over n is concave, nonexpansive and uniquely maximized on an
/// admissible space.
class GEstimator {
 public:
  /// Throws DomainError on empty input, size mismatch, nonpositive weights or
  /// points of mixed dimension.
  GEstimator(std::vector<SpherePoint> points, std::vector<double> weights);

  /// Weights from an orbit x_1, x_2, ... of some T: beta_k =
  /// C^2 / (1 + C^2) with C = cos d(x_{k+1}, x_k), and z_k = x_{k+1}.
  /// Uses iterates[start], iterates[start + 1], ...; needs at least two.
  static GEstimator from_orbit(std::span<const SpherePoint> iterates, std::size_t start = 0);

  std::size_t size() const { return points_.size(); }
  const std::vector<SpherePoint>& points() const { return points_; }
  const std::vector<double>& weights() const { return weights_; }
  /// sigma_1 .. sigma_n.
  const std::vector<double>& partial_sums() const { return partial_sums_; }
  double weight_sum() const { return partial_sums_.back(); }

  /// The first n terms. Throws DomainError unless 1 <= n <= size().
  GEstimator truncated(std::size_t n) const;

 private:
  std::vector<SpherePoint> points_;
  std::vector<double> weights_;
  std::vector<double> partial_sums_;
};

double g_estimate(const GEstimator& est, const SpherePoint& y);

/// Riemannian gradient of g_estimate at y.
Eigen::VectorXd g_gradient(const GEstimator& est, const SpherePoint& y);

/// Maximizer of g_estimate over `cap`, found by projected descent on 1 - g.
/// Throws SolverError on non-convergence.
SpherePoint g_maximize(const GEstimator& est, const AdmissibleCap& cap, double tol = 1e-12);

}  // namespace vicinal
