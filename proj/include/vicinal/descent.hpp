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

#include <functional>

#include <Eigen/Core>

#include "vicinal/sphere.hpp"

namespace vicinal {

/// Smooth objective on the sphere restricted to a closed ball.
struct DescentProblem {
  std::function<double(const SpherePoint&)> value;
  /// Riemannian gradient (tangent at the argument).
  std::function<Eigen::VectorXd(const SpherePoint&)> gradient;
  Ball feasible;
};

struct DescentOptions {
  /// Stop once the gradient-mapping norm d(y, y+) / step falls below this.
  double tol = 1e-10;
  int max_iterations = 10000;
  double initial_step = 0.5;
  double max_step = 4.0;
  /// Lower bound on the geodesic strong-convexity modulus of the objective,
  /// or 0 when none is known. Used to verify progress once objective
  /// decreases fall below rounding.
  double modulus = 0.0;
};

struct DescentResult {
  SpherePoint point;
  double value;
  int iterations;
  double gradient_norm;
  bool converged;
};

/// Projected Riemannian gradient descent with backtracking:
///   y+ = P_feasible(exp_y(-t grad F(y))).
/// A step is accepted on sufficient decrease of F. When the decrease is lost
/// in rounding, it is accepted only if the following step contracts.
/// Never throws on non-convergence; callers inspect `converged`.
DescentResult projected_descent(const DescentProblem& problem, const SpherePoint& start,
                                const DescentOptions& options = {});

/// Metric projection onto a closed ball: x itself when inside, otherwise the
/// point at distance `radius` from the center along the geodesic toward x.
SpherePoint project_onto_ball(const Ball& ball, const SpherePoint& x);

}  // namespace vicinal
