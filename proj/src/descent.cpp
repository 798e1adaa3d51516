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

#include "vicinal/descent.hpp"

#include <algorithm>
#include <cmath>

namespace vicinal {

namespace {

constexpr double kMinStep = 1e-14;

// Objective differences below this are indistinguishable from rounding.
double rounding_slack(double value) { return 1e-15 * std::max(1.0, std::abs(value)); }

}  // namespace

SpherePoint project_onto_ball(const Ball& ball, const SpherePoint& x) {
  const double d = dist(ball.center, x);
  if (d <= ball.radius + kMembershipSlack) return x;
  if (ball.radius == 0.0) return ball.center;
  return geodesic_point(ball.center, x, 1.0 - ball.radius / d);
}

DescentResult projected_descent(const DescentProblem& problem, const SpherePoint& start,
                                const DescentOptions& options) {
  SpherePoint y = project_onto_ball(problem.feasible, start);
  double value = problem.value(y);
  Eigen::VectorXd grad = problem.gradient(y);
  double step = options.initial_step;
  double gradient_mapping = 0.0;

  for (int iteration = 0; iteration < options.max_iterations; ++iteration) {
    for (;;) {
      SpherePoint candidate = project_onto_ball(problem.feasible, exp_map(y, -step * grad));
      const double moved = dist(y, candidate);
      if (moved == 0.0) {
        // Either the gradient vanished or it points straight out of the ball.
        return {y, value, iteration, 0.0, true};
      }
      const double candidate_value = problem.value(candidate);
      const double slack = rounding_slack(value);
      bool accept = candidate_value <= value - moved * moved / (2.0 * step) + slack;
      const bool informative = value - candidate_value > 100.0 * slack;
      Eigen::VectorXd candidate_grad = problem.gradient(candidate);
      if (accept && !informative) {
        // Near the minimizer objective values drown in rounding. For a
        // strongly convex objective with modulus mu and a small enough step
        // the projected gradient map contracts by 1 - mu t, so require the
        // next step from the candidate to shrink by at least 1 - mu t / 4.
        const SpherePoint next =
            project_onto_ball(problem.feasible, exp_map(candidate, -step * candidate_grad));
        const double next_moved = dist(candidate, next);
        accept = options.modulus > 0.0
                     ? next_moved <= (1.0 - 0.25 * options.modulus * step) * moved
                     : next_moved < moved;
      }
      if (accept) {
        gradient_mapping = moved / step;
        y = std::move(candidate);
        value = candidate_value;
        grad = std::move(candidate_grad);
        if (gradient_mapping <= options.tol) {
          return {y, value, iteration + 1, gradient_mapping, true};
        }
        if (informative) step = std::min(2.0 * step, options.max_step);
        break;
      }
      step *= 0.5;
      if (step < kMinStep) return {y, value, iteration, gradient_mapping, false};
    }
  }
  return {y, value, options.max_iterations, gradient_mapping, false};
}

}  // namespace vicinal
