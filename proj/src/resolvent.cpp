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

#include "vicinal/resolvent.hpp"

#include <sstream>

#include "vicinal/errors.hpp"

namespace vicinal {

ExtendedReal resolvent_objective(const ConvexFunctional& f, const SpherePoint& x,
                                 const SpherePoint& y) {
  const double d = dist(y, x);
  if (!(d < kPi / 2)) throw DomainError("resolvent objective needs d(y, x) < pi/2");
  return evaluate(f, y) + ExtendedReal(penalty(d));
}

SpherePoint metric_projection(const Ball& ball, const SpherePoint& x) {
  return project_onto_ball(ball, x);
}

ResolventResult resolve(const ConvexFunctional& f, const AdmissibleCap& cap,
                        const SpherePoint& x, double tol, int max_iterations) {
  if (!(tol > 0.0)) throw DomainError("resolvent tolerance must be positive");
  validate_on(f, cap);
  require_same_dimension(x, cap.center());
  if (!contains(cap, x)) throw DomainError("resolvent input must lie in the cap");

  const std::optional<Ball> constraint = f.constraint_ball();
  const Ball feasible = constraint ? *constraint : cap.ball();

  if (f.is_pure_indicator()) {
    SpherePoint p = metric_projection(feasible, x);
    const double value = resolvent_objective(f, x, p).value();
    return {std::move(p), value, 0, 0.0};
  }

  DescentProblem problem{
      [&](const SpherePoint& y) { return smooth_value(f, y) + penalty(dist(y, x)); },
      [&](const SpherePoint& y) -> Eigen::VectorXd {
        Eigen::VectorXd grad = smooth_gradient(f, y);
        const Eigen::VectorXd to_x = log_map(y, x);
        const double d = to_x.norm();
        if (d > 0.0) grad -= (penalty_derivative(d) / d) * to_x;
        return grad;
      },
      feasible};
  DescentOptions options;
  options.tol = tol;
  options.max_iterations = max_iterations;
  // tan t sin t has second derivative at least 2, so F is 2-strongly convex.
  options.modulus = 2.0;
  DescentResult run = projected_descent(problem, x, options);
  if (!run.converged) {
    std::ostringstream msg;
    msg.precision(3);
    msg << "resolvent solver did not converge after " << run.iterations
        << " iterations (gradient mapping " << run.gradient_norm << ")";
    throw SolverError(msg.str());
  }
  const double value = resolvent_objective(f, x, run.point).value();
  return {std::move(run.point), value, run.iterations, run.gradient_norm};
}

}  // namespace vicinal
