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

#include "vicinal/descent.hpp"
#include "vicinal/functional.hpp"
#include "vicinal/sphere.hpp"

namespace vicinal {

inline constexpr double kDefaultResolventTol = 1e-10;
inline constexpr int kDefaultResolventMaxIterations = 10000;

struct ResolventResult {
  SpherePoint point;
  double objective_value;
  int iterations;
  double gradient_norm_at_exit;
};

/// f(y) + tan d(y, x) sin d(y, x). Throws DomainError when d(y, x) >= pi/2.
ExtendedReal resolvent_objective(const ConvexFunctional& f, const SpherePoint& x,
                                 const SpherePoint& y);

/// Metric projection P_C onto a closed ball C.
SpherePoint metric_projection(const Ball& ball, const SpherePoint& x);

/// The resolvent R_f x: the unique minimizer over `cap` of
/// y -> f(y) + tan d(y, x) sin d(y, x), to within `tol` in distance.
///
/// Pure indicator functionals are answered by the closed-form projection.
/// Everything else runs projected Riemannian descent on the smooth part,
/// projecting onto the indicator ball when present and onto the cap
/// otherwise. Throws SolverError if the iteration cap is reached.
ResolventResult resolve(const ConvexFunctional& f, const AdmissibleCap& cap,
                        const SpherePoint& x, double tol = kDefaultResolventTol,
                        int max_iterations = kDefaultResolventMaxIterations);

}  // namespace vicinal
