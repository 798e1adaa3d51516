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

#include "vicinal/sphere.hpp"

namespace vicinal {

struct AsymptoticCenterEstimate {
  SpherePoint center;
  /// max_{k >= tail_start} d(x_k, center).
  double radius;
  std::size_t tail_start;
  std::size_t window;
};

/// Minimizer over `cap` of y -> max_{k >= tail_start} d(x_k, y), the finite
/// stand-in for the asymptotic center of the sequence.
///
/// Stage one minimizes the log-sum-exp smoothing of max (1 - cos d(x_k, y))
/// (same minimizer as the max of distances) with sharpness ramped x2 from
/// 10 to 1e4, warm-starting each stage. Stage two polishes on the direct
/// max through the dual of min |w|^2 s.t. <x_k, w> >= 1, whose solution
/// direction is the exact minimax point. The better of the two is returned.
///
/// Throws DomainError when tail_start >= points.size() and SolverError when
/// neither stage converges.
AsymptoticCenterEstimate asymptotic_center(std::span<const SpherePoint> points,
                                           std::size_t tail_start, const AdmissibleCap& cap,
                                           double tol = 1e-10);

/// pi/2 minus the asymptotic-center radius of the tail. Positive means the
/// sequence is (empirically) spherically bounded.
double spherical_boundedness_margin(std::span<const SpherePoint> points,
                                    std::size_t tail_start, const AdmissibleCap& cap);

}  // namespace vicinal
