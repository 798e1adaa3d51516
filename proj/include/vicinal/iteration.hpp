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

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "vicinal/functional.hpp"
#include "vicinal/mapping.hpp"
#include "vicinal/sphere.hpp"

namespace vicinal {

inline constexpr double kDefaultStopTol = 1e-10;
inline constexpr int kDefaultMaxIter = 10000;

enum class StopReason { kTolerance, kMaxIterations };

std::string_view stop_reason_name(StopReason reason);

/// Orbit x_0, x_1 = T x_0, ... of a Picard iteration.
struct IterationTrace {
  std::vector<SpherePoint> iterates;
  /// step_distances[n] = d(x_{n+1}, x_n).
  std::vector<double> step_distances;
  std::optional<SpherePoint> reference;
  /// d(x_n, reference) for every iterate, when a reference is set.
  std::vector<double> reference_distances;
  StopReason stop_reason = StopReason::kMaxIterations;

  const SpherePoint& last() const { return iterates.back(); }
};

/// Iterates T from x0 until a step shorter than stop_tol or max_iter steps.
/// Throws DomainError if x0 or any iterate leaves T's domain.
IterationTrace picard_trace(const MappingHandle& T, const SpherePoint& x0, int max_iter,
                            double stop_tol,
                            const std::optional<SpherePoint>& reference = std::nullopt);

/// (n, d(x_{n+1}, x_n)) for every recorded step. Throws DomainError when the
/// trace has fewer than two iterates.
std::vector<std::pair<std::size_t, double>> asymptotic_regularity_profile(
    const IterationTrace& trace);

struct PpaResult {
  IterationTrace trace;
  SpherePoint minimizer;
};

/// Proximal point algorithm: Picard iteration of the resolvent of f.
/// The last iterate is the minimizer estimate.
PpaResult ppa_run(const ConvexFunctional& f, const AdmissibleCap& cap, const SpherePoint& x0,
                  int max_iter = kDefaultMaxIter, double stop_tol = kDefaultStopTol,
                  double resolvent_tol = kDefaultResolventTol,
                  const std::optional<SpherePoint>& reference = std::nullopt);

enum class TailTransform { kCos, kIdentity, kNegation };
enum class TailMode { kLimsup, kLiminf };

/// transform(max values) for kLimsup, transform(min values) for kLiminf,
/// treating `values` as the whole tail. For a nonincreasing transform this
/// equals the min (resp. max) of the transformed values. kCos requires every
/// value in [0, pi/2]. Throws DomainError on empty input.
double tail_transform_stat(std::span<const double> values, TailTransform transform,
                           TailMode mode);

}  // namespace vicinal
