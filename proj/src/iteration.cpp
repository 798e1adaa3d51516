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

#include "vicinal/iteration.hpp"

#include <algorithm>
#include <cmath>

#include "vicinal/errors.hpp"

namespace vicinal {

std::string_view stop_reason_name(StopReason reason) {
  return reason == StopReason::kTolerance ? "tolerance" : "max_iter";
}

IterationTrace picard_trace(const MappingHandle& T, const SpherePoint& x0, int max_iter,
                            double stop_tol, const std::optional<SpherePoint>& reference) {
  if (max_iter < 1) throw DomainError("picard iteration needs max_iter >= 1");
  if (!(stop_tol >= 0.0)) throw DomainError("stop tolerance must be nonnegative");
  if (!contains(T.domain(), x0)) throw DomainError("starting point lies outside the domain");

  IterationTrace trace;
  trace.reference = reference;
  trace.iterates.push_back(x0);
  if (reference) trace.reference_distances.push_back(dist(x0, *reference));

  for (int n = 0; n < max_iter; ++n) {
    SpherePoint next = apply(T, trace.iterates.back());
    if (!contains(T.domain(), next)) {
      throw DomainError("iterate escaped the domain cap");
    }
    const double step = dist(next, trace.iterates.back());
    if (reference) trace.reference_distances.push_back(dist(next, *reference));
    trace.iterates.push_back(std::move(next));
    trace.step_distances.push_back(step);
    if (step < stop_tol) {
      trace.stop_reason = StopReason::kTolerance;
      return trace;
    }
  }
  trace.stop_reason = StopReason::kMaxIterations;
  return trace;
}

std::vector<std::pair<std::size_t, double>> asymptotic_regularity_profile(
    const IterationTrace& trace) {
  if (trace.iterates.size() < 2) {
    throw DomainError("asymptotic regularity profile needs at least two iterates");
  }
  std::vector<std::pair<std::size_t, double>> profile;
  profile.reserve(trace.step_distances.size());
  for (std::size_t n = 0; n < trace.step_distances.size(); ++n) {
    profile.emplace_back(n, trace.step_distances[n]);
  }
  return profile;
}

PpaResult ppa_run(const ConvexFunctional& f, const AdmissibleCap& cap, const SpherePoint& x0,
                  int max_iter, double stop_tol, double resolvent_tol,
                  const std::optional<SpherePoint>& reference) {
  const MappingHandle T = MappingHandle::resolvent_of(f, cap, resolvent_tol);
  IterationTrace trace = picard_trace(T, x0, max_iter, stop_tol, reference);
  SpherePoint minimizer = trace.last();
  return {std::move(trace), std::move(minimizer)};
}

double tail_transform_stat(std::span<const double> values, TailTransform transform,
                           TailMode mode) {
  if (values.empty()) throw DomainError("tail statistic needs a nonempty tail");
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double extreme = mode == TailMode::kLimsup ? *hi : *lo;
  switch (transform) {
    case TailTransform::kCos:
      if (*lo < 0.0 || *hi > kPi / 2) {
        throw DomainError("cos transform is monotone only on [0, pi/2]");
      }
      return std::cos(extreme);
    case TailTransform::kIdentity:
      return extreme;
    case TailTransform::kNegation:
      return -extreme;
  }
  return extreme;
}

}  // namespace vicinal
