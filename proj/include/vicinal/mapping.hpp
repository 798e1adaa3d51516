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
#include <utility>
#include <vector>

#include "vicinal/functional.hpp"
#include "vicinal/resolvent.hpp"
#include "vicinal/sphere.hpp"

namespace vicinal {

enum class MappingKind { kIdentity, kResolvent, kProjection, kExample32, kComposition };

/// Parameters of the discontinuous spherically nonspreading example:
/// X = S_r[p], C = S_{pi/8}[p], B = S_{delta pi/8}[p], A = {p}, and
/// T = P_A on C, T = P_B on X \ C.
struct Example32Params {
  SpherePoint anchor;
  double r;
  double delta;
};

/// Both sides of the parameter constraint cos(pi/8) <= cos^2(delta pi/8),
/// evaluated at runtime, together with the range checks on r and delta.
struct Example32Feasibility {
  double cos_pi_over_8;
  double cos_sq_delta_pi_over_8;
  bool radius_in_range;  // pi/8 < r < pi/4
  bool delta_in_range;   // 0 < delta < 1
  bool feasible;
};

Example32Feasibility example_3_2_feasibility(double r, double delta);

/// An immutable self-map of an admissible cap.
class MappingHandle {
 public:
  static MappingHandle identity(AdmissibleCap domain);
  static MappingHandle resolvent_of(ConvexFunctional f, AdmissibleCap domain,
                                    double tol = kDefaultResolventTol);
  /// Metric projection onto `ball`, which must lie inside `domain`.
  static MappingHandle projection_onto(Ball ball, AdmissibleCap domain);
  /// Applies `maps` left to right; all parts must share one domain.
  static MappingHandle composition(std::vector<MappingHandle> maps);

  MappingKind kind() const { return kind_; }
  const AdmissibleCap& domain() const { return domain_; }

  const ConvexFunctional& functional() const;
  double resolvent_tol() const;
  const Ball& ball() const;
  const Example32Params& example() const;
  const std::vector<MappingHandle>& parts() const { return parts_; }

  friend MappingHandle make_example_3_2(SpherePoint p, double r, double delta);

 private:
  MappingHandle(MappingKind kind, AdmissibleCap domain) : kind_(kind), domain_(std::move(domain)) {}

  MappingKind kind_;
  AdmissibleCap domain_;
  std::optional<ConvexFunctional> functional_;
  double tol_ = kDefaultResolventTol;
  std::optional<Ball> ball_;
  std::optional<Example32Params> example_;
  std::vector<MappingHandle> parts_;
};

/// Builds the example mapping on X = S_r[p]. Throws DomainError when
/// example_3_2_feasibility(r, delta).feasible is false.
MappingHandle make_example_3_2(SpherePoint p, double r, double delta);

/// T x. Throws DomainError when x is outside the mapping's domain.
SpherePoint apply(const MappingHandle& T, const SpherePoint& x);

/// C_z = cos d(T z, z).
double displacement_cosine(const MappingHandle& T, const SpherePoint& z);

/// For the example mapping: x_in on the boundary of C and x_out at distance
/// pi/8 + gap from p on the same ray. T jumps by delta pi/8 between them.
std::pair<SpherePoint, SpherePoint> example_3_2_boundary_pair(const MappingHandle& T,
                                                              double gap);

}  // namespace vicinal
