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

#include <ostream>
#include <span>
#include <string>

#include "json.hpp"

#include "vicinal/asymptotic_center.hpp"
#include "vicinal/functional.hpp"
#include "vicinal/iteration.hpp"
#include "vicinal/mapping.hpp"
#include "vicinal/properties.hpp"
#include "vicinal/resolvent.hpp"
#include "vicinal/sphere.hpp"

namespace vicinal {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Serializes with sorted keys, no whitespace, and every floating-point
/// number printed with 17 significant digits, so equal values give equal
/// bytes. Non-finite doubles become null.
std::string canonical_dump(const Json& j);

/// 17-significant-digit rendering used by canonical_dump and the CSV writers.
std::string format_double(double value);

Json point_to_json(const SpherePoint& p);
/// Throws ConfigError on malformed input (including a non-unit vector).
SpherePoint point_from_json(const Json& j);

Json ball_to_json(const Ball& b);
Ball ball_from_json(const Json& j);
Json cap_to_json(const AdmissibleCap& cap);
AdmissibleCap cap_from_json(const Json& j);

/// {kind, anchors, radii, weights, terms}; kind is one of indicator-ball,
/// pull-to-point, neg-cos-dist, weighted-sum (underscores also accepted).
Json functional_to_json(const ConvexFunctional& f);
ConvexFunctional functional_from_json(const Json& j);

/// {kind: identity | resolvent | projection | example-3-2 | composition, ...}.
/// The domain of example-3-2 is S_r[anchor]; every other kind uses `domain`.
Json mapping_to_json(const MappingHandle& T);
MappingHandle mapping_from_json(const Json& j, const AdmissibleCap& domain);

Json extended_real_to_json(ExtendedReal v);
Json resolvent_result_to_json(const ResolventResult& r);
Json report_to_json(const PropertyReport& r);
Json trace_to_json(const IterationTrace& trace);
Json center_to_json(const AsymptoticCenterEstimate& est);
Json feasibility_to_json(const Example32Feasibility& f);

/// Header "n,step_dist,dist_to_ref,x0,x1,...". Row n carries
/// d(x_n, x_{n-1}) (empty for n = 0) and d(x_n, ref) (empty without a
/// reference).
void write_trace_csv(std::ostream& out, const IterationTrace& trace);

/// Header "x,y,lhs,rhs,residual"; points are quoted JSON arrays.
void write_samples_csv(std::ostream& out, std::span<const ResidualSample> samples);

}  // namespace vicinal
