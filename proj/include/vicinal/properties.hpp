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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vicinal/mapping.hpp"
#include "vicinal/sphere.hpp"

namespace vicinal {

/// Inequality classes a mapping can be tested against. The pairwise ones
/// take two arbitrary points; the last two take a point and a fixed point.
enum class Property {
  kVicinal,
  kFirmlyVicinal,
  kSphericallyNonspreading,
  kFirmlySphericallyNonspreading,
  kQuasiNonexpansive,
  kFixedPointPull,
};

std::string_view property_name(Property property);
/// Accepts the names returned by property_name. Throws ConfigError otherwise.
Property parse_property(std::string_view name);
bool needs_fixed_point(Property property);

/// Both sides of one inequality instance; residual = lhs - rhs.
struct ResidualSample {
  SpherePoint x;
  SpherePoint y;
  double lhs;
  double rhs;
  double residual;
};

/// A pair together with its images under T.
struct MappedPair {
  SpherePoint x;
  SpherePoint y;
  SpherePoint tx;
  SpherePoint ty;
};

MappedPair map_pair(const MappingHandle& T, const SpherePoint& x, const SpherePoint& y);

/// Residual of `property` on a mapped pair, with every distance measured in
/// the kappa-model and brought back to the unit sphere by rescale_to_unit
/// before taking cosines. For kappa = 1 this is the plain spherical form.
///
/// For the fixed-point properties `pair.y` must be the fixed point.
ResidualSample residual_from_images(Property property, const MappedPair& pair,
                                    const KappaModel& model = KappaModel(1.0));

ResidualSample vicinal_residual(const MappingHandle& T, const SpherePoint& x,
                                const SpherePoint& y);
ResidualSample firmly_vicinal_residual(const MappingHandle& T, const SpherePoint& x,
                                       const SpherePoint& y);
ResidualSample spherically_nonspreading_residual(const MappingHandle& T,
                                                 const SpherePoint& x, const SpherePoint& y);
ResidualSample firmly_sph_nonspreading_residual(const MappingHandle& T,
                                                const SpherePoint& x, const SpherePoint& y);

/// cos d(Tx, x) cos d(Tx, y) - cos d(x, y) for a fixed point y.
/// Throws DomainError unless d(Ty, y) <= 1e-10.
double fixed_point_pull_residual(const MappingHandle& T, const SpherePoint& x,
                                 const SpherePoint& y);

/// d(x, y) - d(Tx, y) for a fixed point y. Same fixed-point check.
double quasi_nonexpansive_residual(const MappingHandle& T, const SpherePoint& x,
                                   const SpherePoint& y);

struct PropertyReport {
  std::string property;
  std::size_t samples;
  double min_residual;
  std::size_t violations;
  double tolerance;
  std::uint64_t seed;
  double kappa;
  /// Pair attaining min_residual.
  std::optional<std::pair<SpherePoint, SpherePoint>> worst_pair;
};

inline constexpr double kDefaultResidualTolerance = 1e-9;

struct CheckOptions {
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
  double tolerance = kDefaultResidualTolerance;
  double kappa = 1.0;
  /// Required by the fixed-point properties.
  std::optional<SpherePoint> fixed_point;
};

/// Deterministic sample pairs from T's domain. For the example mapping the
/// pairs cycle through three strata: one point in C and one outside, both in
/// C, and both in X \ C. The cross stratum therefore holds at least a third
/// of the pairs. Other mappings get plain independent pairs.
std::vector<std::pair<SpherePoint, SpherePoint>> sample_pairs(const MappingHandle& T,
                                                              std::size_t count,
                                                              std::uint64_t seed);

/// Evaluates every property on one shared sample set. When `samples_out` is
/// given it receives one vector of ResidualSample per property.
std::vector<PropertyReport> check_properties(
    const MappingHandle& T, std::span<const Property> properties, const CheckOptions& options,
    std::vector<std::vector<ResidualSample>>* samples_out = nullptr);

PropertyReport check_property(const MappingHandle& T, Property property,
                              const CheckOptions& options,
                              std::vector<ResidualSample>* samples_out = nullptr);

}  // namespace vicinal
