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

#include "vicinal/properties.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "vicinal/errors.hpp"

namespace vicinal {

namespace {

constexpr double kFixedPointSlack = 1e-10;

constexpr std::array<std::pair<Property, std::string_view>, 6> kPropertyNames{{
    {Property::kVicinal, "vicinal"},
    {Property::kFirmlyVicinal, "firmly-vicinal"},
    {Property::kSphericallyNonspreading, "spherically-nonspreading"},
    {Property::kFirmlySphericallyNonspreading, "firmly-spherically-nonspreading"},
    {Property::kQuasiNonexpansive, "quasi-nonexpansive"},
    {Property::kFixedPointPull, "fixed-point-pull"},
}};

// Distance measured in the kappa-model, carried back to the unit sphere.
double unit_dist(const KappaModel& model, const SpherePoint& a, const SpherePoint& b) {
  return model.rescale_to_unit(model.dist(a, b));
}

double unit_cos(const KappaModel& model, const SpherePoint& a, const SpherePoint& b) {
  return std::cos(unit_dist(model, a, b));
}

ResidualSample make_sample(const MappedPair& pair, double lhs, double rhs) {
  return {pair.x, pair.y, lhs, rhs, lhs - rhs};
}

void require_fixed(const SpherePoint& y, const SpherePoint& ty) {
  if (dist(y, ty) > kFixedPointSlack) {
    throw DomainError("reference point is not a fixed point of the mapping");
  }
}

}  // namespace

std::string_view property_name(Property property) {
  for (const auto& [p, name] : kPropertyNames) {
    if (p == property) return name;
  }
  return "unknown";
}

Property parse_property(std::string_view name) {
  for (const auto& [p, known] : kPropertyNames) {
    if (known == name) return p;
  }
  throw ConfigError("unknown property: " + std::string(name));
}

bool needs_fixed_point(Property property) {
  return property == Property::kQuasiNonexpansive || property == Property::kFixedPointPull;
}

MappedPair map_pair(const MappingHandle& T, const SpherePoint& x, const SpherePoint& y) {
  return {x, y, apply(T, x), apply(T, y)};
}

ResidualSample residual_from_images(Property property, const MappedPair& pair,
                                    const KappaModel& model) {
  const auto& [x, y, tx, ty] = pair;
  switch (property) {
    case Property::kVicinal:
    case Property::kFirmlyVicinal: {
      const double cx = unit_cos(model, tx, x);
      const double cy = unit_cos(model, ty, y);
      const double wx = cx * cx * (1.0 + cy * cy);
      const double wy = cy * cy * (1.0 + cx * cx);
      const double coefficient =
          property == Property::kVicinal ? wx + wy : wx * cy + wy * cx;
      const double lhs = coefficient * unit_cos(model, tx, ty);
      const double rhs = wx * unit_cos(model, tx, y) + wy * unit_cos(model, ty, x);
      return make_sample(pair, lhs, rhs);
    }
    case Property::kSphericallyNonspreading:
    case Property::kFirmlySphericallyNonspreading: {
      const double c = unit_cos(model, tx, ty);
      const double cross = unit_cos(model, tx, y) * unit_cos(model, ty, x);
      if (property == Property::kSphericallyNonspreading) {
        return make_sample(pair, c * c, cross);
      }
      const double weight = unit_cos(model, tx, x) + unit_cos(model, ty, y);
      return make_sample(pair, weight * c * c, 2.0 * cross);
    }
    case Property::kQuasiNonexpansive:
      require_fixed(y, ty);
      return make_sample(pair, unit_dist(model, x, y), unit_dist(model, tx, y));
    case Property::kFixedPointPull:
      require_fixed(y, ty);
      return make_sample(pair, unit_cos(model, tx, x) * unit_cos(model, tx, y),
                         unit_cos(model, x, y));
  }
  throw DomainError("unknown property");
}

ResidualSample vicinal_residual(const MappingHandle& T, const SpherePoint& x,
                                const SpherePoint& y) {
  return residual_from_images(Property::kVicinal, map_pair(T, x, y));
}

ResidualSample firmly_vicinal_residual(const MappingHandle& T, const SpherePoint& x,
                                       const SpherePoint& y) {
  return residual_from_images(Property::kFirmlyVicinal, map_pair(T, x, y));
}

ResidualSample spherically_nonspreading_residual(const MappingHandle& T,
                                                 const SpherePoint& x, const SpherePoint& y) {
  return residual_from_images(Property::kSphericallyNonspreading, map_pair(T, x, y));
}

ResidualSample firmly_sph_nonspreading_residual(const MappingHandle& T,
                                                const SpherePoint& x, const SpherePoint& y) {
  return residual_from_images(Property::kFirmlySphericallyNonspreading, map_pair(T, x, y));
}

double fixed_point_pull_residual(const MappingHandle& T, const SpherePoint& x,
                                 const SpherePoint& y) {
  return residual_from_images(Property::kFixedPointPull, map_pair(T, x, y)).residual;
}

double quasi_nonexpansive_residual(const MappingHandle& T, const SpherePoint& x,
                                   const SpherePoint& y) {
  return residual_from_images(Property::kQuasiNonexpansive, map_pair(T, x, y)).residual;
}

std::vector<std::pair<SpherePoint, SpherePoint>> sample_pairs(const MappingHandle& T,
                                                              std::size_t count,
                                                              std::uint64_t seed) {
  Rng rng(seed);
  const Ball& whole = T.domain().ball();
  std::vector<std::pair<SpherePoint, SpherePoint>> pairs;
  pairs.reserve(count);

  if (T.kind() != MappingKind::kExample32) {
    for (std::size_t i = 0; i < count; ++i) {
      SpherePoint x = sample_in_ball(whole, rng);
      SpherePoint y = sample_in_ball(whole, rng);
      pairs.emplace_back(std::move(x), std::move(y));
    }
    return pairs;
  }

  const Ball inner(T.example().anchor, kPi / 8);
  auto draw_inner = [&] { return sample_in_ball(inner, rng); };
  auto draw_outer = [&] {
    for (;;) {
      SpherePoint z = sample_in_ball(whole, rng);
      if (!contains(inner, z)) return z;
    }
  };
  for (std::size_t i = 0; i < count; ++i) {
    // Cross pairs come first in each group of three so that they receive
    // the remainder when count is not a multiple of three.
    switch (i % 3) {
      case 0: {
        SpherePoint x = draw_outer();
        SpherePoint y = draw_inner();
        // Alternate which slot holds the outer point.
        if ((i / 3) % 2 == 0) {
          pairs.emplace_back(std::move(x), std::move(y));
        } else {
          pairs.emplace_back(std::move(y), std::move(x));
        }
        break;
      }
      case 1: {
        SpherePoint x = draw_inner();
        pairs.emplace_back(std::move(x), draw_inner());
        break;
      }
      default: {
        SpherePoint x = draw_outer();
        pairs.emplace_back(std::move(x), draw_outer());
        break;
      }
    }
  }
  return pairs;
}

std::vector<PropertyReport> check_properties(
    const MappingHandle& T, std::span<const Property> properties, const CheckOptions& options,
    std::vector<std::vector<ResidualSample>>* samples_out) {
  const KappaModel model(options.kappa);
  bool any_fixed = false;
  for (Property p : properties) any_fixed = any_fixed || needs_fixed_point(p);

  std::optional<SpherePoint> fixed_image;
  if (any_fixed) {
    if (!options.fixed_point) {
      throw ConfigError("quasi-nonexpansive and fixed-point-pull checks need a fixed point");
    }
    fixed_image = apply(T, *options.fixed_point);
    require_fixed(*options.fixed_point, *fixed_image);
  }

  const auto pairs = sample_pairs(T, options.samples, options.seed);

  std::vector<PropertyReport> reports;
  for (Property p : properties) {
    reports.push_back({std::string(property_name(p)), options.samples,
                       std::numeric_limits<double>::infinity(), 0, options.tolerance,
                       options.seed, options.kappa, std::nullopt});
  }
  if (samples_out) {
    samples_out->assign(properties.size(), {});
    for (auto& v : *samples_out) v.reserve(pairs.size());
  }

  for (const auto& [x, y] : pairs) {
    const SpherePoint tx = apply(T, x);
    std::optional<MappedPair> pair_images;
    std::optional<MappedPair> fixed_images;
    for (std::size_t k = 0; k < properties.size(); ++k) {
      const Property p = properties[k];
      const MappedPair* images = nullptr;
      if (needs_fixed_point(p)) {
        if (!fixed_images) fixed_images = MappedPair{x, *options.fixed_point, tx, *fixed_image};
        images = &*fixed_images;
      } else {
        if (!pair_images) pair_images = MappedPair{x, y, tx, apply(T, y)};
        images = &*pair_images;
      }
      ResidualSample sample = residual_from_images(p, *images, model);
      PropertyReport& report = reports[k];
      if (sample.residual < report.min_residual) {
        report.min_residual = sample.residual;
        report.worst_pair.emplace(sample.x, sample.y);
      }
      if (sample.residual < -options.tolerance) ++report.violations;
      if (samples_out) (*samples_out)[k].push_back(std::move(sample));
    }
  }
  return reports;
}

PropertyReport check_property(const MappingHandle& T, Property property,
                              const CheckOptions& options,
                              std::vector<ResidualSample>* samples_out) {
  std::vector<std::vector<ResidualSample>> all;
  auto reports = check_properties(T, std::span<const Property>(&property, 1), options,
                                   samples_out ? &all : nullptr);
  if (samples_out) *samples_out = std::move(all.front());
  return std::move(reports.front());
}

}  // namespace vicinal
