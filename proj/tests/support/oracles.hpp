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

// Independent reference computations used by the unit and acceptance tests.
// Everything here is written from textbook formulas on raw coordinates, so
// it shares no code path with the library routines it checks.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "vicinal/functional.hpp"
#include "vicinal/sphere.hpp"

namespace vicinal::oracle {

inline constexpr double kPiOracle = 3.14159265358979323846;

/// Great-circle distance by the clamped arccosine of the inner product.
inline double acos_dist(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  const double c = std::clamp(x.dot(y) / (x.norm() * y.norm()), -1.0, 1.0);
  return std::acos(c);
}

inline double acos_dist(const SpherePoint& x, const SpherePoint& y) {
  return acos_dist(x.coords(), y.coords());
}

/// Classic slerp: the point at fraction s of the way from x to y.
inline Eigen::VectorXd slerp(const Eigen::VectorXd& x, const Eigen::VectorXd& y, double s) {
  const double omega = acos_dist(x, y);
  if (omega == 0.0) return x;
  return (std::sin((1.0 - s) * omega) * x + std::sin(s * omega) * y) / std::sin(omega);
}

/// Unit vector e_i in R^ambient.
inline Eigen::VectorXd unit(Eigen::Index ambient, Eigen::Index i) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(ambient);
  v(i) = 1.0;
  return v;
}

/// The point cos(t) p + sin(t) u, where u is the unit part of `direction`
/// orthogonal to p.
inline SpherePoint at_distance(const SpherePoint& p, const Eigen::VectorXd& direction, double t) {
  Eigen::VectorXd u = direction - direction.dot(p.coords()) * p.coords();
  u.normalize();
  return SpherePoint::normalized(std::cos(t) * p.coords() + std::sin(t) * u);
}

/// tan t sin t evaluated from its definition.
inline double tan_sin(double t) { return std::tan(t) * std::sin(t); }

/// One catalog functional with a known minimizer.
struct CatalogEntry {
  std::string name;
  ConvexFunctional f;
  SpherePoint minimizer;
};

/// Four functionals on a cap centred at p, one of each kind, placed with
/// tangent offsets along e_1 and e_2. The weighted sum pulls toward a point
/// at distance 0.5 along e_1 while confined to S_{0.2}[p], so its minimizer
/// is the projection, at distance 0.2 along e_1.
inline std::vector<CatalogEntry> catalog(const AdmissibleCap& cap) {
  const SpherePoint& p = cap.center();
  const Eigen::Index n = cap.ambient_dim();
  const Eigen::VectorXd e1 = unit(n, 1);
  const Eigen::VectorXd e2 = unit(n, 2);
  const SpherePoint ball_center = at_distance(p, e1, 0.15);
  const SpherePoint pull_anchor = at_distance(p, e2, 0.3);
  const SpherePoint cos_anchor = at_distance(p, e1 + e2, 0.2);
  const SpherePoint far_anchor = at_distance(p, e1, 0.5);
  std::vector<CatalogEntry> entries;
  entries.push_back(
      {"indicator-ball", ConvexFunctional::indicator_ball(ball_center, 0.25), ball_center});
  entries.push_back({"pull-to-point", ConvexFunctional::pull_to_point(pull_anchor), pull_anchor});
  entries.push_back({"neg-cos-dist", ConvexFunctional::neg_cos_dist(cos_anchor), cos_anchor});
  entries.push_back({"weighted-sum",
                     ConvexFunctional::weighted_sum(
                         {{2.0, ConvexFunctional::pull_to_point(far_anchor)},
                          {1.0, ConvexFunctional::indicator_ball(p, 0.2)}}),
                     at_distance(p, e1, 0.2)});
  return entries;
}

/// Evaluates `fn` on a polar grid of the cap on S^2 (ring spacing and arc
/// spacing both about `spacing` radians) and returns the smallest value
/// together with its grid point.
struct GridMinimum {
  double value = std::numeric_limits<double>::infinity();
  Eigen::VectorXd point;
};

inline GridMinimum grid_minimum_s2(const std::function<double(const Eigen::VectorXd&)>& fn,
                                   const Eigen::VectorXd& center, const Eigen::VectorXd& u,
                                   const Eigen::VectorXd& v, double radius, double spacing) {
  GridMinimum best;
  const int rings = static_cast<int>(std::ceil(radius / spacing));
  for (int i = 0; i <= rings; ++i) {
    const double t = radius * i / rings;
    const int arcs = std::max(1, static_cast<int>(std::ceil(2 * kPiOracle * std::sin(t) / spacing)));
    for (int k = 0; k < arcs; ++k) {
      const double phi = 2 * kPiOracle * k / arcs;
      const Eigen::VectorXd y =
          std::cos(t) * center + std::sin(t) * (std::cos(phi) * u + std::sin(phi) * v);
      const double value = fn(y);
      if (value < best.value) {
        best.value = value;
        best.point = y;
      }
    }
  }
  return best;
}

/// Closed-form functional value on raw coordinates, written independently
/// of the library's evaluate(). Infinity outside an indicator ball.
inline double functional_value(const ConvexFunctional& f, const Eigen::VectorXd& y) {
  switch (f.kind()) {
    case FunctionalKind::kIndicatorBall:
      return acos_dist(y, f.anchor().coords()) <= f.radius() + 1e-12
                 ? 0.0
                 : std::numeric_limits<double>::infinity();
    case FunctionalKind::kPullToPoint:
      return tan_sin(acos_dist(y, f.anchor().coords()));
    case FunctionalKind::kNegCosDist:
      return -y.dot(f.anchor().coords()) / y.norm();
    case FunctionalKind::kWeightedSum: {
      double total = 0.0;
      for (const auto& term : f.terms()) {
        if (term.weight == 0.0) continue;
        total += term.weight * functional_value(term.functional, y);
      }
      return total;
    }
  }
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace vicinal::oracle
