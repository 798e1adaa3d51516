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
#include <numbers>
#include <vector>

#include <Eigen/Core>

#include "vicinal/rng.hpp"

namespace vicinal {

inline constexpr double kPi = std::numbers::pi;

/// Slack allowed on the unit-norm invariant of a SpherePoint.
inline constexpr double kUnitNormTolerance = 1e-12;

/// Slack used by every membership test (contains, precondition checks).
inline constexpr double kMembershipSlack = 1e-12;

/// A point of the unit sphere S^n, stored by its coordinates in R^{n+1}.
class SpherePoint {
 public:
  /// Wraps `coords` without rescaling. Throws DomainError unless the
  /// Euclidean norm is within kUnitNormTolerance of 1 and n >= 1.
  static SpherePoint from_coords(Eigen::VectorXd coords);

  /// Divides `v` by its norm. Throws DomainError on a zero vector.
  static SpherePoint normalized(const Eigen::VectorXd& v);

  /// The i-th standard basis vector of R^{ambient_dim}.
  static SpherePoint basis(Eigen::Index ambient_dim, Eigen::Index i);

  const Eigen::VectorXd& coords() const { return coords_; }
  Eigen::Index ambient_dim() const { return coords_.size(); }
  /// Intrinsic dimension n of S^n.
  Eigen::Index dimension() const { return coords_.size() - 1; }

  friend bool operator==(const SpherePoint& a, const SpherePoint& b) {
    return a.coords_ == b.coords_;
  }

 private:
  explicit SpherePoint(Eigen::VectorXd coords) : coords_(std::move(coords)) {}

  Eigen::VectorXd coords_;
};

/// Throws DimensionMismatch unless both points live in the same sphere.
void require_same_dimension(const SpherePoint& x, const SpherePoint& y);

/// Spherical (great-circle) distance in [0, pi].
double dist(const SpherePoint& x, const SpherePoint& y);

/// Tangent vector at `base` pointing toward `target` with length
/// dist(base, target). Zero when the points coincide; throws DomainError
/// for antipodal points.
Eigen::VectorXd log_map(const SpherePoint& base, const SpherePoint& target);

/// Follows the geodesic from `base` with initial velocity `tangent`
/// (its component along `base` is discarded first).
SpherePoint exp_map(const SpherePoint& base, const Eigen::VectorXd& tangent);

/// The point alpha x (+) (1 - alpha) y: arclength (1 - alpha) dist(x, y)
/// from x along the unique geodesic to y. Throws DomainError for antipodal
/// inputs or alpha outside [0, 1].
SpherePoint geodesic_point(const SpherePoint& x, const SpherePoint& y, double alpha);

/// cos d(alpha x1 (+) (1 - alpha) x2, x3) - alpha cos d(x1, x3)
///   - (1 - alpha) cos d(x2, x3).
/// Nonnegative on any triangle with perimeter < 2 pi whose sides at x3 are
/// at most pi/2; those preconditions are checked and throw DomainError.
double comparison_residual(const SpherePoint& x1, const SpherePoint& x2,
                           const SpherePoint& x3, double alpha);

/// Closed ball S_r[c] with 0 <= r < pi/2 (radius zero is the singleton {c}).
struct Ball {
  SpherePoint center;
  double radius;

  Ball(SpherePoint center, double radius);
};

bool contains(const Ball& ball, const SpherePoint& x);

/// Closed cap S_r[p] with 0 < r < pi/4, so any two members are closer than
/// pi/2. This is the working admissible space.
class AdmissibleCap {
 public:
  AdmissibleCap(SpherePoint center, double radius);

  const SpherePoint& center() const { return ball_.center; }
  double radius() const { return ball_.radius; }
  const Ball& ball() const { return ball_; }
  Eigen::Index ambient_dim() const { return ball_.center.ambient_dim(); }

 private:
  Ball ball_;
};

bool contains(const AdmissibleCap& cap, const SpherePoint& x);

/// True when `inner` lies inside `outer` (up to kMembershipSlack).
bool ball_inside(const Ball& inner, const Ball& outer);

/// Draws a point of the ball: Gaussian tangent direction at the center,
/// arclength uniform on [0, radius].
SpherePoint sample_in_ball(const Ball& ball, Rng& rng);

/// Deterministic single draw: the first point of the stream seeded by `seed`.
SpherePoint sample_point(const AdmissibleCap& cap, std::uint64_t seed);

/// `count` consecutive draws from the stream seeded by `seed`.
std::vector<SpherePoint> sample_points(const AdmissibleCap& cap, std::size_t count,
                                       std::uint64_t seed);

/// Model space M_kappa: the sphere with its metric divided by sqrt(kappa).
class KappaModel {
 public:
  explicit KappaModel(double kappa);

  double kappa() const { return kappa_; }
  double sqrt_kappa() const { return sqrt_kappa_; }
  /// Diameter bound D_kappa = pi / sqrt(kappa).
  double diameter() const { return diameter_; }

  /// sqrt(kappa) * d for 0 <= d <= D_kappa; maps [0, D_kappa/2) onto
  /// [0, pi/2).
  double rescale_to_unit(double d_kappa) const;
  /// Inverse of rescale_to_unit, for 0 <= d <= pi.
  double rescale_from_unit(double d_unit) const;

  /// Distance of M_kappa between two sphere points.
  double dist(const SpherePoint& x, const SpherePoint& y) const;

 private:
  double kappa_;
  double sqrt_kappa_;
  double diameter_;
};

}  // namespace vicinal
