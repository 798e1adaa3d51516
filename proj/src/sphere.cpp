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

#include "vicinal/sphere.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "vicinal/errors.hpp"

namespace vicinal {

namespace {

// Points closer than this to antipodal have no unique geodesic.
constexpr double kAntipodalSlack = 1e-12;

}  // namespace

SpherePoint SpherePoint::from_coords(Eigen::VectorXd coords) {
  if (coords.size() < 2) {
    throw DomainError("sphere point needs at least 2 ambient coordinates");
  }
  if (!coords.allFinite()) {
    throw DomainError("sphere point has non-finite coordinates");
  }
  const double norm = coords.norm();
  if (std::abs(norm - 1.0) > kUnitNormTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "sphere point coordinates have norm " << norm << ", expected 1";
    throw DomainError(msg.str());
  }
  return SpherePoint(std::move(coords));
}

SpherePoint SpherePoint::normalized(const Eigen::VectorXd& v) {
  if (v.size() < 2) {
    throw DomainError("sphere point needs at least 2 ambient coordinates");
  }
  const double norm = v.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw DomainError("cannot normalize a zero or non-finite vector");
  }
  return SpherePoint(v / norm);
}

SpherePoint SpherePoint::basis(Eigen::Index ambient_dim, Eigen::Index i) {
  if (ambient_dim < 2 || i < 0 || i >= ambient_dim) {
    throw DomainError("invalid basis vector request");
  }
  Eigen::VectorXd e = Eigen::VectorXd::Zero(ambient_dim);
  e(i) = 1.0;
  return SpherePoint(std::move(e));
}

void require_same_dimension(const SpherePoint& x, const SpherePoint& y) {
  if (x.ambient_dim() != y.ambient_dim()) {
    std::ostringstream msg;
    msg << "dimension mismatch: S^" << x.dimension() << " vs S^" << y.dimension();
    throw DimensionMismatch(msg.str());
  }
}

double dist(const SpherePoint& x, const SpherePoint& y) {
  require_same_dimension(x, y);
  // Equal to arccos <x, y> with the inner product clamped to [-1, 1], but
  // accurate for nearly coincident points as well.
  const double chord_minus = (x.coords() - y.coords()).norm();
  const double chord_plus = (x.coords() + y.coords()).norm();
  return 2.0 * std::atan2(chord_minus, chord_plus);
}

Eigen::VectorXd log_map(const SpherePoint& base, const SpherePoint& target) {
  const double length = dist(base, target);
  if (length == 0.0) return Eigen::VectorXd::Zero(base.ambient_dim());
  if (kPi - length < kAntipodalSlack) {
    throw DomainError("antipodal points: geodesic is not unique");
  }
  // Tangent part of (target - base); same direction as
  // target - <base, target> base, without the cancellation for close points.
  const Eigen::VectorXd diff = target.coords() - base.coords();
  const Eigen::VectorXd tangent = diff - base.coords().dot(diff) * base.coords();
  const double norm = tangent.norm();
  if (norm == 0.0) return Eigen::VectorXd::Zero(base.ambient_dim());
  return tangent * (length / norm);
}

SpherePoint exp_map(const SpherePoint& base, const Eigen::VectorXd& tangent) {
  if (tangent.size() != base.ambient_dim()) {
    throw DimensionMismatch("tangent vector has the wrong ambient dimension");
  }
  const Eigen::VectorXd v = tangent - base.coords().dot(tangent) * base.coords();
  const double theta = v.norm();
  if (theta == 0.0) return base;
  return SpherePoint::normalized(std::cos(theta) * base.coords() +
                                 (std::sin(theta) / theta) * v);
}

SpherePoint geodesic_point(const SpherePoint& x, const SpherePoint& y, double alpha) {
  require_same_dimension(x, y);
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw DomainError("geodesic weight must lie in [0, 1]");
  }
  if (alpha == 1.0) return x;
  const Eigen::VectorXd to_y = log_map(x, y);
  if (alpha == 0.0) return y;
  return exp_map(x, (1.0 - alpha) * to_y);
}

double comparison_residual(const SpherePoint& x1, const SpherePoint& x2,
                           const SpherePoint& x3, double alpha) {
  const double d12 = dist(x1, x2);
  const double d13 = dist(x1, x3);
  const double d23 = dist(x2, x3);
  if (!(d12 + d23 + d13 < 2.0 * kPi)) {
    throw DomainError("comparison inequality needs perimeter < 2 pi");
  }
  if (d13 > kPi / 2 + kMembershipSlack || d23 > kPi / 2 + kMembershipSlack) {
    throw DomainError("comparison inequality needs d(x1,x3), d(x2,x3) <= pi/2");
  }
  const SpherePoint mid = geodesic_point(x1, x2, alpha);
  return std::cos(dist(mid, x3)) - alpha * std::cos(d13) - (1.0 - alpha) * std::cos(d23);
}

Ball::Ball(SpherePoint c, double r) : center(std::move(c)), radius(r) {
  if (!(radius >= 0.0 && radius < kPi / 2)) {
    throw DomainError("ball radius must lie in [0, pi/2)");
  }
}

bool contains(const Ball& ball, const SpherePoint& x) {
  return dist(x, ball.center) <= ball.radius + kMembershipSlack;
}

AdmissibleCap::AdmissibleCap(SpherePoint center, double radius)
    : ball_(std::move(center), radius >= 0.0 && radius < kPi / 2 ? radius : 0.0) {
  if (!(radius > 0.0 && radius < kPi / 4)) {
    throw DomainError("admissible cap radius must lie in (0, pi/4)");
  }
}

bool contains(const AdmissibleCap& cap, const SpherePoint& x) {
  return contains(cap.ball(), x);
}

bool ball_inside(const Ball& inner, const Ball& outer) {
  return dist(inner.center, outer.center) + inner.radius <= outer.radius + kMembershipSlack;
}

SpherePoint sample_in_ball(const Ball& ball, Rng& rng) {
  const Eigen::Index n = ball.center.ambient_dim();
  const Eigen::VectorXd& c = ball.center.coords();
  Eigen::VectorXd direction(n);
  double norm = 0.0;
  do {
    for (Eigen::Index i = 0; i < n; ++i) direction(i) = rng.normal();
    direction -= c.dot(direction) * c;
    norm = direction.norm();
  } while (norm < 1e-8);
  const double arclength = rng.uniform() * ball.radius;
  return exp_map(ball.center, direction * (arclength / norm));
}

SpherePoint sample_point(const AdmissibleCap& cap, std::uint64_t seed) {
  Rng rng(seed);
  return sample_in_ball(cap.ball(), rng);
}

std::vector<SpherePoint> sample_points(const AdmissibleCap& cap, std::size_t count,
                                       std::uint64_t seed) {
  Rng rng(seed);
  std::vector<SpherePoint> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(sample_in_ball(cap.ball(), rng));
  return out;
}

KappaModel::KappaModel(double kappa) : kappa_(kappa) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw DomainError("kappa must be a positive real number");
  }
  sqrt_kappa_ = std::sqrt(kappa);
  diameter_ = kPi / sqrt_kappa_;
}

double KappaModel::rescale_to_unit(double d_kappa) const {
  if (!(d_kappa >= 0.0 && d_kappa <= diameter_)) {
    throw DomainError("distance outside [0, D_kappa]");
  }
  return sqrt_kappa_ * d_kappa;
}

double KappaModel::rescale_from_unit(double d_unit) const {
  if (!(d_unit >= 0.0 && d_unit <= kPi)) {
    throw DomainError("unit-sphere distance outside [0, pi]");
  }
  return d_unit / sqrt_kappa_;
}

double KappaModel::dist(const SpherePoint& x, const SpherePoint& y) const {
  return vicinal::dist(x, y) / sqrt_kappa_;
}

}  // namespace vicinal
