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

#include "vicinal/functional.hpp"

#include <cmath>
#include <utility>

#include "vicinal/errors.hpp"

namespace vicinal {

ExtendedReal::ExtendedReal(double value) : value_(value), finite_(true) {
  if (!std::isfinite(value)) {
    throw DomainError("extended real must be built from a finite value; use infinity()");
  }
}

double ExtendedReal::value() const {
  if (!finite_) throw DomainError("extended real is +inf");
  return value_;
}

ExtendedReal operator+(ExtendedReal a, ExtendedReal b) {
  if (!a.finite_ || !b.finite_) return ExtendedReal::infinity();
  return ExtendedReal(a.value_ + b.value_);
}

ExtendedReal operator*(double weight, ExtendedReal a) {
  if (!(weight >= 0.0) || !std::isfinite(weight)) {
    throw DomainError("extended reals only scale by finite nonnegative weights");
  }
  if (!a.finite_) return weight == 0.0 ? ExtendedReal(0.0) : ExtendedReal::infinity();
  return ExtendedReal(weight * a.value_);
}

bool operator==(ExtendedReal a, ExtendedReal b) {
  if (a.finite_ != b.finite_) return false;
  return !a.finite_ || a.value_ == b.value_;
}

bool operator<(ExtendedReal a, ExtendedReal b) {
  if (!a.finite_) return false;
  if (!b.finite_) return true;
  return a.value_ < b.value_;
}

double penalty(double t) {
  if (!(t >= 0.0 && t < kPi / 2)) throw DomainError("penalty needs 0 <= t < pi/2");
  return std::tan(t) * std::sin(t);
}

double penalty_derivative(double t) {
  if (!(t >= 0.0 && t < kPi / 2)) {
    throw DomainError("penalty derivative needs 0 <= t < pi/2");
  }
  const double c = std::cos(t);
  return std::sin(t) * (1.0 + 1.0 / (c * c));
}

ConvexFunctional::ConvexFunctional(FunctionalKind kind, std::optional<SpherePoint> anchor,
                                   double radius, std::vector<WeightedTerm> terms)
    : kind_(kind), anchor_(std::move(anchor)), radius_(radius), terms_(std::move(terms)) {}

ConvexFunctional ConvexFunctional::indicator_ball(SpherePoint center, double radius) {
  Ball check(center, radius);  // validates the radius
  return ConvexFunctional(FunctionalKind::kIndicatorBall, std::move(center), radius, {});
}

ConvexFunctional ConvexFunctional::pull_to_point(SpherePoint anchor) {
  return ConvexFunctional(FunctionalKind::kPullToPoint, std::move(anchor), 0.0, {});
}

ConvexFunctional ConvexFunctional::neg_cos_dist(SpherePoint anchor) {
  return ConvexFunctional(FunctionalKind::kNegCosDist, std::move(anchor), 0.0, {});
}

ConvexFunctional ConvexFunctional::weighted_sum(std::vector<WeightedTerm> terms) {
  for (const auto& term : terms) {
    if (!(term.weight >= 0.0) || !std::isfinite(term.weight)) {
      throw DomainError("weighted sum needs finite nonnegative weights");
    }
  }
  return ConvexFunctional(FunctionalKind::kWeightedSum, std::nullopt, 0.0, std::move(terms));
}

ConvexFunctional ConvexFunctional::zero() { return weighted_sum({}); }

const SpherePoint& ConvexFunctional::anchor() const {
  if (!anchor_) throw DomainError("weighted sums have no anchor");
  return *anchor_;
}

double ConvexFunctional::radius() const {
  if (kind_ != FunctionalKind::kIndicatorBall) {
    throw DomainError("only indicator balls have a radius");
  }
  return radius_;
}

std::optional<Ball> ConvexFunctional::constraint_ball() const {
  if (kind_ == FunctionalKind::kIndicatorBall) return Ball(*anchor_, radius_);
  for (const auto& term : terms_) {
    if (term.weight == 0.0) continue;  // 0 * inf = 0 drops the constraint
    if (auto ball = term.functional.constraint_ball()) return ball;
  }
  return std::nullopt;
}

bool ConvexFunctional::is_pure_indicator() const {
  switch (kind_) {
    case FunctionalKind::kIndicatorBall:
      return true;
    case FunctionalKind::kPullToPoint:
    case FunctionalKind::kNegCosDist:
      return false;
    case FunctionalKind::kWeightedSum:
      for (const auto& term : terms_) {
        if (term.weight > 0.0 && !term.functional.is_pure_indicator()) return false;
      }
      return true;
  }
  return false;
}

bool operator==(const ConvexFunctional& a, const ConvexFunctional& b) {
  return a.kind_ == b.kind_ && a.anchor_ == b.anchor_ && a.radius_ == b.radius_ &&
         a.terms_ == b.terms_;
}

namespace {

void validate_rec(const ConvexFunctional& f, const AdmissibleCap& cap, int& indicators) {
  switch (f.kind()) {
    case FunctionalKind::kIndicatorBall: {
      require_same_dimension(f.anchor(), cap.center());
      if (!ball_inside(Ball(f.anchor(), f.radius()), cap.ball())) {
        throw DomainError("indicator ball must lie inside the working cap");
      }
      ++indicators;
      return;
    }
    case FunctionalKind::kPullToPoint:
    case FunctionalKind::kNegCosDist:
      require_same_dimension(f.anchor(), cap.center());
      if (!contains(cap, f.anchor())) {
        throw DomainError("functional anchor must lie in the working cap");
      }
      return;
    case FunctionalKind::kWeightedSum:
      for (const auto& term : f.terms()) validate_rec(term.functional, cap, indicators);
      return;
  }
}

// Derivative at s = 0 of d(c(s), p) along the unit-speed geodesic c from y
// with unit initial velocity `direction`.
double distance_rate(const SpherePoint& y, const SpherePoint& p,
                     const Eigen::VectorXd& direction) {
  const Eigen::VectorXd to_p = log_map(y, p);
  const double d = to_p.norm();
  if (d == 0.0) return 1.0;
  return -direction.dot(to_p) / d;
}

// g'(d) for the smooth kernels g(d) of pull_to_point and neg_cos_dist.
double kernel_slope(FunctionalKind kind, double d) {
  return kind == FunctionalKind::kPullToPoint ? penalty_derivative(d) : std::sin(d);
}

}  // namespace

void validate_on(const ConvexFunctional& f, const AdmissibleCap& cap) {
  int indicators = 0;
  validate_rec(f, cap, indicators);
  if (indicators > 1) {
    throw DomainError("at most one indicator term is supported per functional");
  }
}

ExtendedReal evaluate(const ConvexFunctional& f, const SpherePoint& y) {
  switch (f.kind()) {
    case FunctionalKind::kIndicatorBall:
      return contains(Ball(f.anchor(), f.radius()), y) ? ExtendedReal(0.0)
                                                       : ExtendedReal::infinity();
    case FunctionalKind::kPullToPoint:
      return penalty(dist(y, f.anchor()));
    case FunctionalKind::kNegCosDist:
      return -std::cos(dist(y, f.anchor()));
    case FunctionalKind::kWeightedSum: {
      ExtendedReal total(0.0);
      for (const auto& term : f.terms()) {
        total = total + term.weight * evaluate(term.functional, y);
      }
      return total;
    }
  }
  return ExtendedReal::infinity();
}

double smooth_value(const ConvexFunctional& f, const SpherePoint& y) {
  switch (f.kind()) {
    case FunctionalKind::kIndicatorBall:
      return 0.0;
    case FunctionalKind::kPullToPoint:
    case FunctionalKind::kNegCosDist:
      return evaluate(f, y).value();
    case FunctionalKind::kWeightedSum: {
      double total = 0.0;
      for (const auto& term : f.terms()) {
        if (term.weight != 0.0) total += term.weight * smooth_value(term.functional, y);
      }
      return total;
    }
  }
  return 0.0;
}

Eigen::VectorXd smooth_gradient(const ConvexFunctional& f, const SpherePoint& y) {
  switch (f.kind()) {
    case FunctionalKind::kIndicatorBall:
      return Eigen::VectorXd::Zero(y.ambient_dim());
    case FunctionalKind::kPullToPoint:
    case FunctionalKind::kNegCosDist: {
      const Eigen::VectorXd to_p = log_map(y, f.anchor());
      const double d = to_p.norm();
      if (d == 0.0) return Eigen::VectorXd::Zero(y.ambient_dim());
      // grad g(d(., p)) = g'(d) * grad d = -g'(d) * log_y(p) / d
      return (-kernel_slope(f.kind(), d) / d) * to_p;
    }
    case FunctionalKind::kWeightedSum: {
      Eigen::VectorXd total = Eigen::VectorXd::Zero(y.ambient_dim());
      for (const auto& term : f.terms()) {
        if (term.weight != 0.0) total += term.weight * smooth_gradient(term.functional, y);
      }
      return total;
    }
  }
  return Eigen::VectorXd::Zero(y.ambient_dim());
}

namespace {

ExtendedReal directional_rec(const ConvexFunctional& f, const SpherePoint& y,
                             const Eigen::VectorXd& direction) {
  switch (f.kind()) {
    case FunctionalKind::kIndicatorBall: {
      const double d = dist(y, f.anchor());
      if (d < f.radius() - kMembershipSlack) return 0.0;
      // On the boundary sphere: only strictly inward directions stay inside.
      return distance_rate(y, f.anchor(), direction) < 0.0 ? ExtendedReal(0.0)
                                                           : ExtendedReal::infinity();
    }
    case FunctionalKind::kPullToPoint:
    case FunctionalKind::kNegCosDist: {
      const double d = dist(y, f.anchor());
      return kernel_slope(f.kind(), d) * distance_rate(y, f.anchor(), direction);
    }
    case FunctionalKind::kWeightedSum: {
      ExtendedReal total(0.0);
      for (const auto& term : f.terms()) {
        total = total + term.weight * directional_rec(term.functional, y, direction);
      }
      return total;
    }
  }
  return ExtendedReal::infinity();
}

}  // namespace

ExtendedReal directional_derivative(const ConvexFunctional& f, const SpherePoint& y,
                                    const SpherePoint& toward) {
  if (!evaluate(f, y).is_finite()) {
    throw DomainError("directional derivative needs f finite at the base point");
  }
  const Eigen::VectorXd v = log_map(y, toward);
  const double length = v.norm();
  if (length == 0.0) throw DomainError("directional derivative needs y != toward");
  return directional_rec(f, y, v / length);
}

}  // namespace vicinal
