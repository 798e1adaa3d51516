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
#include <vector>

#include <Eigen/Core>

#include "vicinal/sphere.hpp"

namespace vicinal {

/// A value in (-inf, +inf]. Infinity is a flag, never a large float.
class ExtendedReal {
 public:
  ExtendedReal(double value);  // NOLINT: implicit from finite reals
  static ExtendedReal infinity() { return ExtendedReal(); }

  bool is_finite() const { return finite_; }
  /// Throws DomainError on +inf.
  double value() const;

  friend ExtendedReal operator+(ExtendedReal a, ExtendedReal b);
  /// Nonnegative scaling with the convex-analysis convention 0 * inf = 0.
  friend ExtendedReal operator*(double weight, ExtendedReal a);
  friend bool operator==(ExtendedReal a, ExtendedReal b);
  friend bool operator<(ExtendedReal a, ExtendedReal b);
  friend bool operator<=(ExtendedReal a, ExtendedReal b) { return !(b < a); }

 private:
  ExtendedReal() : value_(0.0), finite_(false) {}

  double value_;
  bool finite_;
};

/// tan t sin t, the resolvent's distance penalty, for 0 <= t < pi/2.
double penalty(double t);

/// d/dt [tan t sin t] = sin t (1 + 1 / cos^2 t), for 0 <= t < pi/2.
double penalty_derivative(double t);

enum class FunctionalKind { kIndicatorBall, kPullToPoint, kNegCosDist, kWeightedSum };

struct WeightedTerm;

/// Proper lower semicontinuous geodesically convex function on a cap.
///
///   indicator_ball(c, rho)  0 on S_rho[c], +inf elsewhere
///   pull_to_point(p)        tan d(y, p) sin d(y, p)
///   neg_cos_dist(p)         -cos d(y, p)
///   weighted_sum            sum of w_i f_i with w_i >= 0
///
/// The empty weighted sum is the zero function.
class ConvexFunctional {
 public:
  static ConvexFunctional indicator_ball(SpherePoint center, double radius);
  static ConvexFunctional pull_to_point(SpherePoint anchor);
  static ConvexFunctional neg_cos_dist(SpherePoint anchor);
  static ConvexFunctional weighted_sum(std::vector<WeightedTerm> terms);
  static ConvexFunctional zero();

  FunctionalKind kind() const { return kind_; }
  /// Anchor point (indicator center for indicator_ball). Throws for sums.
  const SpherePoint& anchor() const;
  /// Indicator radius. Throws unless kind() is kIndicatorBall.
  double radius() const;
  const std::vector<WeightedTerm>& terms() const { return terms_; }

  /// The indicator ball appearing in the function, if any (at most one is
  /// allowed, see validate_on).
  std::optional<Ball> constraint_ball() const;

  /// True when no smooth term carries positive weight.
  bool is_pure_indicator() const;

  friend bool operator==(const ConvexFunctional& a, const ConvexFunctional& b);

 private:
  ConvexFunctional(FunctionalKind kind, std::optional<SpherePoint> anchor, double radius,
                   std::vector<WeightedTerm> terms);

  FunctionalKind kind_;
  std::optional<SpherePoint> anchor_;
  double radius_ = 0.0;
  std::vector<WeightedTerm> terms_;
};

struct WeightedTerm {
  double weight;
  ConvexFunctional functional;

  friend bool operator==(const WeightedTerm& a, const WeightedTerm& b) {
    return a.weight == b.weight && a.functional == b.functional;
  }
};

/// Throws DomainError unless `f` is usable on `cap`: anchors in the cap, the
/// indicator ball inside the cap, weights nonnegative and finite, at most
/// one indicator term.
void validate_on(const ConvexFunctional& f, const AdmissibleCap& cap);

ExtendedReal evaluate(const ConvexFunctional& f, const SpherePoint& y);

/// Value of the smooth (non-indicator) part.
double smooth_value(const ConvexFunctional& f, const SpherePoint& y);

/// Riemannian gradient of the smooth part, as a tangent vector at y.
Eigen::VectorXd smooth_gradient(const ConvexFunctional& f, const SpherePoint& y);

/// One-sided derivative of f along the unit-speed geodesic from y toward
/// `toward`. +inf when an indicator term immediately becomes infinite.
/// Requires f finite at y and y != toward.
ExtendedReal directional_derivative(const ConvexFunctional& f, const SpherePoint& y,
                                    const SpherePoint& toward);

}  // namespace vicinal
