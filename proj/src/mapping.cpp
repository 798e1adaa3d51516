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

#include "vicinal/mapping.hpp"

#include <cmath>

#include "vicinal/errors.hpp"

namespace vicinal {

namespace {

constexpr double kPiOver8 = kPi / 8;

bool same_cap(const AdmissibleCap& a, const AdmissibleCap& b) {
  return a.center() == b.center() && a.radius() == b.radius();
}

}  // namespace

Example32Feasibility example_3_2_feasibility(double r, double delta) {
  Example32Feasibility out{};
  out.cos_pi_over_8 = std::cos(kPiOver8);
  const double c = std::cos(delta * kPiOver8);
  out.cos_sq_delta_pi_over_8 = c * c;
  out.radius_in_range = kPiOver8 < r && r < kPi / 4;
  out.delta_in_range = 0.0 < delta && delta < 1.0;
  out.feasible = out.radius_in_range && out.delta_in_range &&
                 out.cos_pi_over_8 <= out.cos_sq_delta_pi_over_8;
  return out;
}

MappingHandle MappingHandle::identity(AdmissibleCap domain) {
  return MappingHandle(MappingKind::kIdentity, std::move(domain));
}

MappingHandle MappingHandle::resolvent_of(ConvexFunctional f, AdmissibleCap domain,
                                          double tol) {
  validate_on(f, domain);
  if (!(tol > 0.0)) throw DomainError("resolvent tolerance must be positive");
  MappingHandle out(MappingKind::kResolvent, std::move(domain));
  out.functional_ = std::move(f);
  out.tol_ = tol;
  return out;
}

MappingHandle MappingHandle::projection_onto(Ball ball, AdmissibleCap domain) {
  require_same_dimension(ball.center, domain.center());
  if (!ball_inside(ball, domain.ball())) {
    throw DomainError("projection target must lie inside the domain cap");
  }
  MappingHandle out(MappingKind::kProjection, std::move(domain));
  out.ball_ = std::move(ball);
  return out;
}

MappingHandle MappingHandle::composition(std::vector<MappingHandle> maps) {
  if (maps.empty()) throw DomainError("composition needs at least one mapping");
  for (const auto& m : maps) {
    if (!same_cap(m.domain(), maps.front().domain())) {
      throw DomainError("composed mappings must share one domain cap");
    }
  }
  MappingHandle out(MappingKind::kComposition, maps.front().domain());
  out.parts_ = std::move(maps);
  return out;
}

const ConvexFunctional& MappingHandle::functional() const {
  if (!functional_) throw DomainError("mapping is not a resolvent");
  return *functional_;
}

double MappingHandle::resolvent_tol() const {
  if (!functional_) throw DomainError("mapping is not a resolvent");
  return tol_;
}

const Ball& MappingHandle::ball() const {
  if (!ball_) throw DomainError("mapping is not a projection");
  return *ball_;
}

const Example32Params& MappingHandle::example() const {
  if (!example_) throw DomainError("mapping is not the example mapping");
  return *example_;
}

MappingHandle make_example_3_2(SpherePoint p, double r, double delta) {
  if (!example_3_2_feasibility(r, delta).feasible) {
    throw DomainError(
        "example mapping needs pi/8 < r < pi/4, 0 < delta < 1 and "
        "cos(pi/8) <= cos^2(delta pi/8)");
  }
  MappingHandle out(MappingKind::kExample32, AdmissibleCap(p, r));
  out.example_ = Example32Params{std::move(p), r, delta};
  return out;
}

SpherePoint apply(const MappingHandle& T, const SpherePoint& x) {
  require_same_dimension(x, T.domain().center());
  if (!contains(T.domain(), x)) throw DomainError("mapping input lies outside its domain");
  switch (T.kind()) {
    case MappingKind::kIdentity:
      return x;
    case MappingKind::kResolvent:
      return resolve(T.functional(), T.domain(), x, T.resolvent_tol()).point;
    case MappingKind::kProjection:
      return metric_projection(T.ball(), x);
    case MappingKind::kExample32: {
      const auto& ex = T.example();
      // C is closed, so its boundary takes the P_A branch.
      if (contains(Ball(ex.anchor, kPiOver8), x)) return ex.anchor;
      return metric_projection(Ball(ex.anchor, ex.delta * kPiOver8), x);
    }
    case MappingKind::kComposition: {
      SpherePoint y = x;
      for (const auto& part : T.parts()) y = apply(part, y);
      return y;
    }
  }
  throw DomainError("unknown mapping kind");
}

double displacement_cosine(const MappingHandle& T, const SpherePoint& z) {
  return std::cos(dist(apply(T, z), z));
}

std::pair<SpherePoint, SpherePoint> example_3_2_boundary_pair(const MappingHandle& T,
                                                              double gap) {
  const auto& ex = T.example();
  if (!(gap > 0.0 && kPiOver8 + gap <= ex.r)) {
    throw DomainError("boundary gap must keep the outer point inside the cap");
  }
  // Any unit tangent at the anchor works; take the first basis direction
  // that is not parallel to it.
  const Eigen::VectorXd& p = ex.anchor.coords();
  Eigen::VectorXd direction;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    Eigen::VectorXd e = Eigen::VectorXd::Unit(p.size(), i);
    direction = e - p.dot(e) * p;
    if (direction.norm() > 0.5) break;
  }
  direction.normalize();
  return {exp_map(ex.anchor, kPiOver8 * direction),
          exp_map(ex.anchor, (kPiOver8 + gap) * direction)};
}

}  // namespace vicinal
