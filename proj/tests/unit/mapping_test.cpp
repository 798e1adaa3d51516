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

#include <cmath>

#include "gtest/gtest.h"

#include "oracles.hpp"
#include "vicinal/errors.hpp"
#include "vicinal/mapping.hpp"
#include "vicinal/rng.hpp"

using namespace vicinal;

namespace {

const double kPiO = oracle::kPiOracle;

AdmissibleCap s2_cap() { return AdmissibleCap(SpherePoint::basis(3, 0), 0.6); }

}  // namespace

TEST(apply, projection_fixes_points_of_its_ball) {
  const AdmissibleCap cap = s2_cap();
  const Ball ball(cap.center(), 0.3);
  const MappingHandle T = MappingHandle::projection_onto(ball, cap);
  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    const SpherePoint x = sample_in_ball(ball, rng);
    EXPECT_EQ(apply(T, x), x);
  }
}

TEST(apply, resolvent_of_zero_is_identity) {
  const AdmissibleCap cap = s2_cap();
  const MappingHandle T = MappingHandle::resolvent_of(ConvexFunctional::zero(), cap);
  for (const auto& x : sample_points(cap, 100, 2)) EXPECT_EQ(apply(T, x), x);
}

TEST(apply, identity_and_composition) {
  const AdmissibleCap cap = s2_cap();
  const MappingHandle id = MappingHandle::identity(cap);
  const MappingHandle proj = MappingHandle::projection_onto(Ball(cap.center(), 0.2), cap);
  const MappingHandle both = MappingHandle::composition({id, proj, proj});
  for (const auto& x : sample_points(cap, 50, 3)) {
    EXPECT_EQ(apply(id, x), x);
    EXPECT_EQ(apply(both, x), apply(proj, x));
  }
  const AdmissibleCap other(SpherePoint::basis(3, 1), 0.6);
  EXPECT_THROW(MappingHandle::composition({id, MappingHandle::identity(other)}), DomainError);
  EXPECT_THROW(MappingHandle::composition({}), DomainError);
}

TEST(apply, rejects_points_outside_the_domain) {
  const AdmissibleCap cap = s2_cap();
  const SpherePoint outside = oracle::at_distance(cap.center(), oracle::unit(3, 1), 0.7);
  EXPECT_THROW(apply(MappingHandle::identity(cap), outside), DomainError);
  EXPECT_THROW(MappingHandle::projection_onto(Ball(outside, 0.1), cap), DomainError);
}

TEST(apply, maps_the_cap_into_itself_and_is_deterministic) {
  const AdmissibleCap cap(SpherePoint::basis(6, 0), 0.6);
  std::vector<MappingHandle> maps;
  for (const auto& entry : oracle::catalog(cap)) {
    maps.push_back(MappingHandle::resolvent_of(entry.f, cap));
  }
  maps.push_back(MappingHandle::projection_onto(Ball(cap.center(), 0.25), cap));
  maps.push_back(make_example_3_2(cap.center(), 0.6, 0.5));
  maps.push_back(MappingHandle::composition({maps[1], maps[2]}));
  for (const auto& T : maps) {
    for (const auto& x : sample_points(T.domain(), 200, 4)) {
      const SpherePoint tx = apply(T, x);
      EXPECT_TRUE(contains(T.domain(), tx));
      EXPECT_EQ(apply(T, x), tx);
    }
  }
}

TEST(example_3_2, anchor_maps_to_itself) {
  const SpherePoint p = SpherePoint::basis(3, 0);
  const MappingHandle T = make_example_3_2(p, 0.6, 0.5);
  EXPECT_EQ(apply(T, p), p);
  EXPECT_EQ(T.domain().radius(), 0.6);
}

TEST(example_3_2, boundary_of_inner_cap_takes_anchor_branch) {
  const SpherePoint p = SpherePoint::basis(3, 0);
  const MappingHandle T = make_example_3_2(p, 0.6, 0.5);
  const SpherePoint edge = oracle::at_distance(p, oracle::unit(3, 1), kPiO / 8);
  EXPECT_EQ(apply(T, edge), p);
}

TEST(example_3_2, outer_points_project_onto_small_ball) {
  const SpherePoint p = SpherePoint::basis(3, 0);
  const MappingHandle T = make_example_3_2(p, 0.6, 0.5);
  const SpherePoint x = oracle::at_distance(p, oracle::unit(3, 1), 0.5);
  const SpherePoint tx = apply(T, x);
  EXPECT_NEAR(oracle::acos_dist(tx, p), 0.5 * kPiO / 8, 1e-12);
  const SpherePoint expected = oracle::at_distance(p, oracle::unit(3, 1), 0.5 * kPiO / 8);
  EXPECT_LT((tx.coords() - expected.coords()).norm(), 1e-15);
}

TEST(example_3_2, feasibility_constants_are_recomputed) {
  const Example32Feasibility f = example_3_2_feasibility(0.6, 0.5);
  EXPECT_NEAR(f.cos_pi_over_8, std::cos(kPiO / 8), 1e-16);
  EXPECT_NEAR(f.cos_sq_delta_pi_over_8, std::pow(std::cos(kPiO / 16), 2), 1e-16);
  EXPECT_NEAR(f.cos_pi_over_8, 0.92388, 5e-6);
  EXPECT_NEAR(f.cos_sq_delta_pi_over_8, 0.96194, 5e-6);
  EXPECT_TRUE(f.radius_in_range);
  EXPECT_TRUE(f.delta_in_range);
  EXPECT_TRUE(f.feasible);
}

TEST(example_3_2, infeasible_parameters_are_rejected) {
  const SpherePoint p = SpherePoint::basis(3, 0);
  // cos^2(0.9 pi / 8) < cos(pi / 8).
  EXPECT_FALSE(example_3_2_feasibility(0.6, 0.9).feasible);
  EXPECT_THROW(make_example_3_2(p, 0.6, 0.9), DomainError);
  EXPECT_THROW(make_example_3_2(p, 0.3, 0.5), DomainError);
  EXPECT_THROW(make_example_3_2(p, 0.6, 0.0), DomainError);
  EXPECT_THROW(make_example_3_2(p, 0.8, 0.5), DomainError);
}

TEST(example_3_2, is_discontinuous_across_the_inner_boundary) {
  const SpherePoint p = SpherePoint::basis(6, 0);
  const MappingHandle T = make_example_3_2(p, 0.6, 0.5);
  for (const double gap : {1e-3, 1e-6, 1e-9}) {
    const auto [inside, outside] = example_3_2_boundary_pair(T, gap);
    EXPECT_NEAR(oracle::acos_dist(inside, p), kPiO / 8, 1e-12);
    // Chord length, since arccos cannot resolve angles this small.
    const double chord = (inside.coords() - outside.coords()).norm();
    EXPECT_NEAR(2 * std::asin(chord / 2), gap, 1e-15);
    EXPECT_NEAR(oracle::acos_dist(apply(T, inside), apply(T, outside)), 0.5 * kPiO / 8, 1e-12);
  }
  EXPECT_THROW(example_3_2_boundary_pair(T, 1.0), DomainError);
}

TEST(displacement_cosine, spec_examples) {
  const SpherePoint p = SpherePoint::basis(3, 0);
  const AdmissibleCap cap(p, 0.6);
  const MappingHandle proj = MappingHandle::projection_onto(Ball(p, 0.3), cap);
  EXPECT_EQ(displacement_cosine(proj, p), 1.0);

  const MappingHandle T = make_example_3_2(p, 0.6, 0.5);
  const SpherePoint near = oracle::at_distance(p, oracle::unit(3, 2), 0.1);
  EXPECT_NEAR(displacement_cosine(T, near), std::cos(0.1), 1e-15);

  const SpherePoint z = oracle::at_distance(p, oracle::unit(3, 1), 0.5);
  EXPECT_NEAR(displacement_cosine(proj, z), std::cos(0.2), 1e-15);
}

TEST(displacement_cosine, equals_one_on_fixed_points) {
  const AdmissibleCap cap = s2_cap();
  for (const auto& entry : oracle::catalog(cap)) {
    const MappingHandle T = MappingHandle::resolvent_of(entry.f, cap);
    EXPECT_NEAR(displacement_cosine(T, entry.minimizer), 1.0, 1e-15) << entry.name;
  }
}

TEST(mapping_handle, accessors_match_the_kind) {
  const AdmissibleCap cap = s2_cap();
  const MappingHandle id = MappingHandle::identity(cap);
  EXPECT_EQ(id.kind(), MappingKind::kIdentity);
  EXPECT_THROW(id.functional(), DomainError);
  EXPECT_THROW(id.ball(), DomainError);
  EXPECT_THROW(id.example(), DomainError);
  const MappingHandle r = MappingHandle::resolvent_of(ConvexFunctional::zero(), cap, 1e-12);
  EXPECT_EQ(r.resolvent_tol(), 1e-12);
  EXPECT_THROW(MappingHandle::resolvent_of(ConvexFunctional::zero(), cap, 0.0), DomainError);
}
