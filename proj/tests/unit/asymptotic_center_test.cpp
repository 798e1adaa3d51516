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
#include <vector>

#include "gtest/gtest.h"

#include "oracles.hpp"
#include "vicinal/asymptotic_center.hpp"
#include "vicinal/errors.hpp"
#include "vicinal/iteration.hpp"
#include "vicinal/rng.hpp"

using namespace vicinal;

namespace {

AdmissibleCap s2_cap() { return AdmissibleCap(SpherePoint::basis(3, 0), 0.6); }

double max_acos_dist(std::span<const SpherePoint> tail, const Eigen::VectorXd& y) {
  double worst = 0.0;
  for (const auto& x : tail) worst = std::max(worst, oracle::acos_dist(x.coords(), y));
  return worst;
}

}  // namespace

TEST(asymptotic_center, constant_sequence) {
  const AdmissibleCap cap = s2_cap();
  const SpherePoint p = oracle::at_distance(cap.center(), oracle::unit(3, 1), 0.3);
  const std::vector<SpherePoint> seq(10, p);
  const AsymptoticCenterEstimate est = asymptotic_center(seq, 4, cap);
  EXPECT_LT(dist(est.center, p), 1e-8);
  EXPECT_LT(est.radius, 1e-8);
  EXPECT_EQ(est.tail_start, 4u);
  EXPECT_EQ(est.window, 6u);
  EXPECT_NEAR(spherical_boundedness_margin(seq, 0, cap), oracle::kPiOracle / 2, 1e-8);
}

TEST(asymptotic_center, two_alternating_points_give_midpoint) {
  const AdmissibleCap cap = s2_cap();
  const SpherePoint z = oracle::at_distance(cap.center(), oracle::unit(3, 1), 0.5);
  const SpherePoint w = oracle::at_distance(cap.center(), oracle::unit(3, 1) + oracle::unit(3, 2), 0.4);
  std::vector<SpherePoint> seq;
  for (int k = 0; k < 20; ++k) seq.push_back(k % 2 == 0 ? z : w);
  const AsymptoticCenterEstimate est = asymptotic_center(seq, 10, cap);
  // Minimax grid search along the connecting geodesic.
  double best_s = 0.0, best_value = 1e300;
  for (int i = 0; i <= 100000; ++i) {
    const double s = i / 100000.0;
    const Eigen::VectorXd y = oracle::slerp(z.coords(), w.coords(), s);
    const double value = std::max(oracle::acos_dist(y, z.coords()), oracle::acos_dist(y, w.coords()));
    if (value < best_value) {
      best_value = value;
      best_s = s;
    }
  }
  EXPECT_NEAR(best_s, 0.5, 1e-5);
  const Eigen::VectorXd mid = oracle::slerp(z.coords(), w.coords(), 0.5);
  EXPECT_LT((est.center.coords() - mid).norm(), 1e-8);
  EXPECT_NEAR(est.radius, oracle::acos_dist(z, w) / 2, 1e-8);
}

TEST(asymptotic_center, radius_is_attained_maximum_and_minimax) {
  for (const Eigen::Index ambient : {3, 6}) {
    const AdmissibleCap cap(SpherePoint::basis(ambient, 0), 0.6);
    const std::vector<SpherePoint> seq = sample_points(cap, 40, 21);
    const AsymptoticCenterEstimate est = asymptotic_center(seq, 10, cap);
    const std::span<const SpherePoint> tail(seq.begin() + 10, seq.end());
    EXPECT_NEAR(est.radius, max_acos_dist(tail, est.center.coords()), 1e-7);
    Rng rng(22);
    for (int i = 0; i < 2000; ++i) {
      const SpherePoint y = sample_in_ball(cap.ball(), rng);
      EXPECT_GE(max_acos_dist(tail, y.coords()), est.radius - 1e-9);
    }
  }
}

TEST(asymptotic_center, convergent_trace_centers_on_its_limit) {
  const AdmissibleCap cap = s2_cap();
  const double tol = 1e-10;
  for (const auto& entry : oracle::catalog(cap)) {
    const PpaResult run = ppa_run(entry.f, cap, sample_point(cap, 5), 400, 0.0);
    const AsymptoticCenterEstimate est = asymptotic_center(run.trace.iterates, 200, cap, tol);
    EXPECT_LT(dist(est.center, run.minimizer), 10 * tol) << entry.name;
  }
}

TEST(spherical_boundedness_margin, cap_bounds) {
  const AdmissibleCap cap = s2_cap();
  EXPECT_GE(spherical_boundedness_margin(sample_points(cap, 50, 1), 0, cap),
            oracle::kPiOracle / 2 - 1.2);
  // Points spread around the boundary circle of the cap.
  std::vector<SpherePoint> ring;
  for (int k = 0; k < 12; ++k) {
    const double phi = 2 * oracle::kPiOracle * k / 12;
    const Eigen::VectorXd dir = std::cos(phi) * oracle::unit(3, 1) + std::sin(phi) * oracle::unit(3, 2);
    ring.push_back(oracle::at_distance(cap.center(), dir, 0.6));
  }
  const double margin = spherical_boundedness_margin(ring, 0, cap);
  EXPECT_GE(margin, oracle::kPiOracle / 2 - 1.2);
  EXPECT_NEAR(margin, oracle::kPiOracle / 2 - 0.6, 1e-8);
}

TEST(asymptotic_center, rejects_bad_input) {
  const AdmissibleCap cap = s2_cap();
  const std::vector<SpherePoint> seq(3, cap.center());
  EXPECT_THROW(asymptotic_center(seq, 3, cap), DomainError);
  EXPECT_THROW(asymptotic_center(seq, 0, cap, 0.0), DomainError);
  const std::vector<SpherePoint> wrong(2, SpherePoint::basis(4, 0));
  EXPECT_THROW(asymptotic_center(wrong, 0, cap), DimensionMismatch);
}
