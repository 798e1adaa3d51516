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
#include "vicinal/errors.hpp"
#include "vicinal/g_function.hpp"
#include "vicinal/iteration.hpp"
#include "vicinal/rng.hpp"

using namespace vicinal;

namespace {

AdmissibleCap s2_cap() { return AdmissibleCap(SpherePoint::basis(3, 0), 0.6); }

GEstimator random_estimator(const AdmissibleCap& cap, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<SpherePoint> points;
  std::vector<double> weights;
  for (std::size_t k = 0; k < n; ++k) {
    points.push_back(sample_in_ball(cap.ball(), rng));
    weights.push_back(0.1 + rng.uniform());
  }
  return GEstimator(points, weights);
}

// Weighted average of inner products, normalized by the weight sum.
double g_oracle(const GEstimator& est, const Eigen::VectorXd& y) {
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < est.size(); ++k) {
    num += est.weights()[k] * est.points()[k].coords().dot(y);
    den += est.weights()[k];
  }
  return num / den;
}

}  // namespace

TEST(g_estimate, single_point_is_cosine_distance) {
  const SpherePoint z = SpherePoint::basis(3, 0);
  const GEstimator est({z}, {2.5});
  EXPECT_EQ(g_estimate(est, z), 1.0);
  const SpherePoint y = oracle::at_distance(z, oracle::unit(3, 1), 0.4);
  EXPECT_NEAR(g_estimate(est, y), std::cos(0.4), 1e-15);
}

TEST(g_estimate, matches_inner_product_oracle) {
  const AdmissibleCap cap(SpherePoint::basis(6, 0), 0.6);
  const GEstimator est = random_estimator(cap, 50, 3);
  for (const auto& y : sample_points(cap, 200, 4)) {
    EXPECT_NEAR(g_estimate(est, y), g_oracle(est, y.coords()), 1e-14);
  }
}

TEST(g_estimator, orbit_weights_follow_step_cosines) {
  const AdmissibleCap cap = s2_cap();
  const auto pts = sample_points(cap, 6, 9);
  const GEstimator est = GEstimator::from_orbit(pts, 1);
  ASSERT_EQ(est.size(), 4u);
  double sigma = 0.0;
  for (std::size_t k = 0; k < est.size(); ++k) {
    const double c = pts[k + 2].coords().dot(pts[k + 1].coords());
    EXPECT_NEAR(est.weights()[k], c * c / (1 + c * c), 1e-14);
    EXPECT_EQ(est.points()[k], pts[k + 2]);
    sigma += est.weights()[k];
    EXPECT_NEAR(est.partial_sums()[k], sigma, 1e-15);
  }
  EXPECT_EQ(est.truncated(2).size(), 2u);
  EXPECT_EQ(est.truncated(2).weight_sum(), est.partial_sums()[1]);
  EXPECT_THROW(est.truncated(0), DomainError);
  EXPECT_THROW(est.truncated(5), DomainError);
  EXPECT_THROW(GEstimator::from_orbit(pts, 5), DomainError);
}

TEST(g_estimator, rejects_bad_input) {
  const SpherePoint z = SpherePoint::basis(3, 0);
  EXPECT_THROW(GEstimator({}, {}), DomainError);
  EXPECT_THROW(GEstimator({z}, {1.0, 2.0}), DomainError);
  EXPECT_THROW(GEstimator({z}, {0.0}), DomainError);
  EXPECT_THROW(GEstimator({z, SpherePoint::basis(4, 0)}, {1.0, 1.0}), DimensionMismatch);
}

TEST(g_estimate, concave_nonexpansive_and_in_unit_range) {
  for (const Eigen::Index ambient : {3, 6}) {
    const AdmissibleCap cap(SpherePoint::basis(ambient, 0), 0.6);
    const GEstimator est = random_estimator(cap, 30, 17);
    Rng rng(18);
    for (int i = 0; i < 10000; ++i) {
      const SpherePoint x = sample_in_ball(cap.ball(), rng);
      const SpherePoint y = sample_in_ball(cap.ball(), rng);
      const double alpha = rng.uniform();
      const double gx = g_estimate(est, x);
      const double gy = g_estimate(est, y);
      const double gm = g_estimate(est, geodesic_point(x, y, alpha));
      ASSERT_GE(gm - (alpha * gx + (1 - alpha) * gy), -1e-10);
      ASSERT_LE(std::abs(gx - gy), dist(x, y) + 1e-10);
      ASSERT_GE(gx, 0.0);
      ASSERT_LE(gx, 1.0);
    }
  }
}

TEST(g_gradient, matches_finite_differences) {
  const AdmissibleCap cap = s2_cap();
  const GEstimator est = random_estimator(cap, 10, 5);
  Rng rng(6);
  for (int i = 0; i < 50; ++i) {
    const SpherePoint y = sample_in_ball(cap.ball(), rng);
    const SpherePoint z = sample_in_ball(cap.ball(), rng);
    const Eigen::VectorXd u = log_map(y, z).normalized();
    const double h = 1e-6;
    const double fd =
        (g_oracle(est, exp_map(y, h * u).coords()) - g_oracle(est, exp_map(y, -h * u).coords())) /
        (2 * h);
    EXPECT_NEAR(g_gradient(est, y).dot(u), fd, 1e-8);
  }
}

TEST(g_maximize, agrees_with_normalized_weighted_mean) {
  for (const Eigen::Index ambient : {3, 6}) {
    const AdmissibleCap cap(SpherePoint::basis(ambient, 0), 0.6);
    for (const std::uint64_t seed : {1, 2, 3}) {
      const GEstimator est = random_estimator(cap, 40, seed);
      Eigen::VectorXd m = Eigen::VectorXd::Zero(ambient);
      for (std::size_t k = 0; k < est.size(); ++k) {
        m += est.weights()[k] * est.points()[k].coords();
      }
      m.normalize();
      const SpherePoint best = g_maximize(est, cap);
      EXPECT_LT((best.coords() - m).norm(), 1e-8);
    }
  }
}

TEST(g_maximize, converges_on_tightly_clustered_points) {
  // g rounds to 1 on such data, so the solver must not rely on g itself.
  const AdmissibleCap cap = s2_cap();
  const SpherePoint c = oracle::at_distance(cap.center(), oracle::unit(3, 1), 0.2);
  Rng rng(30);
  std::vector<SpherePoint> points;
  std::vector<double> weights;
  Eigen::VectorXd m = Eigen::VectorXd::Zero(3);
  for (int k = 0; k < 200; ++k) {
    points.push_back(sample_in_ball(Ball(c, 1e-6), rng));
    weights.push_back(0.5);
    m += points.back().coords();
  }
  const SpherePoint best = g_maximize(GEstimator(points, weights), cap);
  EXPECT_LT((best.coords() - m.normalized()).norm(), 1e-12);
}

TEST(g_maximize, two_equal_weights_give_midpoint) {
  const AdmissibleCap cap = s2_cap();
  const SpherePoint a = oracle::at_distance(cap.center(), oracle::unit(3, 1), 0.4);
  const SpherePoint b = oracle::at_distance(cap.center(), oracle::unit(3, 2), 0.5);
  const SpherePoint best = g_maximize(GEstimator({a, b}, {1.0, 1.0}), cap);
  const Eigen::VectorXd mid = oracle::slerp(a.coords(), b.coords(), 0.5);
  EXPECT_LT((best.coords() - mid).norm(), 1e-8);
}

TEST(g_maximize, ppa_orbit_maximizer_matches_limit) {
  const AdmissibleCap cap = s2_cap();
  for (const auto& entry : oracle::catalog(cap)) {
    const PpaResult run = ppa_run(entry.f, cap, sample_point(cap, 12), 300, 0.0);
    const GEstimator est = GEstimator::from_orbit(run.trace.iterates, 100);
    EXPECT_LT(dist(g_maximize(est, cap), run.minimizer), 1e-4) << entry.name;
  }
}
