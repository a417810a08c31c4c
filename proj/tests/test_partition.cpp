/* Copyright 2026 The roughpath Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "roughpath/error.hpp"
#include "roughpath/partition.hpp"
#include "roughpath/path.hpp"

namespace roughpath {
namespace {

Control time_control() {
  return Control([](double s, double t) { return t - s; }, "t - s");
}

std::shared_ptr<const PiecewiseLinearPath> random_path(std::uint64_t seed, std::size_t segs) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 0.5);
  std::vector<double> times;
  std::vector<std::vector<double>> pts;
  std::vector<double> x(2, 0.0);
  for (std::size_t i = 0; i <= segs; ++i) {
    times.push_back(static_cast<double>(i) / segs);
    if (i > 0)
      for (auto& c : x) c += gauss(rng);
    pts.push_back(x);
  }
  return std::make_shared<const PiecewiseLinearPath>(times, pts);
}

TEST(Partition, BalancePointOfTimeIsMidpoint) {
  EXPECT_NEAR(balance_point(time_control(), 0.0, 1.0), 0.5, 1e-12);
  EXPECT_NEAR(balance_point(time_control(), 0.2, 0.6), 0.4, 1e-12);
}

TEST(Partition, BalancePointOfQuadraticControl) {
  const Control omega([](double s, double t) { return t * t - s * s; }, "t^2 - s^2");
  // u^2 = 1 - u^2
  EXPECT_NEAR(balance_point(omega, 0.0, 1.0), std::sqrt(0.5), 1e-12);
}

TEST(Partition, BalancePointOfTwoSegmentArcLength) {
  const auto path = std::make_shared<const PiecewiseLinearPath>(
      std::vector<double>{0.0, 0.5, 1.0}, std::vector<std::vector<double>>{{0, 0}, {1, 0}, {1, 1}});
  EXPECT_NEAR(balance_point(arc_length_control({path}, 1.0), 0.0, 1.0), 0.5, 1e-12);
}

TEST(Partition, ZeroControlFallsBackToMidpoint) {
  const Control zero([](double, double) { return 0.0; }, "zero");
  EXPECT_EQ(balance_point(zero, 0.0, 0.5), 0.25);
  EXPECT_THROW(balance_point(zero, 0.5, 0.5), InvalidInput);
}

TEST(Partition, UniformDyadicPartition) {
  const auto p0 = total_dyadic_partition(time_control(), 0.0, 1.0, 0);
  ASSERT_EQ(p0.points.size(), 2u);
  EXPECT_EQ(p0.points[0], 0.0);
  EXPECT_EQ(p0.points[1], 1.0);

  const auto p2 = total_dyadic_partition(time_control(), 0.0, 1.0, 2);
  ASSERT_EQ(p2.points.size(), 5u);
  EXPECT_EQ(p2.intervals(), 4u);
  for (std::size_t j = 0; j < 5; ++j) EXPECT_NEAR(p2.points[j], 0.25 * j, 1e-12);
}

TEST(Partition, RandomPathAuditAtOrderFour) {
  const auto path = random_path(21, 9);
  const auto omega = arc_length_control({path}, 1.0);
  const auto part = total_dyadic_partition(omega, 0.0, 1.0, 4);
  ASSERT_EQ(part.points.size(), 17u);
  for (std::size_t j = 0; j + 1 < part.points.size(); ++j) EXPECT_LT(part.points[j], part.points[j + 1]);
  const auto audit = audit_partition(omega, part);
  EXPECT_LE(audit.max_balance_residual, 1e-9);
  // An additive control splits into 2^K equal pieces.
  EXPECT_NEAR(audit.max_interval_control, audit.total_control / 16.0, 1e-9 * audit.total_control);
}

TEST(Partition, RootFindersAgree) {
  const auto path = random_path(22, 13);
  const auto omega = arc_length_control({path}, 1.0);
  const BalanceOptions bis{1e-12, RootFinder::bisection};
  const BalanceOptions ill{1e-12, RootFinder::illinois};
  for (const auto& [s, t] : {std::pair{0.0, 1.0}, std::pair{0.1, 0.3}, std::pair{0.37, 0.91}}) {
    EXPECT_NEAR(balance_point(omega, s, t, bis), balance_point(omega, s, t, ill), 1e-9);
  }
}

TEST(Partition, PausingPathIsRejected) {
  const auto path = std::make_shared<const PiecewiseLinearPath>(
      std::vector<double>{0.0, 0.25, 0.75, 1.0}, std::vector<std::vector<double>>{{0}, {1}, {1}, {2}});
  ASSERT_TRUE(path->has_pause());
  const auto omega = arc_length_control({path}, 1.0);
  for (auto method : {RootFinder::bisection, RootFinder::illinois}) {
    EXPECT_THROW(balance_point(omega, 0.0, 1.0, {1e-12, method}), NonMonotoneControl);
  }
}

TEST(Partition, RefinementIsNested) {
  const auto path = random_path(23, 7);
  const auto omega = arc_length_control({path}, 1.0);
  const auto p3 = total_dyadic_partition(omega, 0.0, 1.0, 3);
  const auto p4 = refine(omega, p3);
  ASSERT_EQ(p4.points.size(), 2 * p3.points.size() - 1);
  EXPECT_EQ(p4.order, 4u);
  for (std::size_t j = 0; j < p3.points.size(); ++j) EXPECT_EQ(p4.points[2 * j], p3.points[j]);

  DyadicRefinement lazy(omega, 0.0, 1.0);
  EXPECT_EQ(lazy.at(4).points, p4.points);
  EXPECT_EQ(lazy.at(3).points, p3.points);
}

}  // namespace
}  // namespace roughpath
