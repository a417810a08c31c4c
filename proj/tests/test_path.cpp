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
#include "roughpath/path.hpp"
#include "roughpath/reference.hpp"
#include "roughpath/sampling.hpp"

namespace roughpath {
namespace {

std::shared_ptr<const PiecewiseLinearPath> two_segment() {
  return std::make_shared<const PiecewiseLinearPath>(std::vector<double>{0.0, 0.5, 1.0},
                                                     std::vector<std::vector<double>>{{0, 0}, {1, 0}, {1, 1}});
}

std::shared_ptr<const PiecewiseLinearPath> random_path(std::mt19937_64& rng, std::size_t dim, std::size_t segs) {
  std::normal_distribution<double> gauss(0.0, 0.4);
  std::vector<double> times;
  std::vector<std::vector<double>> pts;
  std::vector<double> x(dim, 0.0);
  for (std::size_t i = 0; i <= segs; ++i) {
    times.push_back(static_cast<double>(i) / segs);
    if (i > 0)
      for (auto& c : x) c += gauss(rng);
    pts.push_back(x);
  }
  return std::make_shared<const PiecewiseLinearPath>(times, pts);
}

TEST(Path, RejectsMalformedInput) {
  using P = std::vector<std::vector<double>>;
  EXPECT_THROW(PiecewiseLinearPath({0.0}, P{{0}}), InvalidInput);
  EXPECT_THROW(PiecewiseLinearPath({0.0, 0.5}, P{{0}, {1}}), InvalidInput);
  EXPECT_THROW(PiecewiseLinearPath({0.0, 0.5, 0.5, 1.0}, P{{0}, {1}, {2}, {3}}), InvalidInput);
  EXPECT_THROW(PiecewiseLinearPath({0.0, 1.0}, P{{0, 1}, {1}}), InvalidInput);
  EXPECT_THROW(PiecewiseLinearPath({0.0, 1.0}, P{{0}}), InvalidInput);
}

TEST(Path, InterpolatesLinearly) {
  const auto p = two_segment();
  const auto v = p->value_at(0.75);
  EXPECT_DOUBLE_EQ(v[0], 1.0);
  EXPECT_DOUBLE_EQ(v[1], 0.5);
  EXPECT_DOUBLE_EQ(one_variation(*p, 0.25, 0.75), 1.0);
  EXPECT_DOUBLE_EQ(one_variation(*p, 0.0, 1.0), 2.0);
}

TEST(Path, TwoSegmentSignature) {
  const auto sig = signature(*two_segment(), 0.0, 1.0, 2);
  EXPECT_DOUBLE_EQ((sig[{1}]), 1.0);
  EXPECT_DOUBLE_EQ((sig[{2}]), 1.0);
  EXPECT_DOUBLE_EQ((sig[{1, 1}]), 0.5);
  EXPECT_DOUBLE_EQ((sig[{1, 2}]), 1.0);
  EXPECT_DOUBLE_EQ((sig[{2, 1}]), 0.0);
  EXPECT_DOUBLE_EQ((sig[{2, 2}]), 0.5);
}

TEST(Path, SingleSegmentIsSegmentSignature) {
  const PiecewiseLinearPath p({0.0, 1.0}, {{0.5, -1.0, 2.0}, {1.5, 0.0, 1.0}});
  const double v[] = {1.0, 1.0, -1.0};
  EXPECT_LT(max_abs_difference(signature(p, 0.0, 1.0, 5), segment_signature(v, 5)), 1e-15);
}

TEST(Path, EmptyIntervalIsIdentity) {
  EXPECT_TRUE(signature(*two_segment(), 0.3, 0.3, 4) == TruncatedTensor::identity(2, 4));
  EXPECT_THROW(signature(*two_segment(), 0.6, 0.3, 2), InvalidInput);
}

TEST(Path, SignatureAgreesWithQuadrature) {
  std::mt19937_64 rng(11);
  const auto p = random_path(rng, 2, 5);
  const auto sig = signature(*p, 0.1, 0.85, 3);
  const auto coarse = reference::riemann_signature(*p, 0.1, 0.85, 3, 2000);
  const auto fine = reference::riemann_signature(*p, 0.1, 0.85, 3, 8000);
  for (std::size_t k = 1; k <= 3; ++k) {
    double ec = 0.0, ef = 0.0;
    for (std::size_t i = 0; i < coarse[k].size(); ++i) {
      ec = std::max(ec, std::abs(coarse[k][i] - sig.level(k)[i]));
      ef = std::max(ef, std::abs(fine[k][i] - sig.level(k)[i]));
    }
    EXPECT_LT(ef, 2e-3);
    if (k == 1) {
      EXPECT_LT(ec, 1e-12);  // increments are summed exactly
    } else {
      EXPECT_GT(ec / ef, 3.0);  // first-order convergence: 4x finer grid
    }
  }
}

TEST(Path, ChenIdentityOnSampledTriples) {
  std::mt19937_64 rng(12);
  const auto p = random_path(rng, 3, 12);
  const auto x = path_functional(p, 4, 1.0, 1.0, arc_length_control({p}, 1.0));
  const auto triples = ordered_triples(50, 3);
  EXPECT_LT(chen_defect(x, triples), 1e-12);
}

TEST(Path, ArcLengthControlIsAdditive) {
  std::mt19937_64 rng(13);
  const auto p = random_path(rng, 2, 7);
  const auto omega = arc_length_control({p}, 2.5);
  for (const auto& tr : ordered_triples(40, 5)) {
    EXPECT_NEAR(omega(tr[0], tr[1]) + omega(tr[1], tr[2]), omega(tr[0], tr[2]), 1e-12);
  }
  EXPECT_EQ(omega(0.4, 0.4), 0.0);
}

TEST(Path, CalibratedControlDominatesSignature) {
  std::mt19937_64 rng(14);
  const auto p = random_path(rng, 2, 6);
  for (double pv : {1.0, 1.5, 2.5}) {
    const auto cal = calibrated_control(*p, pv, 3.0, 4, 64);
    const auto x = path_functional(p, 4, pv, 3.0, cal.control);
    const auto pairs = simplex_pairs(64, 7);
    // At p = 1 level 1 holds with equality, up to rounding.
    EXPECT_GE(pvariation_slack(x, pairs, 4), -1e-14) << "p = " << pv;
  }
}

TEST(Path, CalibrationAtPOneIsCappedByBeta) {
  std::mt19937_64 rng(15);
  const auto p = random_path(rng, 2, 6);
  EXPECT_LE(calibrated_control(*p, 1.0, 4.0, 5, 64).scale, 4.0);
}

TEST(Path, PauseIsDetected) {
  const PiecewiseLinearPath paused({0.0, 0.5, 1.0}, {{0.0}, {1.0}, {1.0}});
  EXPECT_TRUE(paused.has_pause());
  EXPECT_FALSE(two_segment()->has_pause());
}

TEST(Sampling, PairsAreDeterministicAndOrdered) {
  const auto a = simplex_pairs(100, 42);
  const auto b = simplex_pairs(100, 42);
  const auto c = simplex_pairs(100, 43);
  ASSERT_EQ(a.size(), 100u);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  for (const auto& [s, t] : a) {
    EXPECT_LE(0.0, s);
    EXPECT_LT(s, t);
    EXPECT_LE(t, 1.0);
  }
}

}  // namespace
}  // namespace roughpath
