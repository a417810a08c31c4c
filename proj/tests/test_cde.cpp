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

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <unsupported/Eigen/MatrixFunctions>

#include "roughpath/cde.hpp"
#include "roughpath/error.hpp"

namespace roughpath {
namespace {

std::shared_ptr<const PiecewiseLinearPath> random_driver(std::mt19937_64& rng, std::size_t dim,
                                                         std::size_t segs) {
  std::normal_distribution<double> gauss(0.0, 0.3);
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

std::vector<Eigen::MatrixXd> random_matrices(std::mt19937_64& rng, std::size_t d, Eigen::Index e) {
  std::normal_distribution<double> gauss;
  std::vector<Eigen::MatrixXd> A(d, Eigen::MatrixXd(e, e));
  for (auto& a : A)
    for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = gauss(rng);
  return A;
}

Eigen::MatrixXd rotation_generator() {
  Eigen::MatrixXd j(2, 2);
  j << 0, -1, 1, 0;
  return j;
}

// Classical RK4 on dx/dt = A(gamma'(t)) x, n steps per driver segment.
Eigen::VectorXd rk4(const LinearCdeProblem& problem, std::size_t steps) {
  const auto& path = problem.driver();
  Eigen::VectorXd x = problem.x0();
  for (std::size_t i = 0; i + 1 < path.samples(); ++i) {
    const double dt = path.times()[i + 1] - path.times()[i];
    std::vector<double> velocity(path.dim());
    for (std::size_t k = 0; k < path.dim(); ++k) velocity[k] = (path.point(i + 1)[k] - path.point(i)[k]) / dt;
    const Eigen::MatrixXd m = problem.apply(velocity.data());
    const double h = dt / static_cast<double>(steps);
    for (std::size_t s = 0; s < steps; ++s) {
      const Eigen::VectorXd k1 = m * x;
      const Eigen::VectorXd k2 = m * (x + 0.5 * h * k1);
      const Eigen::VectorXd k3 = m * (x + 0.5 * h * k2);
      const Eigen::VectorXd k4 = m * (x + h * k3);
      x += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
  }
  return x;
}

TEST(Cde, ZeroVectorFieldKeepsInitialState) {
  std::mt19937_64 rng(41);
  LinearCdeProblem problem({Eigen::MatrixXd::Zero(3, 3), Eigen::MatrixXd::Zero(3, 3)}, Eigen::Vector3d(1, -2, 0.5),
                           random_driver(rng, 2, 6));
  EXPECT_EQ(problem.operator_norm(), 0.0);
  EXPECT_EQ((solve_exact(problem, 0.7) - problem.x0()).norm(), 0.0);
  EXPECT_EQ((solve_series(problem, 1.0, 5) - problem.x0()).norm(), 0.0);
  EXPECT_EQ(flow_difference_bound(problem, 0.1, 0.5, 16.8, 1.0), 0.0);
}

TEST(Cde, ScalarEquationIsExponential) {
  std::mt19937_64 rng(42);
  const auto driver = random_driver(rng, 1, 9);
  LinearCdeProblem problem({Eigen::MatrixXd::Constant(1, 1, 0.8)}, Eigen::VectorXd::Constant(1, 2.0), driver);
  for (double t : {0.0, 0.13, 0.5, 1.0}) {
    const double expected = 2.0 * std::exp(0.8 * (driver->value_at(t)[0] - driver->value_at(0.0)[0]));
    EXPECT_NEAR(solve_exact(problem, t)(0), expected, 1e-13 * expected);
  }
}

TEST(Cde, RotationMatchesRungeKutta) {
  std::mt19937_64 rng(43);
  LinearCdeProblem problem({rotation_generator(), Eigen::MatrixXd::Identity(2, 2) * 0.3},
                           Eigen::Vector2d(1, 0), random_driver(rng, 2, 7));
  EXPECT_LT((solve_exact(problem, 1.0) - rk4(problem, 4000)).norm(), 1e-10);
}

TEST(Cde, SeriesWithinTailBound) {
  std::mt19937_64 rng(44);
  auto A = random_matrices(rng, 2, 3);
  const auto driver = random_driver(rng, 2, 8);
  const double length = one_variation(*driver, 0.0, 1.0);
  const double scale = 2.0 / (operator_norm_estimate(A) * length);
  for (auto& a : A) a *= scale;
  LinearCdeProblem problem(A, Eigen::Vector3d(0.3, 1.0, -0.7), driver);
  const double err = (solve_series(problem, 1.0, 10) - solve_exact(problem, 1.0)).norm();
  const double bound = series_tail_bound(problem, 1.0, 10);
  EXPECT_LE(err, bound);
  EXPECT_LT(bound, 1e-4);
}

TEST(Cde, RotationSeriesIsTaylorOfAngle) {
  const auto driver = std::make_shared<const PiecewiseLinearPath>(
      std::vector<double>{0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0}, std::vector<std::vector<double>>{{0}, {0.8}, {0.3}, {1}});
  LinearCdeProblem problem({rotation_generator()}, Eigen::Vector2d(1, 0), driver);
  const Eigen::VectorXd x = solve_series(problem, 1.0, 12);
  EXPECT_NEAR(x(0), std::cos(1.0), 1e-9);
  EXPECT_NEAR(x(1), std::sin(1.0), 1e-9);
  const Eigen::VectorXd exact = solve_exact(problem, 1.0);
  EXPECT_NEAR(exact(0), std::cos(1.0), 1e-14);
  EXPECT_NEAR(exact(1), std::sin(1.0), 1e-14);
}

TEST(Cde, StraightDriverIsOneExponential) {
  const auto driver = std::make_shared<const PiecewiseLinearPath>(
      std::vector<double>{0.0, 1.0}, std::vector<std::vector<double>>{{0, 0}, {0.6, -0.9}});
  std::mt19937_64 rng(45);
  const auto A = random_matrices(rng, 2, 4);
  LinearCdeProblem problem(A, Eigen::Vector4d(1, 0, 0, 1), driver);
  const Eigen::MatrixXd m = 0.6 * A[0] - 0.9 * A[1];
  for (double t : {0.25, 0.6, 1.0}) {
    const Eigen::VectorXd expected = (t * m).exp() * problem.x0();
    EXPECT_LT((solve_exact(problem, t) - expected).norm(), 1e-12 * expected.norm());
  }
}

TEST(Cde, MatrixExponentialMatchesEigen) {
  std::mt19937_64 rng(46);
  for (double scale : {1e-3, 0.4, 1.0, 5.0, 20.0}) {
    const Eigen::MatrixXd m = random_matrices(rng, 1, 5)[0] * scale;
    const Eigen::MatrixXd expected = m.exp();
    EXPECT_LT((matrix_exponential(m) - expected).norm(), 1e-12 * expected.norm()) << "scale " << scale;
  }
  EXPECT_THROW(matrix_exponential(Eigen::MatrixXd::Zero(2, 3)), InvalidInput);
}

TEST(Cde, OperatorNormAgainstSphereScan) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 5; ++trial) {
    const auto A = random_matrices(rng, 2, 3);
    double brute = 0.0;
    for (int i = 0; i < 20000; ++i) {
      const double th = 2.0 * M_PI * i / 20000.0;
      const Eigen::MatrixXd m = std::cos(th) * A[0] + std::sin(th) * A[1];
      brute = std::max(brute, Eigen::JacobiSVD<Eigen::MatrixXd>(m).singularValues()(0));
    }
    const double estimate = operator_norm_estimate(A);
    EXPECT_GE(estimate, brute);
    EXPECT_LE(estimate, brute * 1.0011);
  }
}

TEST(Cde, DifferenceBoundShrinksWithEpsilon) {
  LinearCdeProblem problem({rotation_generator()}, Eigen::Vector2d(1, 0),
                           std::make_shared<const PiecewiseLinearPath>(
                               std::vector<double>{0.0, 1.0}, std::vector<std::vector<double>>{{0}, {1}}));
  double previous = std::numeric_limits<double>::infinity();
  for (double eps : {1e-1, 1e-2, 1e-4, 1e-8, 1e-12}) {
    const double b = flow_difference_bound(problem, eps, 1.0, 16.8, 1.0);
    EXPECT_GT(b, 0.0);
    EXPECT_LT(b, previous);
    previous = b;
  }
  EXPECT_LT(previous, 1e-9);
  EXPECT_THROW(flow_difference_bound(problem, 0.0, 1.0, 16.8, 1.0), InvalidInput);
}

TEST(Cde, SupDistanceAndFlowComparison) {
  const auto a = std::make_shared<const PiecewiseLinearPath>(
      std::vector<double>{0.0, 1.0}, std::vector<std::vector<double>>{{0, 0}, {1, 0}});
  const auto b = std::make_shared<const PiecewiseLinearPath>(
      std::vector<double>{0.0, 0.5, 1.0}, std::vector<std::vector<double>>{{0, 0}, {0.5, 0.25}, {1, 0}});
  EXPECT_DOUBLE_EQ(sup_distance(*a, *b), 0.25);
  EXPECT_EQ(sup_distance(*a, *a), 0.0);

  LinearCdeProblem x({rotation_generator(), Eigen::MatrixXd::Identity(2, 2)}, Eigen::Vector2d(1, 0), a);
  const auto same = compare_flows(x, x, 16);
  EXPECT_EQ(same.sup_difference, 0.0);
  EXPECT_EQ(same.max_increment_difference, 0.0);
  const auto diff = compare_flows(x, x.with_driver(b), 16);
  EXPECT_GT(diff.sup_difference, 0.0);
  EXPECT_GE(diff.max_increment_difference, diff.sup_difference - 1e-15);  // x_0 = y_0
}

TEST(Cde, RejectsInconsistentShapes) {
  const auto a = std::make_shared<const PiecewiseLinearPath>(
      std::vector<double>{0.0, 1.0}, std::vector<std::vector<double>>{{0, 0}, {1, 0}});
  EXPECT_THROW(LinearCdeProblem({rotation_generator()}, Eigen::Vector2d(1, 0), a), InvalidInput);
  EXPECT_THROW(LinearCdeProblem({rotation_generator(), rotation_generator()}, Eigen::Vector3d(1, 0, 0), a),
               InvalidInput);
}

}  // namespace
}  // namespace roughpath
