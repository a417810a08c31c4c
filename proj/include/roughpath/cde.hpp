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
// Linear controlled equation dx = A(dgamma) x, x_0 = x0, for a
// piecewise-linear driver gamma in R^d and state x in R^e.

#ifndef ROUGHPATH_CDE_HPP
#define ROUGHPATH_CDE_HPP

#include <cstddef>
#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "roughpath/path.hpp"

namespace roughpath {

class LinearCdeProblem {
 public:
  // A(v) = sum_i v_i A[i]; every A[i] is e x e and x0 has e entries.
  LinearCdeProblem(std::vector<Eigen::MatrixXd> A, Eigen::VectorXd x0,
                   std::shared_ptr<const PiecewiseLinearPath> driver);

  std::size_t driver_dim() const noexcept { return A_.size(); }
  std::size_t state_dim() const noexcept { return static_cast<std::size_t>(x0_.size()); }
  const std::vector<Eigen::MatrixXd>& A() const noexcept { return A_; }
  const Eigen::VectorXd& x0() const noexcept { return x0_; }
  const PiecewiseLinearPath& driver() const noexcept { return *driver_; }
  std::shared_ptr<const PiecewiseLinearPath> driver_ptr() const noexcept { return driver_; }

  // Same A and x0 with another driver of the same dimension.
  LinearCdeProblem with_driver(std::shared_ptr<const PiecewiseLinearPath> driver) const;

  // A(v) for v in R^d.
  Eigen::MatrixXd apply(const double* v) const;

  // Upper estimate of max_{|v| = 1} ||A(v)||_2, cached.
  double operator_norm() const noexcept { return norm_; }

 private:
  std::vector<Eigen::MatrixXd> A_;
  Eigen::VectorXd x0_;
  std::shared_ptr<const PiecewiseLinearPath> driver_;
  double norm_ = 0.0;
};

// exp(M) by scaling and squaring with a Taylor series; tail below 1e-14
// relative to the scaled norm.
Eigen::MatrixXd matrix_exponential(const Eigen::MatrixXd& m);

// Power iteration over the unit sphere of R^d (fixed seed), inflated by
// 1.001 and capped by sqrt(sum_i ||A_i||_2^2).
double operator_norm_estimate(const std::vector<Eigen::MatrixXd>& A);

// Product of segment flows exp(A(dgamma_i)) applied to x0 up to time t.
Eigen::VectorXd solve_exact(const LinearCdeProblem& problem, double t);

// sum_{n=0..depth} of A applied n times to x0, contracted with signature
// level n of the driver on [0,t].
Eigen::VectorXd solve_series(const LinearCdeProblem& problem, double t, std::size_t depth);

// |x0| sum_{n > depth} (||A|| L)^n / n!, L the driver length on [0,t].
double series_tail_bound(const LinearCdeProblem& problem, double t, std::size_t depth);

// 2||A|| min{eps, omega_st} + eps (1 + log2(C/eps)) (||A||/beta) (e^{||A|| omega_st} - 1).
double flow_difference_bound(const LinearCdeProblem& problem, double epsilon, double omega_st,
                             double beta, double C);

// sup_t |gamma_t - gamma~_t| over the union of both sample grids (exact for
// piecewise-linear paths).
double sup_distance(const PiecewiseLinearPath& a, const PiecewiseLinearPath& b);

struct FlowComparison {
  double sup_difference = 0.0;        // sup_t |x_t - y_t|
  double max_increment_difference = 0.0;  // max_{s<t} |(x_t - x_s) - (y_t - y_s)| over the grid
};

// Exact solutions for both drivers evaluated on the union of their knots
// plus `extra_points` uniform times.
FlowComparison compare_flows(const LinearCdeProblem& x, const LinearCdeProblem& y,
                             std::size_t extra_points = 256);

}  // namespace roughpath

#endif  // ROUGHPATH_CDE_HPP
