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
#include "roughpath/cde.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "roughpath/error.hpp"

namespace roughpath {

namespace {

double spectral_norm(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  return svd.singularValues()(0);
}

// Exact states at the sorted times `at`, advancing segment by segment.
std::vector<Eigen::VectorXd> flow_on_grid(const LinearCdeProblem& problem,
                                          const std::vector<double>& at) {
  const auto& path = problem.driver();
  const auto times = path.times();
  const std::size_t d = path.dim();
  std::vector<Eigen::VectorXd> out;
  out.reserve(at.size());
  Eigen::VectorXd x = problem.x0();
  double current_time = 0.0;
  std::vector<double> current = path.value_at(0.0);
  std::vector<double> increment(d);
  std::size_t next_knot = 1;

  auto advance_to = [&](double time, std::span<const double> value) {
    for (std::size_t k = 0; k < d; ++k) increment[k] = value[k] - current[k];
    x = matrix_exponential(problem.apply(increment.data())) * x;
    std::copy(value.begin(), value.end(), current.begin());
    current_time = time;
  };

  for (double t : at) {
    if (t < current_time) throw InvalidInput("flow grid must be sorted");
    while (next_knot < times.size() && times[next_knot] <= t) {
      advance_to(times[next_knot], path.point(next_knot));
      ++next_knot;
    }
    if (t > current_time) {
      const auto value = path.value_at(t);
      advance_to(t, value);
    }
    out.push_back(x);
  }
  return out;
}

}  // namespace

LinearCdeProblem::LinearCdeProblem(std::vector<Eigen::MatrixXd> A, Eigen::VectorXd x0,
                                   std::shared_ptr<const PiecewiseLinearPath> driver)
    : A_(std::move(A)), x0_(std::move(x0)), driver_(std::move(driver)) {
  if (!driver_) throw InvalidInput("linear CDE needs a driver");
  if (A_.size() != driver_->dim())
    throw InvalidInput("number of matrices must equal the driver dimension");
  const auto e = x0_.size();
  if (e == 0) throw InvalidInput("state dimension must be positive");
  for (const auto& a : A_)
    if (a.rows() != e || a.cols() != e) throw InvalidInput("every A_i must be e x e");
  norm_ = operator_norm_estimate(A_);
}

LinearCdeProblem LinearCdeProblem::with_driver(std::shared_ptr<const PiecewiseLinearPath> driver) const {
  return LinearCdeProblem(A_, x0_, std::move(driver));
}

Eigen::MatrixXd LinearCdeProblem::apply(const double* v) const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(x0_.size(), x0_.size());
  for (std::size_t i = 0; i < A_.size(); ++i) m += v[i] * A_[i];
  return m;
}

Eigen::MatrixXd matrix_exponential(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw InvalidInput("matrix_exponential needs a square matrix");
  const auto n = m.rows();
  const double norm = m.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const Eigen::MatrixXd b = m / std::ldexp(1.0, squarings);
  const double bnorm = norm / std::ldexp(1.0, squarings);

  Eigen::MatrixXd result = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
  double term_bound = 1.0;
  for (int k = 1; k < 40; ++k) {
    term = term * b / static_cast<double>(k);
    result += term;
    term_bound *= bnorm / k;
    // Remaining tail <= term_bound * bnorm / (k + 1) / (1 - bnorm / (k + 2)).
    if (term_bound * bnorm / (k + 1) < 1e-17) break;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

double operator_norm_estimate(const std::vector<Eigen::MatrixXd>& A) {
  const std::size_t d = A.size();
  if (d == 0) return 0.0;
  double cap_sq = 0.0;
  for (const auto& a : A) cap_sq += std::pow(spectral_norm(a), 2);
  const double cap = std::sqrt(cap_sq);
  if (cap == 0.0) return 0.0;

  auto norm_at = [&](const Eigen::VectorXd& v, Eigen::VectorXd* grad) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(A[0].rows(), A[0].cols());
    for (std::size_t i = 0; i < d; ++i) m += v(i) * A[i];
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (grad) {
      const Eigen::VectorXd u = svd.matrixU().col(0);
      const Eigen::VectorXd w = svd.matrixV().col(0);
      for (std::size_t i = 0; i < d; ++i) (*grad)(i) = u.dot(A[i] * w);
    }
    return svd.singularValues()(0);
  };

  std::mt19937_64 rng(20260101);
  std::normal_distribution<double> gauss;
  std::vector<Eigen::VectorXd> starts;
  for (std::size_t i = 0; i < d; ++i) starts.push_back(Eigen::VectorXd::Unit(d, i));
  for (int r = 0; r < 8; ++r) {
    Eigen::VectorXd v(d);
    for (std::size_t i = 0; i < d; ++i) v(i) = gauss(rng);
    starts.push_back(v.normalized());
  }

  double best = 0.0;
  Eigen::VectorXd grad(d);
  for (auto v : starts) {
    double value = norm_at(v, &grad);
    for (int it = 0; it < 200; ++it) {
      if (grad.norm() == 0.0) break;
      Eigen::VectorXd next = grad.normalized();
      const double next_value = norm_at(next, &grad);
      v = next;
      if (next_value <= value * (1.0 + 1e-14)) {
        value = std::max(value, next_value);
        break;
      }
      value = next_value;
    }
    best = std::max(best, value);
  }
  return std::min(best * 1.001, cap);
}

Eigen::VectorXd solve_exact(const LinearCdeProblem& problem, double t) {
  if (t < 0.0 || t > 1.0) throw InvalidInput("solve_exact requires t in [0,1]");
  return flow_on_grid(problem, {t}).front();
}

Eigen::VectorXd solve_series(const LinearCdeProblem& problem, double t, std::size_t depth) {
  if (t < 0.0 || t > 1.0) throw InvalidInput("solve_series requires t in [0,1]");
  const std::size_t d = problem.driver_dim();
  const auto e = problem.x0().size();
  const TruncatedTensor sig = signature(problem.driver(), 0.0, t, depth);

  Eigen::VectorXd x = problem.x0();
  // Column j of `words` is A_{i_n} ... A_{i_1} x0 for the word with flat index j.
  Eigen::MatrixXd words = problem.x0();
  for (std::size_t n = 1; n <= depth; ++n) {
    Eigen::MatrixXd next(e, words.cols() * static_cast<Eigen::Index>(d));
    for (Eigen::Index j = 0; j < words.cols(); ++j)
      for (std::size_t i = 0; i < d; ++i)
        next.col(j * static_cast<Eigen::Index>(d) + static_cast<Eigen::Index>(i)) =
            problem.A()[i] * words.col(j);
    words = std::move(next);
    const auto level = sig.level(n);
    x += words * Eigen::Map<const Eigen::VectorXd>(level.data(), static_cast<Eigen::Index>(level.size()));
  }
  return x;
}

double series_tail_bound(const LinearCdeProblem& problem, double t, std::size_t depth) {
  const double a = problem.operator_norm() * one_variation(problem.driver(), 0.0, t);
  double term = 1.0;
  for (std::size_t n = 1; n <= depth; ++n) term *= a / static_cast<double>(n);
  // Summed forward rather than as e^a minus the partial sum, which cancels.
  double tail = 0.0;
  for (std::size_t n = depth + 1; n < depth + 200; ++n) {
    term *= a / static_cast<double>(n);
    tail += term;
    if (term < tail * 1e-17) break;
  }
  return problem.x0().norm() * tail;
}

double flow_difference_bound(const LinearCdeProblem& problem, double epsilon, double omega_st,
                             double beta, double C) {
  if (!(epsilon > 0.0)) throw InvalidInput("flow_difference_bound requires epsilon > 0");
  const double a = problem.operator_norm();
  return 2.0 * a * std::min(epsilon, omega_st) +
         epsilon * (1.0 + std::log2(C / epsilon)) * (a / beta) * std::expm1(a * omega_st);
}

double sup_distance(const PiecewiseLinearPath& a, const PiecewiseLinearPath& b) {
  if (a.dim() != b.dim()) throw InvalidInput("sup_distance needs paths of equal dimension");
  std::vector<double> grid(a.times().begin(), a.times().end());
  grid.insert(grid.end(), b.times().begin(), b.times().end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  double worst = 0.0;
  for (double t : grid) {
    const auto va = a.value_at(t);
    const auto vb = b.value_at(t);
    double sq = 0.0;
    for (std::size_t k = 0; k < va.size(); ++k) sq += (va[k] - vb[k]) * (va[k] - vb[k]);
    worst = std::max(worst, std::sqrt(sq));
  }
  return worst;
}

FlowComparison compare_flows(const LinearCdeProblem& x, const LinearCdeProblem& y,
                             std::size_t extra_points) {
  if (x.state_dim() != y.state_dim()) throw InvalidInput("compared problems differ in state dimension");
  std::vector<double> grid(x.driver().times().begin(), x.driver().times().end());
  grid.insert(grid.end(), y.driver().times().begin(), y.driver().times().end());
  for (std::size_t i = 0; i <= extra_points; ++i)
    grid.push_back(extra_points == 0 ? 0.0 : static_cast<double>(i) / static_cast<double>(extra_points));
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  const auto xs = flow_on_grid(x, grid);
  const auto ys = flow_on_grid(y, grid);
  std::vector<Eigen::VectorXd> diff(grid.size());
  FlowComparison out;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    diff[i] = xs[i] - ys[i];
    out.sup_difference = std::max(out.sup_difference, diff[i].norm());
  }
  for (std::size_t i = 0; i < diff.size(); ++i)
    for (std::size_t j = i + 1; j < diff.size(); ++j)
      out.max_increment_difference = std::max(out.max_increment_difference, (diff[j] - diff[i]).norm());
  return out;
}

}  // namespace roughpath
