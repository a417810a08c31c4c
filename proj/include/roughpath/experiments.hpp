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
// The acceptance experiments, shared by the acceptance binary and the
// `all` subcommand, plus the scenario builders the other subcommands use.

#ifndef ROUGHPATH_EXPERIMENTS_HPP
#define ROUGHPATH_EXPERIMENTS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "roughpath/bounds.hpp"
#include "roughpath/cde.hpp"
#include "roughpath/extension.hpp"
#include "roughpath/path.hpp"

namespace roughpath {

inline constexpr std::uint64_t kDefaultSeed = 20260516;

struct Check {
  std::string name;
  double measured = 0.0;
  double limit = 0.0;
  std::string relation;  // "<", "<=", "==" or "in"; "in" uses [limit, upper]
  double upper = 0.0;
  bool pass = false;
};

struct CriterionOutcome {
  int id = 0;
  std::string title;
  std::vector<Check> checks;
  std::vector<std::string> notes;
  bool passed() const;
};

struct SuiteOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t theorem_pairs = 64;
  double theorem_tol = 1e-8;     // extension tolerance inside the estimate checks
  double extension_tol = 1e-10;  // extension tolerance for the signature oracle
};

using PathPtr = std::shared_ptr<const PiecewiseLinearPath>;

// Uniform knots, Gaussian increments of standard deviation `scale` plus
// `drift` per step in every coordinate.
PathPtr random_bv_path(std::mt19937_64& rng, std::size_t dim, std::size_t segments, double scale,
                       double drift = 0.0);

// base + amplitude * (sin(2 pi f_1 t), ..., sin(2 pi f_d t)) with f = 3, 2, 5, 4, ...
// sampled on `grid` uniform intervals plus the base knots.
PathPtr sinusoidal_perturbation(const PathPtr& base, double amplitude, std::size_t grid);

// Two paths lifted as p-rough functionals under one calibrated joint control.
struct PathPairScenario {
  PathPtr base;
  PathPtr perturbed;
  double p = 1.0;
  double delta = 1.0;
  double beta = 1.0;
  double control_scale = 0.0;
  std::optional<ControlledFunctional> x;
  std::optional<ControlledFunctional> y;
  std::vector<TimePair> pairs;
  double epsilon = 0.0;
  EstimateParams params() const;
};

// beta <= 0 selects 1.05 * beta_threshold(p, delta).
PathPairScenario make_scenario(const PathPtr& base, const PathPtr& perturbed, double p,
                               double delta, double beta, std::size_t levels,
                               std::size_t sample_pairs, std::uint64_t seed);

double auto_beta(double p, double delta);

// The rotation problem: d = 1, e = 2, A(v) = v [[0,-1],[1,0]], x0 = (1,0),
// driver 0 -> 0.8 -> 0.3 -> 1.0 at times 0, 1/3, 2/3, 1.
LinearCdeProblem rotation_problem();

struct CdeSweepRow {
  double amplitude = 0.0;
  double epsilon = 0.0;  // measured sup-distance of the drivers
  double C = 0.0;        // omega(0,1)
  double beta = 0.0;
  double sup_difference = 0.0;
  double max_increment_difference = 0.0;
  double bound = 0.0;
  double normalized = 0.0;  // sup_difference / (eps (1 + log2(C / eps)))
};

// Perturbs the problem's driver by every amplitude and compares flows.
std::vector<CdeSweepRow> cde_sweep(const LinearCdeProblem& problem,
                                   const std::vector<double>& amplitudes, double beta,
                                   std::uint64_t seed);

CriterionOutcome chen_identity(const SuiteOptions& options);
CriterionOutcome quadrature_oracle(const SuiteOptions& options);
CriterionOutcome neoclassical_sweep(const SuiteOptions& options);
CriterionOutcome extension_oracle(const SuiteOptions& options);
CriterionOutcome increment_audit(const SuiteOptions& options);
CriterionOutcome uniform_estimate(const SuiteOptions& options);
CriterionOutcome beta_thresholds(const SuiteOptions& options);
CriterionOutcome cde_application(const SuiteOptions& options);

// Criteria 1 to 8 in order.
std::vector<CriterionOutcome> run_suite(const SuiteOptions& options);

}  // namespace roughpath

#endif  // ROUGHPATH_EXPERIMENTS_HPP
