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
// Multiplicative extension of a functional beyond the levels it carries, as
// the limit of products over total dyadic partitions.

#ifndef ROUGHPATH_EXTENSION_HPP
#define ROUGHPATH_EXTENSION_HPP

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "roughpath/partition.hpp"
#include "roughpath/path.hpp"
#include "roughpath/tensor.hpp"

namespace roughpath {

struct ExtensionConfig {
  double convergence_tol = 1e-10;  // on the change of every extended level
  std::size_t max_order = 22;      // K_max
  std::size_t target_depth = 4;
  // Geometric tail extrapolation of the finest-level drop-point defects.
  bool extrapolate = true;
  // Exponent q in the tail ratio (1/2)^{m/q - 1} used for level m; 0 means
  // the functional's own p. Functionals built from bounded-variation paths
  // decay at the q = 1 rate whatever their nominal p.
  double tail_exponent = 0.0;
  BalanceOptions balance{};
};

// Product of the hat factors (1, X^1, ..., X^n, 0) over consecutive points,
// taken in T^{n+1}.
TruncatedTensor hat_partition_product(const ControlledFunctional& x, std::span<const double> points,
                                      std::size_t depth_in);
TruncatedTensor hat_partition_product(const ControlledFunctional& x,
                                      const DyadicPartition& partition, std::size_t depth_in);

// sum_{k=1..n} X^k_{u_prev,u} (x) X^{n+1-k}_{u,u_next}: the level-(n+1) change
// of the hat product when u is dropped from the partition.
std::vector<double> drop_point_defect(const ControlledFunctional& x, double u_prev, double u,
                                      double u_next, std::size_t depth_in);

struct LevelTrace {
  std::size_t level = 0;
  // ||sum of the drop-point defects of P_{K+1} \ P_K||, K = 0, 1, ...
  std::vector<double> increments;
};

struct ExtensionTrace {
  std::size_t final_order = 0;     // finest partition order used
  double last_change = 0.0;        // between the last two orders
  std::vector<LevelTrace> levels;  // one per extended level, at the final order
  std::vector<std::string> warnings;
};

struct ExtensionResult {
  TruncatedTensor value;
  ExtensionTrace trace;
};

// Lift of x to config.target_depth on [s,t]. Partitions come from `shared`
// when given (it must be built on [s,t] with x's control), otherwise from a
// private refinement. Throws ConvergenceError when max_order is reached.
ExtensionResult lyons_extend_traced(const ControlledFunctional& x, double s, double t,
                                    const ExtensionConfig& config,
                                    DyadicRefinement* shared = nullptr);

TruncatedTensor lyons_extend(const ControlledFunctional& x, double s, double t,
                             const ExtensionConfig& config, DyadicRefinement* shared = nullptr);

// Smallest beta for which every lift stays controlled by the same omega and
// beta: p / (1 - (1/2)^{(floor(p)+1)/p - 1}).
double extension_beta_threshold(double p);

// x lifted to config.target_depth, evaluated through lyons_extend.
ControlledFunctional extended_functional(const ControlledFunctional& x, const ExtensionConfig& config);

}  // namespace roughpath

#endif  // ROUGHPATH_EXTENSION_HPP
