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
// Partitions of [s,t] balanced with respect to a control.

#ifndef ROUGHPATH_PARTITION_HPP
#define ROUGHPATH_PARTITION_HPP

#include <cstddef>
#include <deque>
#include <string>
#include <vector>

#include "roughpath/path.hpp"

namespace roughpath {

enum class RootFinder {
  bisection,
  illinois,  // regula falsi with the Illinois weight halving; keeps the bracket
};

struct BalanceOptions {
  double tol = 1e-12;  // relative to omega(s,t)
  RootFinder method = RootFinder::illinois;
};

// u in (s,t) with |omega(s,u) - omega(u,t)| <= tol * omega(s,t). Returns the
// time midpoint when omega(s,t) == 0. Throws NonMonotoneControl when the
// balance function is flat or has no sign change around the root.
double balance_point(const Control& omega, double s, double t, const BalanceOptions& options = {});

struct DyadicPartition {
  std::vector<double> points;  // 2^order + 1 strictly increasing times
  std::size_t order = 0;
  std::string control_tag;

  double start() const { return points.front(); }
  double end() const { return points.back(); }
  std::size_t intervals() const { return points.size() - 1; }
};

// The unique total K-dyadic partition: K rounds of midpoint insertion, one
// balance point per consecutive pair.
DyadicPartition total_dyadic_partition(const Control& omega, double s, double t, std::size_t order,
                                       const BalanceOptions& options = {});

// P_{K+1} from P_K. Points already in P_K are copied bit for bit.
DyadicPartition refine(const Control& omega, const DyadicPartition& partition,
                       const BalanceOptions& options = {});

struct PartitionAudit {
  double max_balance_residual = 0.0;  // |omega(left) - omega(right)| / omega(parent)
  double max_interval_control = 0.0;  // max_j omega(u_{j-1}, u_j)
  double total_control = 0.0;         // omega(s,t)
};

// Checks every stride-2^m coarsening, m = 0..order.
PartitionAudit audit_partition(const Control& omega, const DyadicPartition& partition);

// Lazily refined family P_0, P_1, ... of [s,t]; nested by construction, so
// one instance can be shared by every functional controlled by the same omega.
class DyadicRefinement {
 public:
  DyadicRefinement(Control omega, double s, double t, BalanceOptions options = {});

  const DyadicPartition& at(std::size_t order);
  const Control& control() const noexcept { return omega_; }
  double start() const noexcept { return s_; }
  double end() const noexcept { return t_; }

 private:
  Control omega_;
  double s_;
  double t_;
  BalanceOptions options_;
  std::deque<DyadicPartition> levels_;  // stable references
};

}  // namespace roughpath

#endif  // ROUGHPATH_PARTITION_HPP
