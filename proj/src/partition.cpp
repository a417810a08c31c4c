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
#include "roughpath/partition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "roughpath/error.hpp"

namespace roughpath {

namespace {

std::string interval_name(double s, double t) {
  std::ostringstream os;
  os.precision(17);
  os << "[" << s << ", " << t << "]";
  return os.str();
}

}  // namespace

double balance_point(const Control& omega, double s, double t, const BalanceOptions& options) {
  if (!(s < t)) throw InvalidInput("balance_point requires s < t, got " + interval_name(s, t));
  const double total = omega(s, t);
  if (!(total > 0.0)) return 0.5 * (s + t);

  auto f = [&](double u) { return omega(s, u) - omega(u, t); };
  const double target = options.tol * total;

  double lo = s, hi = t;
  double flo = -total, fhi = total;
  double best = 0.5 * (s + t);
  double best_f = std::numeric_limits<double>::infinity();
  int side = 0;
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) break;  // bracket exhausted at machine precision
    double x = mid;
    if (options.method == RootFinder::illinois) {
      x = (flo * hi - fhi * lo) / (flo - fhi);
      if (!(x > lo && x < hi)) x = mid;
    }
    const double fx = f(x);
    if (std::abs(fx) < std::abs(best_f)) {
      best = x;
      best_f = fx;
    }
    if (std::abs(fx) <= target) break;
    if (fx > 0.0) {
      hi = x;
      fhi = fx;
      if (side == 1) flo *= 0.5;
      side = 1;
    } else {
      lo = x;
      flo = fx;
      if (side == -1) fhi *= 0.5;
      side = -1;
    }
  }

  // The root must separate strictly negative from strictly positive values;
  // a flat stretch (a pausing path) leaves the balance point undetermined.
  const double h = 1e-7 * (t - s);
  const double left = std::max(s, best - h);
  const double right = std::min(t, best + h);
  if (!(f(left) < best_f && best_f < f(right)))
    throw NonMonotoneControl("control is not strictly monotone near the balance point of " +
                                 interval_name(s, t) + " (" + omega.description() + ")",
                             s, t);
  return best;
}

DyadicPartition refine(const Control& omega, const DyadicPartition& partition,
                       const BalanceOptions& options) {
  DyadicPartition next;
  next.order = partition.order + 1;
  next.control_tag = partition.control_tag;
  next.points.reserve(2 * partition.points.size() - 1);
  for (std::size_t j = 0; j + 1 < partition.points.size(); ++j) {
    const double a = partition.points[j];
    const double b = partition.points[j + 1];
    next.points.push_back(a);
    next.points.push_back(balance_point(omega, a, b, options));
  }
  next.points.push_back(partition.points.back());
  return next;
}

DyadicPartition total_dyadic_partition(const Control& omega, double s, double t, std::size_t order,
                                       const BalanceOptions& options) {
  if (!(s < t)) throw InvalidInput("total_dyadic_partition requires s < t, got " + interval_name(s, t));
  DyadicPartition p{{s, t}, 0, omega.description()};
  for (std::size_t k = 0; k < order; ++k) p = refine(omega, p, options);
  return p;
}

PartitionAudit audit_partition(const Control& omega, const DyadicPartition& partition) {
  PartitionAudit audit;
  const auto& u = partition.points;
  audit.total_control = omega(partition.start(), partition.end());
  for (std::size_t m = 0; m < partition.order; ++m) {
    const std::size_t stride = std::size_t{1} << m;
    for (std::size_t j = stride; j + stride < u.size(); j += 2 * stride) {
      const double parent = omega(u[j - stride], u[j + stride]);
      if (parent <= 0.0) continue;
      const double diff = std::abs(omega(u[j - stride], u[j]) - omega(u[j], u[j + stride]));
      audit.max_balance_residual = std::max(audit.max_balance_residual, diff / parent);
    }
  }
  for (std::size_t j = 1; j < u.size(); ++j)
    audit.max_interval_control = std::max(audit.max_interval_control, omega(u[j - 1], u[j]));
  return audit;
}

DyadicRefinement::DyadicRefinement(Control omega, double s, double t, BalanceOptions options)
    : omega_(std::move(omega)), s_(s), t_(t), options_(options) {
  if (!(s < t)) throw InvalidInput("dyadic refinement requires s < t, got " + interval_name(s, t));
  levels_.push_back(DyadicPartition{{s, t}, 0, omega_.description()});
}

const DyadicPartition& DyadicRefinement::at(std::size_t order) {
  while (levels_.size() <= order) levels_.push_back(refine(omega_, levels_.back(), options_));
  return levels_[order];
}

}  // namespace roughpath
