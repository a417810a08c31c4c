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
// Piecewise-linear paths on [0,1], their signatures over subintervals,
// arc-length controls and the multiplicative functionals built from them.

#ifndef ROUGHPATH_PATH_HPP
#define ROUGHPATH_PATH_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "roughpath/tensor.hpp"

namespace roughpath {

class PiecewiseLinearPath {
 public:
  // times: strictly increasing, times.front() == 0, times.back() == 1.
  // points: one R^d vector per time, all of the same dimension.
  PiecewiseLinearPath(std::vector<double> times, const std::vector<std::vector<double>>& points);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t samples() const noexcept { return times_.size(); }
  std::span<const double> times() const noexcept { return times_; }
  std::span<const double> point(std::size_t i) const;

  std::vector<double> value_at(double t) const;

  // Arc length accumulated on [0, t].
  double cumulative_length(double t) const;

  // True when some segment has zero length; arc-length controls of such
  // paths are not strictly monotone.
  bool has_pause() const noexcept;

 private:
  // Index i of the segment [times_[i], times_[i+1]] containing t.
  std::size_t segment_of(double t) const;

  std::size_t dim_ = 0;
  std::vector<double> times_;
  std::vector<double> points_;      // row-major, samples x dim
  std::vector<double> cumulative_;  // arc length at each sample
};

// Chen product of the (possibly partial) segment signatures on [s,t].
TruncatedTensor signature(const PiecewiseLinearPath& path, double s, double t, std::size_t depth);

// Euclidean arc length of the path restricted to [s,t].
double one_variation(const PiecewiseLinearPath& path, double s, double t);

// A superadditive omega(s,t) >= 0 on 0 <= s <= t <= 1.
class Control {
 public:
  Control(std::function<double(double, double)> evaluator, std::string description);

  double operator()(double s, double t) const { return evaluator_(s, t); }
  const std::string& description() const noexcept { return description_; }

 private:
  std::function<double(double, double)> evaluator_;
  std::string description_;
};

// scale * (sum of the arc lengths of all paths on [s,t]). A sum of arc
// lengths is additive, hence a control for every path in the set.
Control arc_length_control(std::vector<std::shared_ptr<const PiecewiseLinearPath>> paths,
                           double scale);

struct CalibratedControl {
  Control control;
  double scale;
};

// Smallest scale lambda (bisection over the sampled pairs, then x1.01) with
//   ||X^n_{s,t}|| <= omega(s,t)^{n/p} / (beta (n/p)!),   n = 1..depth,
// for the signature X of every path, omega = lambda * joint arc length.
// For p == 1 the closed form lambda = beta is admissible and caps the result.
CalibratedControl calibrated_control(
    const std::vector<std::shared_ptr<const PiecewiseLinearPath>>& paths, double p, double beta,
    std::size_t depth, std::size_t sample_pairs, std::uint64_t seed = 7);

CalibratedControl calibrated_control(const PiecewiseLinearPath& path, double p, double beta,
                                     std::size_t depth, std::size_t sample_pairs,
                                     std::uint64_t seed = 7);

// A multiplicative functional (s,t) -> T^depth(R^d) with its p-variation data.
struct ControlledFunctional {
  std::function<TruncatedTensor(double s, double t, std::size_t depth)> evaluate;
  std::size_t dim;
  std::size_t depth;  // number of levels the functional carries
  double p;
  double beta;
  Control control;
};

// Signature of a path truncated at depth, viewed as a controlled functional.
ControlledFunctional path_functional(std::shared_ptr<const PiecewiseLinearPath> path,
                                     std::size_t depth, double p, double beta, Control control);

// Worst violation of Chen's identity (max coefficient error) over triples.
double chen_defect(const ControlledFunctional& x, std::span<const std::array<double, 3>> triples);

// Smallest slack omega^{n/p}/(beta (n/p)!) - ||X^n|| over pairs and levels
// 1..levels; non-negative iff the p-variation bound holds on the samples.
double pvariation_slack(const ControlledFunctional& x, std::span<const std::pair<double, double>> pairs,
                        std::size_t levels);

}  // namespace roughpath

#endif  // ROUGHPATH_PATH_HPP
