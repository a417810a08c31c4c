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
#include "roughpath/path.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "roughpath/bounds.hpp"
#include "roughpath/error.hpp"
#include "roughpath/sampling.hpp"

namespace roughpath {

PiecewiseLinearPath::PiecewiseLinearPath(std::vector<double> times,
                                         const std::vector<std::vector<double>>& points)
    : times_(std::move(times)) {
  if (times_.size() < 2) throw InvalidInput("a path needs at least 2 samples");
  if (points.size() != times_.size())
    throw InvalidInput("path has " + std::to_string(times_.size()) + " times but " +
                       std::to_string(points.size()) + " points");
  if (times_.front() != 0.0 || times_.back() != 1.0)
    throw InvalidInput("path times must start at 0 and end at 1");
  for (std::size_t i = 1; i < times_.size(); ++i)
    if (!(times_[i] > times_[i - 1]))
      throw InvalidInput("path times must be strictly increasing (index " + std::to_string(i) + ")");
  dim_ = points.front().size();
  if (dim_ == 0) throw InvalidInput("path points must have positive dimension");
  points_.reserve(dim_ * points.size());
  for (const auto& p : points) {
    if (p.size() != dim_) throw InvalidInput("path points have inconsistent dimensions");
    for (double x : p)
      if (!std::isfinite(x)) throw InvalidInput("path points must be finite");
    points_.insert(points_.end(), p.begin(), p.end());
  }
  cumulative_.assign(times_.size(), 0.0);
  for (std::size_t i = 1; i < times_.size(); ++i) {
    double sq = 0.0;
    for (std::size_t k = 0; k < dim_; ++k) {
      const double dx = points_[i * dim_ + k] - points_[(i - 1) * dim_ + k];
      sq += dx * dx;
    }
    cumulative_[i] = cumulative_[i - 1] + std::sqrt(sq);
  }
}

std::span<const double> PiecewiseLinearPath::point(std::size_t i) const {
  if (i >= times_.size()) throw InvalidInput("sample index out of range");
  return {points_.data() + i * dim_, dim_};
}

std::size_t PiecewiseLinearPath::segment_of(double t) const {
  if (!(t >= 0.0 && t <= 1.0)) throw InvalidInput("time outside [0,1]");
  auto it = std::upper_bound(times_.begin(), times_.end(), t);
  std::size_t i = static_cast<std::size_t>(it - times_.begin());
  return std::min(i == 0 ? 0 : i - 1, times_.size() - 2);
}

std::vector<double> PiecewiseLinearPath::value_at(double t) const {
  const std::size_t i = segment_of(t);
  const double w = (t - times_[i]) / (times_[i + 1] - times_[i]);
  std::vector<double> v(dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    const double a = points_[i * dim_ + k];
    const double b = points_[(i + 1) * dim_ + k];
    v[k] = a + w * (b - a);
  }
  return v;
}

double PiecewiseLinearPath::cumulative_length(double t) const {
  const std::size_t i = segment_of(t);
  const double w = (t - times_[i]) / (times_[i + 1] - times_[i]);
  return cumulative_[i] + w * (cumulative_[i + 1] - cumulative_[i]);
}

bool PiecewiseLinearPath::has_pause() const noexcept {
  for (std::size_t i = 1; i < cumulative_.size(); ++i)
    if (cumulative_[i] == cumulative_[i - 1]) return true;
  return false;
}

TruncatedTensor signature(const PiecewiseLinearPath& path, double s, double t, std::size_t depth) {
  if (s > t) throw InvalidInput("signature requires s <= t");
  if (s < 0.0 || t > 1.0) throw InvalidInput("signature interval outside [0,1]");
  TruncatedTensor sig = TruncatedTensor::identity(path.dim(), depth);
  if (s == t) return sig;

  auto times = path.times();
  auto first = std::upper_bound(times.begin(), times.end(), s);
  auto last = std::lower_bound(times.begin(), times.end(), t);
  std::vector<double> current = path.value_at(s);
  std::vector<double> increment(path.dim());
  for (auto it = first; it < last; ++it) {
    auto knot = path.point(static_cast<std::size_t>(it - times.begin()));
    for (std::size_t k = 0; k < path.dim(); ++k) {
      increment[k] = knot[k] - current[k];
      current[k] = knot[k];
    }
    multiply_by_segment(sig, increment);
  }
  const std::vector<double> end = path.value_at(t);
  for (std::size_t k = 0; k < path.dim(); ++k) increment[k] = end[k] - current[k];
  multiply_by_segment(sig, increment);
  return sig;
}

double one_variation(const PiecewiseLinearPath& path, double s, double t) {
  if (s > t) throw InvalidInput("one_variation requires s <= t");
  if (s == t) return 0.0;
  return path.cumulative_length(t) - path.cumulative_length(s);
}

Control::Control(std::function<double(double, double)> evaluator, std::string description)
    : evaluator_(std::move(evaluator)), description_(std::move(description)) {}

Control arc_length_control(std::vector<std::shared_ptr<const PiecewiseLinearPath>> paths,
                           double scale) {
  if (paths.empty()) throw InvalidInput("arc-length control needs at least one path");
  if (!(scale >= 0.0)) throw InvalidInput("control scale must be non-negative");
  std::ostringstream tag;
  tag.precision(17);
  tag << scale << " x arc length";
  if (paths.size() > 1) tag << " (sum over " << paths.size() << " paths)";
  return Control(
      [paths = std::move(paths), scale](double s, double t) {
        if (s >= t) return 0.0;
        double total = 0.0;
        for (const auto& p : paths) total += one_variation(*p, s, t);
        return scale * total;
      },
      tag.str());
}

CalibratedControl calibrated_control(
    const std::vector<std::shared_ptr<const PiecewiseLinearPath>>& paths, double p, double beta,
    std::size_t depth, std::size_t sample_pairs, std::uint64_t seed) {
  if (!(p >= 1.0)) throw InvalidInput("calibrated_control requires p >= 1");
  if (!(beta > 0.0)) throw InvalidInput("calibrated_control requires beta > 0");
  if (paths.empty()) throw InvalidInput("calibrated_control needs at least one path");

  struct Sample {
    double length;
    std::vector<double> norms;  // level 1..depth, worst over the paths
  };
  std::vector<Sample> samples;
  for (const auto& [s, t] : simplex_pairs(sample_pairs, seed)) {
    Sample sample{0.0, std::vector<double>(depth + 1, 0.0)};
    for (const auto& path : paths) {
      sample.length += one_variation(*path, s, t);
      const auto norms = level_norms(signature(*path, s, t, depth));
      for (std::size_t n = 1; n <= depth; ++n) sample.norms[n] = std::max(sample.norms[n], norms[n]);
    }
    samples.push_back(std::move(sample));
  }

  auto admissible = [&](double scale) {
    for (const auto& sample : samples) {
      const double omega = scale * sample.length;
      for (std::size_t n = 1; n <= depth; ++n) {
        const double r = static_cast<double>(n) / p;
        if (sample.norms[n] > std::pow(omega, r) / (beta * frac_factorial(r))) return false;
      }
    }
    return true;
  };

  double scale = 0.0;
  if (!admissible(0.0)) {
    const double closed_form = beta;  // admissible whenever p == 1
    double lo = 0.0;
    double hi = closed_form;
    while (!admissible(hi)) {
      lo = hi;
      hi *= 2.0;
    }
    for (int it = 0; it < 200 && hi - lo > 1e-14 * hi; ++it) {
      const double mid = 0.5 * (lo + hi);
      (admissible(mid) ? hi : lo) = mid;
    }
    scale = hi * 1.01;
    if (p == 1.0) scale = std::min(scale, closed_form);
  }
  return {arc_length_control(paths, scale), scale};
}

CalibratedControl calibrated_control(const PiecewiseLinearPath& path, double p, double beta,
                                     std::size_t depth, std::size_t sample_pairs,
                                     std::uint64_t seed) {
  return calibrated_control({std::make_shared<const PiecewiseLinearPath>(path)}, p, beta, depth,
                            sample_pairs, seed);
}

ControlledFunctional path_functional(std::shared_ptr<const PiecewiseLinearPath> path,
                                     std::size_t depth, double p, double beta, Control control) {
  const std::size_t dim = path->dim();
  return ControlledFunctional{
      [path = std::move(path), depth](double s, double t, std::size_t d) {
        if (d > depth) throw InvalidInput("functional evaluated beyond the levels it carries");
        return signature(*path, s, t, d);
      },
      dim, depth, p, beta, std::move(control)};
}

double chen_defect(const ControlledFunctional& x, std::span<const std::array<double, 3>> triples) {
  double worst = 0.0;
  for (const auto& [s, u, t] : triples) {
    const auto lhs = truncated_product(x.evaluate(s, u, x.depth), x.evaluate(u, t, x.depth));
    worst = std::max(worst, max_abs_difference(lhs, x.evaluate(s, t, x.depth)));
  }
  return worst;
}

double pvariation_slack(const ControlledFunctional& x,
                        std::span<const std::pair<double, double>> pairs, std::size_t levels) {
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& [s, t] : pairs) {
    const auto norms = level_norms(x.evaluate(s, t, levels));
    const double omega = x.control(s, t);
    for (std::size_t n = 1; n <= levels; ++n) {
      const double r = static_cast<double>(n) / x.p;
      worst = std::min(worst, std::pow(omega, r) / (x.beta * frac_factorial(r)) - norms[n]);
    }
  }
  return worst;
}

}  // namespace roughpath
