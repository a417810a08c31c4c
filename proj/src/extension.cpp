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
#include "roughpath/extension.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "roughpath/error.hpp"

namespace roughpath {

namespace {

void require_depth_in(const ControlledFunctional& x, std::size_t depth_in) {
  if (depth_in > x.depth)
    throw InvalidInput("depth_in " + std::to_string(depth_in) + " exceeds the functional's depth " +
                       std::to_string(x.depth));
  if (static_cast<double>(depth_in) < std::floor(x.p))
    throw InvalidInput("depth_in must be at least floor(p)");
}

// out += a (x) b for two flat level slices.
void add_outer(std::span<double> out, std::span<const double> a, std::span<const double> b) {
  const std::size_t stride = b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double x = a[i];
    if (x == 0.0) continue;
    double* dst = out.data() + i * stride;
    for (std::size_t j = 0; j < stride; ++j) dst[j] += x * b[j];
  }
}

}  // namespace

TruncatedTensor hat_partition_product(const ControlledFunctional& x, std::span<const double> points,
                                      std::size_t depth_in) {
  require_depth_in(x, depth_in);
  if (points.size() < 2) throw InvalidInput("a partition needs at least two points");
  TruncatedTensor product = TruncatedTensor::identity(x.dim, depth_in + 1);
  for (std::size_t j = 0; j + 1 < points.size(); ++j) {
    if (!(points[j] < points[j + 1])) throw InvalidInput("partition points must increase");
    product = truncated_product(product, x.evaluate(points[j], points[j + 1], depth_in).truncated(depth_in + 1));
  }
  return product;
}

TruncatedTensor hat_partition_product(const ControlledFunctional& x,
                                      const DyadicPartition& partition, std::size_t depth_in) {
  return hat_partition_product(x, std::span<const double>(partition.points), depth_in);
}

std::vector<double> drop_point_defect(const ControlledFunctional& x, double u_prev, double u,
                                      double u_next, std::size_t depth_in) {
  require_depth_in(x, depth_in);
  if (!(u_prev <= u && u <= u_next)) throw InvalidInput("drop_point_defect requires u_prev <= u <= u_next");
  const auto left = x.evaluate(u_prev, u, depth_in);
  const auto right = x.evaluate(u, u_next, depth_in);
  std::vector<double> defect(level_size(x.dim, depth_in + 1), 0.0);
  for (std::size_t k = 1; k <= depth_in; ++k) add_outer(defect, left.level(k), right.level(depth_in + 1 - k));
  return defect;
}

double extension_beta_threshold(double p) {
  const double exponent = (std::floor(p) + 1.0) / p - 1.0;
  return p / (1.0 - std::pow(0.5, exponent));
}

namespace {

// One pass over the dyadic tree of P_M. A node at depth K covers one
// interval of P_K; levels <= n0 are the functional's own values and level
// m > n0 is assembled through Chen's identity from the two children, down
// to depth M - (m - n0). There the node's level m is its first drop-point
// defect, extended by the geometric tail 1/(1 - rho_m) when extrapolating.
class TreePass {
 public:
  TreePass(std::size_t dim, std::size_t n0, std::size_t top, std::size_t order,
           const std::vector<std::vector<double>>& data, const std::vector<double>& tail_factor)
      : dim_(dim), n0_(n0), top_(top), order_(order),
        stride_(TruncatedTensor(dim, n0).coefficients().size()), data_(data), tail_factor_(tail_factor) {
    increments_.resize(top + 1);
    for (std::size_t m = n0 + 1; m <= top; ++m)
      increments_[m].assign(order + 1, std::vector<double>(level_size(dim, m), 0.0));
  }

  TruncatedTensor node(std::size_t depth, std::size_t index) {
    TruncatedTensor v(dim_, top_);
    const double* src = data_[depth].data() + index * stride_;
    std::copy(src, src + stride_, v.coefficients().begin());
    if (depth == order_) return v;

    const TruncatedTensor left = node(depth + 1, 2 * index);
    const TruncatedTensor right = node(depth + 1, 2 * index + 1);
    const std::size_t bottom_level = n0_ + (order_ - depth);
    const std::size_t cap = std::min(top_, bottom_level);
    for (std::size_t m = n0_ + 1; m <= cap; ++m) {
      auto out = v.level(m);
      auto& defect = increments_[m][depth];
      std::vector<double> cross(out.size(), 0.0);
      for (std::size_t k = 1; k < m; ++k) add_outer(cross, left.level(k), right.level(m - k));
      for (std::size_t i = 0; i < out.size(); ++i) defect[i] += cross[i];
      if (m == bottom_level) {
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = tail_factor_[m] * cross[i];
      } else {
        auto l = left.level(m);
        auto r = right.level(m);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = l[i] + r[i] + cross[i];
      }
    }
    return v;
  }

  std::vector<LevelTrace> traces() const {
    std::vector<LevelTrace> out;
    for (std::size_t m = n0_ + 1; m <= top_; ++m) {
      LevelTrace trace{m, {}};
      const std::size_t last = order_ - (m - n0_);
      for (std::size_t k = 0; k <= last; ++k) {
        double sq = 0.0;
        for (double c : increments_[m][k]) sq += c * c;
        trace.increments.push_back(std::sqrt(sq));
      }
      out.push_back(std::move(trace));
    }
    return out;
  }

 private:
  std::size_t dim_;
  std::size_t n0_;
  std::size_t top_;
  std::size_t order_;
  std::size_t stride_;  // coefficients in T^{n0}
  const std::vector<std::vector<double>>& data_;
  const std::vector<double>& tail_factor_;
  std::vector<std::vector<std::vector<double>>> increments_;  // [level][depth]
};

}  // namespace

ExtensionResult lyons_extend_traced(const ControlledFunctional& x, double s, double t,
                                    const ExtensionConfig& config, DyadicRefinement* shared) {
  if (s > t) throw InvalidInput("lyons_extend requires s <= t");
  if (!(config.convergence_tol > 0.0)) throw InvalidInput("convergence_tol must be positive");
  if (config.max_order < 1) throw InvalidInput("max_order must be at least 1");
  const std::size_t n0 = x.depth;
  const std::size_t top = config.target_depth;
  if (static_cast<double>(n0) < std::floor(x.p))
    throw InvalidInput("the functional must carry at least floor(p) levels");

  ExtensionResult result{TruncatedTensor::identity(x.dim, top), {}};
  if (x.beta < extension_beta_threshold(x.p)) {
    std::ostringstream os;
    os << "beta " << x.beta << " is below the extension threshold " << extension_beta_threshold(x.p);
    result.trace.warnings.push_back(os.str());
  }
  if (top <= n0 || s == t) {
    result.value = x.evaluate(s, t, std::min(top, n0)).truncated(top);
    return result;
  }

  std::unique_ptr<DyadicRefinement> own;
  if (shared == nullptr) {
    own = std::make_unique<DyadicRefinement>(x.control, s, t, config.balance);
    shared = own.get();
  } else if (shared->start() != s || shared->end() != t) {
    throw InvalidInput("shared refinement covers a different interval");
  }

  const double q = config.tail_exponent > 0.0 ? config.tail_exponent : x.p;
  std::vector<double> tail_factor(top + 1, 1.0);
  for (std::size_t m = n0 + 1; m <= top; ++m) {
    const double rho = std::pow(0.5, static_cast<double>(m) / q - 1.0);
    if (config.extrapolate && rho < 1.0) tail_factor[m] = 1.0 / (1.0 - rho);
  }

  std::vector<std::vector<double>> data;  // [depth] -> flat T^{n0} values per node
  const std::size_t stride = TruncatedTensor(x.dim, n0).coefficients().size();
  auto ensure_data = [&](std::size_t order) {
    while (data.size() <= order) {
      const auto& points = shared->at(data.size()).points;
      std::vector<double> flat;
      flat.reserve(stride * (points.size() - 1));
      for (std::size_t j = 0; j + 1 < points.size(); ++j) {
        const auto value = x.evaluate(points[j], points[j + 1], n0);
        flat.insert(flat.end(), value.coefficients().begin(), value.coefficients().end());
      }
      data.push_back(std::move(flat));
    }
  };

  const std::size_t first_order = std::max<std::size_t>(2, top - n0);
  TruncatedTensor previous;
  int streak = 0;
  double change = std::numeric_limits<double>::infinity();
  for (std::size_t order = first_order; order <= config.max_order; ++order) {
    ensure_data(order);
    TreePass pass(x.dim, n0, top, order, data, tail_factor);
    TruncatedTensor root = pass.node(0, 0);
    if (order > first_order) {
      change = 0.0;
      for (std::size_t m = n0 + 1; m <= top; ++m) {
        double sq = 0.0;
        auto a = root.level(m);
        auto b = previous.level(m);
        for (std::size_t i = 0; i < a.size(); ++i) sq += (a[i] - b[i]) * (a[i] - b[i]);
        change = std::max(change, std::sqrt(sq));
      }
      streak = change < config.convergence_tol ? streak + 1 : 0;
    }
    previous = std::move(root);
    if (streak >= 2) {
      result.value = std::move(previous);
      result.trace.final_order = order;
      result.trace.last_change = change;
      result.trace.levels = pass.traces();
      return result;
    }
  }
  std::ostringstream os;
  os.precision(3);
  os << "extension did not converge by order " << config.max_order << " (last change " << change
     << ", tolerance " << config.convergence_tol << ")";
  throw ConvergenceError(os.str(), change);
}

TruncatedTensor lyons_extend(const ControlledFunctional& x, double s, double t,
                             const ExtensionConfig& config, DyadicRefinement* shared) {
  return lyons_extend_traced(x, s, t, config, shared).value;
}

ControlledFunctional extended_functional(const ControlledFunctional& x, const ExtensionConfig& config) {
  ControlledFunctional lifted = x;
  lifted.depth = std::max(x.depth, config.target_depth);
  lifted.evaluate = [x, config](double s, double t, std::size_t depth) {
    if (depth <= x.depth) return x.evaluate(s, t, depth);
    ExtensionConfig c = config;
    c.target_depth = depth;
    return lyons_extend(x, s, t, c);
  };
  return lifted;
}

}  // namespace roughpath
