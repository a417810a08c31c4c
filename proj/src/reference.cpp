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
#include "roughpath/reference.hpp"

#include <cmath>
#include <stdexcept>

namespace roughpath::reference {

std::vector<std::vector<double>> riemann_signature(const PiecewiseLinearPath& path, double s,
                                                   double t, std::size_t depth, std::size_t steps) {
  const std::size_t d = path.dim();
  std::vector<std::vector<double>> sums(depth + 1);
  std::size_t size = 1;
  for (std::size_t k = 0; k <= depth; ++k, size *= d) sums[k].assign(size, 0.0);
  sums[0][0] = 1.0;

  std::vector<double> prev = path.value_at(s);
  std::vector<double> delta(d);
  for (std::size_t j = 1; j <= steps; ++j) {
    const double u = s + (t - s) * static_cast<double>(j) / static_cast<double>(steps);
    const std::vector<double> cur = path.value_at(j == steps ? t : u);
    for (std::size_t i = 0; i < d; ++i) delta[i] = cur[i] - prev[i];
    prev = cur;
    // Highest level first so every update reads sums from before this step.
    for (std::size_t k = depth; k >= 1; --k) {
      const auto& lower = sums[k - 1];
      auto& level = sums[k];
      for (std::size_t w = 0; w < lower.size(); ++w)
        for (std::size_t i = 0; i < d; ++i) level[w * d + i] += lower[w] * delta[i];
    }
  }
  return sums;
}

long double beta_threshold(long double p, long double delta) {
  const long double ln2 = std::log(2.0L);
  const long double fp = p - std::floor(p);
  const long double critical = 1.0L - fp;
  // 1 - 2^{-x} = -expm1(-x ln 2)
  auto one_minus_half_pow = [&](long double x) { return -std::expm1(-x * ln2); };
  if (std::fabs(delta - critical) <= 1e-12L) {
    const long double e = critical / p;
    return 4.0L * p * std::exp(e * ln2) / one_minus_half_pow(e);
  }
  if (delta < critical) return p / one_minus_half_pow((critical - delta) / p);
  if (fp == 0.0L) throw std::domain_error("no threshold for integer p above the critical delta");
  const long double a = std::exp((2.0L + delta / p) * ln2) / one_minus_half_pow((delta - critical) / p);
  const long double b = 1.0L / one_minus_half_pow(critical / p);
  return 2.0L * p * a + 2.0L * p * b;
}

}  // namespace roughpath::reference
