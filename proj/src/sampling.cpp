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
#include "roughpath/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace roughpath {

std::vector<TimePair> simplex_pairs(std::size_t count, std::uint64_t seed, double min_gap) {
  // Plastic-number increments of the 2-d R2 sequence.
  constexpr double g = 1.32471795724474602596;
  constexpr double a1 = 1.0 / g;
  constexpr double a2 = 1.0 / (g * g);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double shift1 = unit(rng);
  const double shift2 = unit(rng);

  std::vector<TimePair> pairs;
  pairs.reserve(count);
  for (std::size_t i = 1; pairs.size() < count; ++i) {
    double x = std::fmod(shift1 + a1 * static_cast<double>(i), 1.0);
    double y = std::fmod(shift2 + a2 * static_cast<double>(i), 1.0);
    if (x > y) std::swap(x, y);
    if (y - x < min_gap) continue;
    pairs.emplace_back(x, y);
  }
  return pairs;
}

std::vector<std::array<double, 3>> ordered_triples(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::array<double, 3>> out;
  out.reserve(count);
  while (out.size() < count) {
    std::array<double, 3> t{unit(rng), unit(rng), unit(rng)};
    std::sort(t.begin(), t.end());
    if (t[0] < t[1] && t[1] < t[2]) out.push_back(t);
  }
  return out;
}

}  // namespace roughpath
