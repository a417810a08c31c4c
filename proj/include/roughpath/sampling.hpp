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
#ifndef ROUGHPATH_SAMPLING_HPP
#define ROUGHPATH_SAMPLING_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace roughpath {

using TimePair = std::pair<double, double>;

// Deterministic low-discrepancy pairs s < t in [0,1]: the R2 sequence
// with a seed-dependent Cranley-Patterson shift, folded onto the simplex.
// Pairs with t - s below min_gap are skipped.
std::vector<TimePair> simplex_pairs(std::size_t count, std::uint64_t seed, double min_gap = 1e-6);

// Sorted triples s < u < t drawn from a seeded generator.
std::vector<std::array<double, 3>> ordered_triples(std::size_t count, std::uint64_t seed);

}  // namespace roughpath

#endif  // ROUGHPATH_SAMPLING_HPP
