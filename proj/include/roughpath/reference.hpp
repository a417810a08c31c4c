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
// Slow, independent reference computations. They share no code with the
// tensor kernels or the threshold formulas they are used to check.

#ifndef ROUGHPATH_REFERENCE_HPP
#define ROUGHPATH_REFERENCE_HPP

#include <cstddef>
#include <vector>

#include "roughpath/path.hpp"

namespace roughpath::reference {

// Levels 0..depth of the left-point iterated Riemann sum of the path on a
// uniform grid of `steps` intervals over [s,t]; level k flattened row-major.
std::vector<std::vector<double>> riemann_signature(const PiecewiseLinearPath& path, double s,
                                                   double t, std::size_t depth, std::size_t steps);

// The beta thresholds, evaluated in long double through expm1 instead of pow.
long double beta_threshold(long double p, long double delta);

}  // namespace roughpath::reference

#endif  // ROUGHPATH_REFERENCE_HPP
