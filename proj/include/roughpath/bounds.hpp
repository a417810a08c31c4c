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
// Quantitative side of the uniform estimate: fractional factorials, the
// neo-classical inequality, the dyadic increment bound, the three beta
// thresholds and right-hand sides, and a harness that measures
// ||X^k - Y^k|| against them.

#ifndef ROUGHPATH_BOUNDS_HPP
#define ROUGHPATH_BOUNDS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "roughpath/extension.hpp"
#include "roughpath/path.hpp"
#include "roughpath/sampling.hpp"

namespace roughpath {

// x! := Gamma(x + 1), Lanczos (g = 7, 9 terms); exact products for integers.
double frac_factorial(double x);

struct InequalitySides {
  double lhs;
  double rhs;
};

// (1/p) sum_k x^{k/p}/(k/p)! y^{(n-k)/p}/((n-k)/p)!  versus  (x+y)^{n/p}/(n/p)!
InequalitySides neoclassical_sides(double p, double x, double y, int n);

enum class EstimateCase {
  below_critical = 1,  // delta < 1 - {p}: the rate epsilon survives at every level
  critical = 2,        // delta = 1 - {p}: logarithmic correction
  above_critical = 3,  // delta > 1 - {p} (non-integer p only): reduced power of epsilon
};

// Two deltas closer than this are treated as equal when classifying.
inline constexpr double kCaseTolerance = 1e-12;

EstimateCase classify(double p, double delta);
double fractional_part(double p);
std::string case_name(EstimateCase c);

struct EstimateParams {
  double p = 1.0;
  double delta = 1.0;
  double epsilon = 0.0;
  double beta = 1.0;
  double omega_total = 0.0;  // omega(0,1)
  bool allow_epsilon_at_least_one = false;
  bool allow_small_beta = false;

  EstimateCase estimate_case() const { return classify(p, delta); }
};

// Strict lower bound on beta for the (p, delta) case.
double beta_threshold(double p, double delta);

// Right-hand side for level k at omega(s,t) = omega_st. Levels k <= floor(p)
// get the hypothesis bound eps omega^{(k-delta)/p} / (beta (k/p)!).
double theorem_rhs(const EstimateParams& params, double omega_st, int k);

struct IncrementBoundTerms {
  double epsilon_term;
  double partition_term;
  double bound() const { return epsilon_term < partition_term ? epsilon_term : partition_term; }
};

// Bound on ||(X^{P_{K+1}} - Y^{P_{K+1}})^{n+1}|| - ||(X^{P_K} - Y^{P_K})^{n+1}||.
IncrementBoundTerms main_lemma_terms(const EstimateParams& params, double omega_st, int n, int K);
double main_lemma_increment_bound(const EstimateParams& params, double omega_st, int n, int K);

// Unique N with (omega/2^N)^{delta/p} <= eps/2 < (omega/2^{N-1})^{delta/p}.
// std::nullopt when eps >= 2 omega^{delta/p}: the estimate then follows from
// the control bound alone.
std::optional<int> dyadic_cutoff_N(const EstimateParams& params, double omega_st);

// Level floor(p)+1 split at the cutoff N for the critical and
// above-critical cases: `comparison` bounds the partial sum up to P_N,
// `natural` the tail beyond it.
struct SplitBounds {
  int cutoff = 0;
  double comparison = 0.0;
  double natural = 0.0;
};
std::optional<SplitBounds> case_split_bounds(const EstimateParams& params, double omega_st);

// Smallest epsilon satisfying the hypothesis on levels 1..floor(p) over the
// pairs (supremum of measured ratios), inflated by 1.01.
double measure_epsilon(const ControlledFunctional& x, const ControlledFunctional& y, double delta,
                       std::span<const TimePair> pairs);

struct EstimateRow {
  int level;
  double s;
  double t;
  double omega;
  double lhs;
  double rhs;
  double slack() const { return rhs - lhs; }
  bool pass() const { return lhs <= rhs; }
};

struct EstimateReport {
  EstimateParams params;
  EstimateCase estimate_case = EstimateCase::critical;
  double beta_threshold = 0.0;
  bool beta_ok = false;
  bool epsilon_ok = false;
  std::vector<EstimateRow> rows;  // sorted by level, then s, then t
  std::vector<std::string> notes;

  bool rows_pass() const;
  bool passed() const;
  // Smallest slack per level, index = level.
  std::vector<double> worst_slack() const;
};

EstimateReport verify_uniform_estimate(const ControlledFunctional& x, const ControlledFunctional& y,
                                       const EstimateParams& params, std::size_t levels,
                                       std::size_t sample_pairs, std::uint64_t seed,
                                       const ExtensionConfig& extension = {});

}  // namespace roughpath

#endif  // ROUGHPATH_BOUNDS_HPP
