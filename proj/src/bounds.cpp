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
#include "roughpath/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "roughpath/error.hpp"

namespace roughpath {

double frac_factorial(double x) {
  if (!(x >= 0.0)) throw InvalidInput("frac_factorial requires x >= 0");
  if (x == std::floor(x) && x <= 170.0) {
    double f = 1.0;
    for (int i = 2; i <= static_cast<int>(x); ++i) f *= i;
    return f;
  }
  static constexpr std::array<double, 9> c = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  constexpr double g = 7.0;
  // Gamma(z + 1) with z = x.
  double a = c[0];
  for (std::size_t i = 1; i < c.size(); ++i) a += c[i] / (x + static_cast<double>(i));
  const double t = x + g + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

InequalitySides neoclassical_sides(double p, double x, double y, int n) {
  if (!(p >= 1.0) || x < 0.0 || y < 0.0 || n < 0)
    throw InvalidInput("neoclassical_sides requires p >= 1, x, y >= 0, n >= 0");
  double lhs = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double a = k / p;
    const double b = (n - k) / p;
    lhs += std::pow(x, a) / frac_factorial(a) * std::pow(y, b) / frac_factorial(b);
  }
  const double r = n / p;
  return {lhs / p, std::pow(x + y, r) / frac_factorial(r)};
}

double fractional_part(double p) { return p - std::floor(p); }

EstimateCase classify(double p, double delta) {
  if (!(p >= 1.0)) throw InvalidInput("p must be at least 1");
  const double critical = 1.0 - fractional_part(p);
  if (delta > critical + kCaseTolerance && fractional_part(p) == 0.0)
    throw InvalidCase("delta > 1 - {p} is only possible for non-integer p");
  if (!(delta >= 0.0 && delta <= 1.0)) throw InvalidInput("delta must lie in [0,1]");
  if (std::abs(delta - critical) <= kCaseTolerance) return EstimateCase::critical;
  return delta < critical ? EstimateCase::below_critical : EstimateCase::above_critical;
}

std::string case_name(EstimateCase c) {
  switch (c) {
    case EstimateCase::below_critical: return "case1";
    case EstimateCase::critical: return "case2";
    case EstimateCase::above_critical: return "case3";
  }
  return "unknown";
}

double beta_threshold(double p, double delta) {
  const double fp = fractional_part(p);
  switch (classify(p, delta)) {
    case EstimateCase::below_critical:
      return p / (1.0 - std::pow(0.5, (1.0 - fp - delta) / p));
    case EstimateCase::critical: {
      const double e = (1.0 - fp) / p;
      return 4.0 * p * std::pow(2.0, e) / (1.0 - std::pow(0.5, e));
    }
    case EstimateCase::above_critical: {
      const double first = std::pow(2.0, (2.0 * p + delta) / p) /
                           (1.0 - std::pow(0.5, (delta - 1.0 + fp) / p));
      const double second = 1.0 / (1.0 - std::pow(0.5, (1.0 - fp) / p));
      return 2.0 * p * (first + second);
    }
  }
  throw InvalidCase("unreachable estimate case");
}

double theorem_rhs(const EstimateParams& params, double omega_st, int k) {
  const double p = params.p;
  const double fp = fractional_part(p);
  const double eps = params.epsilon;
  if (eps == 0.0) return 0.0;  // every case vanishes as epsilon -> 0
  const double denom = params.beta * frac_factorial(k / p);
  const auto c = classify(p, params.delta);
  if (k <= static_cast<int>(std::floor(p)) || c == EstimateCase::below_critical)
    return eps * std::pow(omega_st, (k - params.delta) / p) / denom;
  if (c == EstimateCase::critical) {
    const double log_term =
        1.0 + p / (1.0 - fp) + std::log2(params.omega_total / std::pow(eps, (1.0 - fp) / p));
    return eps * log_term * std::pow(omega_st, (k - 1.0 + fp) / p) / denom;
  }
  return std::pow(eps, (1.0 - fp) / params.delta) * std::pow(omega_st, (k - 1.0 + params.delta) / p) /
         denom;
}

IncrementBoundTerms main_lemma_terms(const EstimateParams& params, double omega_st, int n, int K) {
  const double p = params.p;
  const double delta = params.delta;
  if (n < static_cast<int>(std::floor(p))) throw InvalidInput("main lemma requires n >= floor(p)");
  if (K < 0) throw InvalidInput("partition order must be non-negative");
  const double m = n + 1.0;
  const double denom = params.beta * params.beta * frac_factorial(m / p);
  const double mesh = std::pow(0.5, K);
  IncrementBoundTerms terms{};
  terms.epsilon_term = params.epsilon * p / denom * std::pow(2.0, (2.0 * p + delta) / p) *
                       std::pow(mesh, (m - p - delta) / p) * std::pow(omega_st, (m - delta) / p);
  terms.partition_term = std::pow(mesh, m / p - 1.0) * 2.0 * p * std::pow(omega_st, m / p) / denom;
  return terms;
}

double main_lemma_increment_bound(const EstimateParams& params, double omega_st, int n, int K) {
  return main_lemma_terms(params, omega_st, n, K).bound();
}

std::optional<int> dyadic_cutoff_N(const EstimateParams& params, double omega_st) {
  const double p = params.p;
  const double delta = params.delta;
  if (!(delta > 0.0)) throw InvalidInput("dyadic_cutoff_N requires delta > 0");
  const double half_eps = 0.5 * params.epsilon;
  if (!(omega_st > 0.0) || params.epsilon >= 2.0 * std::pow(omega_st, delta / p)) return std::nullopt;
  auto level = [&](int n) { return std::pow(std::ldexp(omega_st, -n), delta / p); };
  int n = static_cast<int>(std::ceil(std::log2(omega_st) - (p / delta) * std::log2(half_eps)));
  n = std::max(n, 1);
  while (level(n) > half_eps) ++n;
  while (n > 1 && level(n - 1) <= half_eps) --n;
  return n;
}

std::optional<SplitBounds> case_split_bounds(const EstimateParams& params, double omega_st) {
  const auto c = classify(params.p, params.delta);
  if (c == EstimateCase::below_critical) return std::nullopt;
  const auto cutoff = dyadic_cutoff_N(params, omega_st);
  if (!cutoff) return std::nullopt;
  const double p = params.p;
  const double fp = fractional_part(p);
  const double eps = params.epsilon;
  const double n1 = std::floor(p) + 1.0;
  const double denom = params.beta * params.beta * frac_factorial(n1 / p);
  const double tail = 1.0 - std::pow(0.5, (1.0 - fp) / p);
  SplitBounds b;
  b.cutoff = *cutoff;
  if (c == EstimateCase::critical) {
    const double log_term =
        1.0 + p / (1.0 - fp) + std::log2(omega_st / std::pow(eps, (1.0 - fp) / p));
    b.comparison = p * std::pow(2.0, (2.0 * p + 1.0 - fp) / p) * eps * log_term * omega_st / denom;
    b.natural = 2.0 * p * eps / tail * omega_st / denom;
  } else {
    // The printed factor "2^{(3p+delta)/p} / 1 - (1/2)^{(delta-1+{p})/p}" is
    // read as 2^{(3p+delta)/p} / (1 - (1/2)^{(delta-1+{p})/p}), the closed
    // form of the geometric sum it comes from.
    const double eps_power = std::pow(eps, (1.0 - fp) / params.delta);
    const double factor = std::pow(2.0, (3.0 * p + params.delta) / p) /
                          (1.0 - std::pow(0.5, (params.delta - 1.0 + fp) / p));
    b.comparison = p / denom * factor * eps_power * omega_st;
    b.natural = 2.0 * p * eps_power / tail * omega_st / denom;
  }
  return b;
}

double measure_epsilon(const ControlledFunctional& x, const ControlledFunctional& y, double delta,
                       std::span<const TimePair> pairs) {
  if (x.p != y.p || x.beta != y.beta) throw InvalidInput("measure_epsilon needs a common p and beta");
  const double p = x.p;
  const auto levels = static_cast<std::size_t>(std::floor(p));
  double worst = 0.0;
  for (const auto& [s, t] : pairs) {
    const double omega = x.control(s, t);
    const auto diff = x.evaluate(s, t, levels) - y.evaluate(s, t, levels);
    const auto norms = level_norms(diff);
    for (std::size_t k = 1; k <= levels; ++k) {
      if (norms[k] == 0.0) continue;
      const double scale = std::pow(omega, (k - delta) / p);
      if (!(scale > 0.0)) return std::numeric_limits<double>::infinity();
      worst = std::max(worst, norms[k] * x.beta * frac_factorial(k / p) / scale);
    }
  }
  return worst * 1.01;
}

bool EstimateReport::rows_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const EstimateRow& r) { return r.pass(); });
}

bool EstimateReport::passed() const {
  return rows_pass() && (beta_ok || params.allow_small_beta) &&
         (epsilon_ok || params.allow_epsilon_at_least_one);
}

std::vector<double> EstimateReport::worst_slack() const {
  std::vector<double> out;
  for (const auto& r : rows) {
    if (static_cast<std::size_t>(r.level) >= out.size())
      out.resize(r.level + 1, std::numeric_limits<double>::infinity());
    out[r.level] = std::min(out[r.level], r.slack());
  }
  return out;
}

EstimateReport verify_uniform_estimate(const ControlledFunctional& x, const ControlledFunctional& y,
                                       const EstimateParams& params, std::size_t levels,
                                       std::size_t sample_pairs, std::uint64_t seed,
                                       const ExtensionConfig& extension) {
  if (x.p != params.p || y.p != params.p) throw InvalidInput("functionals and params disagree on p");
  if (x.dim != y.dim) throw InvalidInput("functionals live over different dimensions");

  EstimateReport report;
  report.params = params;
  report.estimate_case = classify(params.p, params.delta);
  report.beta_threshold = beta_threshold(params.p, params.delta);
  report.beta_ok = params.beta > report.beta_threshold;
  report.epsilon_ok = params.epsilon < 1.0;
  if (!report.beta_ok) {
    std::ostringstream os;
    os << "beta " << params.beta << " does not exceed the threshold " << report.beta_threshold;
    report.notes.push_back(os.str());
  }
  if (!report.epsilon_ok) report.notes.push_back("epsilon is not below 1");
  if (params.p == 1.0)
    report.notes.push_back("p = 1: critical-case formulas applied with {p} = 0 (extension of the p > 1 statement)");
  if (report.estimate_case == EstimateCase::above_critical)
    report.notes.push_back("above-critical comparison factor read as 2^{(3p+delta)/p} / (1 - (1/2)^{(delta-1+{p})/p})");

  ExtensionConfig cfg = extension;
  cfg.target_depth = levels;
  auto pairs = simplex_pairs(sample_pairs, seed);
  std::sort(pairs.begin(), pairs.end());
  std::vector<EstimateRow> rows;
  rows.reserve(pairs.size() * levels);
  for (const auto& [s, t] : pairs) {
    DyadicRefinement refinement(x.control, s, t, cfg.balance);
    const auto xs = lyons_extend(x, s, t, cfg, &refinement);
    const auto ys = lyons_extend(y, s, t, cfg, &refinement);
    const auto norms = level_norms(xs - ys);
    const double omega = x.control(s, t);
    for (std::size_t k = 1; k <= levels; ++k)
      rows.push_back({static_cast<int>(k), s, t, omega, norms[k], theorem_rhs(params, omega, static_cast<int>(k))});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const EstimateRow& a, const EstimateRow& b) {
    if (a.level != b.level) return a.level < b.level;
    if (a.s != b.s) return a.s < b.s;
    return a.t < b.t;
  });
  report.rows = std::move(rows);
  return report;
}

}  // namespace roughpath
