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
#include "roughpath/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "roughpath/partition.hpp"
#include "roughpath/reference.hpp"
#include "roughpath/sampling.hpp"
#include "roughpath/tensor.hpp"

namespace roughpath {

namespace {

Check at_most(std::string name, double measured, double limit) {
  return {std::move(name), measured, limit, "<=", 0.0, measured <= limit};
}

Check below(std::string name, double measured, double limit) {
  return {std::move(name), measured, limit, "<", 0.0, measured < limit};
}

Check within(std::string name, double measured, double lo, double hi) {
  return {std::move(name), measured, lo, "in", hi, measured >= lo && measured <= hi};
}

Check holds(std::string name, bool ok) {
  return {std::move(name), ok ? 1.0 : 0.0, 1.0, "==", 0.0, ok};
}

std::mt19937_64 criterion_rng(const SuiteOptions& options, int id) {
  std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                    static_cast<std::uint32_t>(id)};
  return std::mt19937_64(seq);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

double level_distance(std::span<const double> a, std::span<const double> b) {
  double sq = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sq += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(sq);
}

double euclidean(std::span<const double> a) {
  double sq = 0.0;
  for (double v : a) sq += v * v;
  return std::sqrt(sq);
}

// Least-squares ratio of the second half of a geometric-looking sequence.
double tail_ratio(const std::vector<double>& increments) {
  std::vector<std::pair<double, double>> pts;
  for (std::size_t k = increments.size() / 2; k < increments.size(); ++k)
    if (increments[k] > 0.0) pts.emplace_back(static_cast<double>(k), std::log2(increments[k]));
  if (pts.size() < 2) return 0.0;
  double mx = 0.0, my = 0.0;
  for (const auto& [x, y] : pts) {
    mx += x;
    my += y;
  }
  mx /= pts.size();
  my /= pts.size();
  double sxy = 0.0, sxx = 0.0;
  for (const auto& [x, y] : pts) {
    sxy += (x - mx) * (y - my);
    sxx += (x - mx) * (x - mx);
  }
  return std::exp2(sxy / sxx);
}

void add_notes(CriterionOutcome& out, const std::vector<std::string>& notes) {
  for (const auto& n : notes)
    if (std::find(out.notes.begin(), out.notes.end(), n) == out.notes.end()) out.notes.push_back(n);
}

}  // namespace

bool CriterionOutcome::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

PathPtr random_bv_path(std::mt19937_64& rng, std::size_t dim, std::size_t segments, double scale,
                       double drift) {
  std::normal_distribution<double> gauss(0.0, scale);
  std::vector<double> times(segments + 1);
  std::vector<std::vector<double>> points(segments + 1, std::vector<double>(dim, 0.0));
  for (std::size_t i = 0; i <= segments; ++i) {
    times[i] = static_cast<double>(i) / static_cast<double>(segments);
    if (i == 0) continue;
    for (std::size_t k = 0; k < dim; ++k) points[i][k] = points[i - 1][k] + drift + gauss(rng);
  }
  times.back() = 1.0;
  return std::make_shared<const PiecewiseLinearPath>(std::move(times), points);
}

PathPtr sinusoidal_perturbation(const PathPtr& base, double amplitude, std::size_t grid) {
  static constexpr double kFrequencies[] = {3.0, 2.0, 5.0, 4.0, 7.0, 6.0};
  std::vector<double> times(base->times().begin(), base->times().end());
  for (std::size_t j = 0; j <= grid; ++j) times.push_back(static_cast<double>(j) / static_cast<double>(grid));
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  std::vector<std::vector<double>> points;
  points.reserve(times.size());
  for (double t : times) {
    auto v = base->value_at(t);
    for (std::size_t k = 0; k < v.size(); ++k)
      v[k] += amplitude * std::sin(2.0 * std::numbers::pi * kFrequencies[k % 6] * t);
    points.push_back(std::move(v));
  }
  return std::make_shared<const PiecewiseLinearPath>(std::move(times), points);
}

double auto_beta(double p, double delta) { return 1.05 * beta_threshold(p, delta); }

EstimateParams PathPairScenario::params() const {
  EstimateParams params;
  params.p = p;
  params.delta = delta;
  params.epsilon = epsilon;
  params.beta = beta;
  params.omega_total = x->control(0.0, 1.0);
  return params;
}

PathPairScenario make_scenario(const PathPtr& base, const PathPtr& perturbed, double p,
                               double delta, double beta, std::size_t levels,
                               std::size_t sample_pairs, std::uint64_t seed) {
  PathPairScenario sc;
  sc.base = base;
  sc.perturbed = perturbed;
  sc.p = p;
  sc.delta = delta;
  sc.beta = beta > 0.0 ? beta : auto_beta(p, delta);
  const auto n0 = static_cast<std::size_t>(std::floor(p));
  const auto cal = calibrated_control({base, perturbed}, p, sc.beta, std::max(levels, n0), sample_pairs, seed);
  sc.control_scale = cal.scale;
  sc.x = path_functional(base, n0, p, sc.beta, cal.control);
  sc.y = path_functional(perturbed, n0, p, sc.beta, cal.control);
  sc.pairs = simplex_pairs(sample_pairs, seed);
  sc.epsilon = measure_epsilon(*sc.x, *sc.y, delta, sc.pairs);
  return sc;
}

LinearCdeProblem rotation_problem() {
  Eigen::MatrixXd J(2, 2);
  J << 0.0, -1.0, 1.0, 0.0;
  auto driver = std::make_shared<const PiecewiseLinearPath>(
      std::vector<double>{0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0},
      std::vector<std::vector<double>>{{0.0}, {0.8}, {0.3}, {1.0}});
  return LinearCdeProblem({J}, Eigen::Vector2d(1.0, 0.0), driver);
}

std::vector<CdeSweepRow> cde_sweep(const LinearCdeProblem& problem,
                                   const std::vector<double>& amplitudes, double beta,
                                   std::uint64_t seed) {
  std::vector<CdeSweepRow> rows;
  for (double a : amplitudes) {
    CdeSweepRow row;
    row.amplitude = a;
    row.beta = beta;
    const auto perturbed = sinusoidal_perturbation(problem.driver_ptr(), a, 1200);
    const auto other = problem.with_driver(perturbed);
    row.epsilon = sup_distance(problem.driver(), *perturbed);
    const auto cal = calibrated_control({problem.driver_ptr(), perturbed}, 1.0, beta, 6, 64, seed);
    row.C = cal.control(0.0, 1.0);
    const auto cmp = compare_flows(problem, other);
    row.sup_difference = cmp.sup_difference;
    row.max_increment_difference = cmp.max_increment_difference;
    row.bound = problem.x0().norm() * flow_difference_bound(problem, row.epsilon, row.C, beta, row.C);
    row.normalized = row.sup_difference / (row.epsilon * (1.0 + std::log2(row.C / row.epsilon)));
    rows.push_back(row);
  }
  return rows;
}

CriterionOutcome chen_identity(const SuiteOptions& options) {
  CriterionOutcome out{1, "Chen identity", {}, {}};
  auto rng = criterion_rng(options, 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss;
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t d = 1 + static_cast<std::size_t>(i % 3);
    const std::size_t segments = 1 + rng() % 20;
    const std::size_t depth = 1 + rng() % 6;
    std::vector<double> times{0.0, 1.0};
    while (times.size() < segments + 1) times.push_back(unit(rng));
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());
    std::vector<std::vector<double>> points(times.size(), std::vector<double>(d, 0.0));
    const double step = 1.0 / std::sqrt(static_cast<double>(segments));
    for (std::size_t j = 1; j < times.size(); ++j)
      for (std::size_t k = 0; k < d; ++k) points[j][k] = points[j - 1][k] + step * gauss(rng);
    const PiecewiseLinearPath path(times, points);
    std::array<double, 3> tr{unit(rng), unit(rng), unit(rng)};
    std::sort(tr.begin(), tr.end());
    const auto left = signature(path, tr[0], tr[1], depth);
    const auto right = signature(path, tr[1], tr[2], depth);
    const auto whole = signature(path, tr[0], tr[2], depth);
    worst = std::max(worst, max_abs_difference(truncated_product(left, right), whole));
  }
  out.checks.push_back(below("max coefficient error over 200 instances", worst, 1e-10));
  return out;
}

CriterionOutcome quadrature_oracle(const SuiteOptions& options) {
  CriterionOutcome out{2, "Signature quadrature oracle", {}, {}};
  auto rng = criterion_rng(options, 2);
  constexpr std::size_t depth = 4;
  const std::size_t grids[] = {1024, 2048, 4096};
  double worst_fine = 0.0;
  double min_order = std::numeric_limits<double>::infinity();
  double max_order = 0.0;
  std::vector<double> worst_level(depth + 1, 0.0);
  for (int i = 0; i < 20; ++i) {
    // Unit arc length: the quadrature error of the whole tensor scales as L^2 / steps.
    const auto raw = random_bv_path(rng, 2, 3 + static_cast<std::size_t>(i % 4), 0.3, 0.2);
    const double length = one_variation(*raw, 0.0, 1.0);
    std::vector<std::vector<double>> points;
    for (std::size_t j = 0; j < raw->samples(); ++j) {
      auto q = raw->point(j);
      points.push_back({q[0] / length, q[1] / length});
    }
    const PiecewiseLinearPath path(std::vector<double>(raw->times().begin(), raw->times().end()), points);
    const auto exact = signature(path, 0.0, 1.0, depth);
    const double exact_norm = euclidean(exact.coefficients());
    double errors[3];
    for (int g = 0; g < 3; ++g) {
      const auto sums = reference::riemann_signature(path, 0.0, 1.0, depth, grids[g]);
      double sq = 0.0;
      for (std::size_t k = 0; k <= depth; ++k) {
        const double e = level_distance(sums[k], exact.level(k));
        sq += e * e;
        if (g == 2 && k > 0) worst_level[k] = std::max(worst_level[k], e / euclidean(exact.level(k)));
      }
      errors[g] = std::sqrt(sq) / exact_norm;
    }
    worst_fine = std::max(worst_fine, errors[2]);
    for (int g = 0; g < 2; ++g) {
      const double order = std::log2(errors[g] / errors[g + 1]);
      min_order = std::min(min_order, order);
      max_order = std::max(max_order, order);
    }
  }
  out.checks.push_back(at_most("max relative error of the truncated signature at 4096 steps", worst_fine, 1e-3));
  out.checks.push_back(within("min observed convergence order", min_order, 0.9, 1.1));
  out.checks.push_back(within("max observed convergence order", max_order, 0.9, 1.1));
  std::string levels = "per-level relative error at 4096 steps (informational):";
  for (std::size_t k = 1; k <= depth; ++k) levels += " level " + std::to_string(k) + " " + fmt(worst_level[k]);
  out.notes.push_back(levels);
  return out;
}

CriterionOutcome neoclassical_sweep(const SuiteOptions&) {
  CriterionOutcome out{3, "Neo-classical inequality", {}, {}};
  const double ps[] = {1.0, 1.1, 1.5, 2.0, 2.5, 3.7};
  std::vector<double> grid;
  for (int i = 0; i < 16; ++i) grid.push_back(0.01 * std::pow(1000.0, i / 15.0));
  double worst_excess = -std::numeric_limits<double>::infinity();
  double worst_equality = 0.0;
  for (double p : ps)
    for (double x : grid)
      for (double y : grid)
        for (int n = 0; n <= 12; ++n) {
          const auto sides = neoclassical_sides(p, x, y, n);
          worst_excess = std::max(worst_excess, sides.lhs / sides.rhs - 1.0);
          if (p == 1.0) worst_equality = std::max(worst_equality, std::abs(sides.lhs - sides.rhs) / sides.rhs);
        }
  out.checks.push_back(at_most("max lhs/rhs - 1", worst_excess, 1e-10));
  out.checks.push_back(below("max |lhs - rhs|/rhs at p = 1", worst_equality, 1e-10));
  return out;
}

CriterionOutcome extension_oracle(const SuiteOptions& options) {
  CriterionOutcome out{4, "Extension oracle", {}, {}};
  auto rng = criterion_rng(options, 4);
  constexpr std::size_t depth = 5;
  constexpr double beta = 2.0;
  double worst_error = 0.0;
  double worst_increment = 0.0;
  std::vector<double> worst_ratio(depth + 1, 0.0);
  for (int i = 0; i < 4; ++i) {
    const auto path = random_bv_path(rng, 2, 6, 0.3);
    const auto x = path_functional(path, 1, 1.0, beta, arc_length_control({path}, beta));
    ExtensionConfig cfg;
    cfg.target_depth = depth;
    cfg.convergence_tol = options.extension_tol;
    cfg.tail_exponent = 1.0;
    const auto lifted = lyons_extend_traced(x, 0.0, 1.0, cfg);
    const auto exact = signature(*path, 0.0, 1.0, depth);
    for (std::size_t k = 2; k <= depth; ++k) {
      auto a = lifted.value.level(k);
      auto b = exact.level(k);
      for (std::size_t j = 0; j < a.size(); ++j) worst_error = std::max(worst_error, std::abs(a[j] - b[j]));
    }
    EstimateParams params;
    params.p = 1.0;
    params.beta = beta;
    const double omega = x.control(0.0, 1.0);
    for (const auto& level : lifted.trace.levels) {
      worst_ratio[level.level] = std::max(worst_ratio[level.level], tail_ratio(level.increments));
      for (std::size_t K = 0; K < level.increments.size(); ++K) {
        const double bound = main_lemma_terms(params, omega, static_cast<int>(level.level) - 1,
                                              static_cast<int>(K)).partition_term;
        worst_increment = std::max(worst_increment, level.increments[K] / bound);
      }
    }
  }
  out.checks.push_back(below("max coefficient error, levels 2-5", worst_error, 1e-8));
  out.checks.push_back(at_most("max increment / geometric bound, all levels and orders", worst_increment, 1.0));
  for (std::size_t k = 2; k <= depth; ++k) {
    const double r = std::pow(0.5, static_cast<double>(k) - 1.0);
    out.checks.push_back(at_most("fitted increment ratio, level " + std::to_string(k), worst_ratio[k], r * 1.05));
  }
  return out;
}

CriterionOutcome increment_audit(const SuiteOptions& options) {
  CriterionOutcome out{5, "Dyadic increment bound audit", {}, {}};
  auto rng = criterion_rng(options, 5);
  constexpr std::size_t kMaxOrder = 8;
  for (int i = 0; i < 5; ++i) {
    const bool bv = i < 3;
    const double p = bv ? 1.0 : 2.5;
    const double delta = bv ? 1.0 : 0.3;
    const auto base = random_bv_path(rng, 2, 6, 0.3);
    const auto pert = sinusoidal_perturbation(base, 1e-3 * (1 + i % 3), 96);
    const auto n = static_cast<std::size_t>(std::floor(p));
    auto sc = make_scenario(base, pert, p, delta, 0.0, n + 1, 64, options.seed + i);

    std::vector<TimePair> intervals{{0.0, 1.0}};
    for (const auto& pr : simplex_pairs(2, options.seed + 100 + i)) intervals.push_back(pr);
    std::vector<DyadicRefinement> refinements;
    std::vector<TimePair> eps_pairs = sc.pairs;
    for (const auto& [s, t] : intervals) {
      refinements.emplace_back(sc.x->control, s, t);
      for (std::size_t K = 0; K <= kMaxOrder + 1; ++K) {
        const auto& pts = refinements.back().at(K).points;
        for (std::size_t j = 0; j + 1 < pts.size(); ++j) eps_pairs.emplace_back(pts[j], pts[j + 1]);
      }
    }
    sc.epsilon = std::max(sc.epsilon, measure_epsilon(*sc.x, *sc.y, delta, eps_pairs));
    const auto params = sc.params();

    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < intervals.size(); ++j) {
      const double omega = sc.x->control(intervals[j].first, intervals[j].second);
      std::vector<double> diff;
      for (std::size_t K = 0; K <= kMaxOrder + 1; ++K) {
        const auto& part = refinements[j].at(K);
        const auto dx = hat_partition_product(*sc.x, part, n) - hat_partition_product(*sc.y, part, n);
        diff.push_back(euclidean(dx.level(n + 1)));
      }
      for (std::size_t K = 0; K <= kMaxOrder; ++K) {
        const double bound = main_lemma_increment_bound(params, omega, static_cast<int>(n), static_cast<int>(K));
        const double inc = diff[K + 1] - diff[K];
        worst = std::max(worst, bound > 0.0 ? inc / bound : (inc > 0.0 ? INFINITY : 0.0));
      }
    }
    out.checks.push_back(at_most("pair " + std::to_string(i + 1) + " (p=" + fmt(p) + ", delta=" + fmt(delta) +
                                     ", eps=" + fmt(sc.epsilon) + "): max increment/bound, K=0..8",
                                 worst, 1.0));
  }
  return out;
}

CriterionOutcome uniform_estimate(const SuiteOptions& options) {
  CriterionOutcome out{6, "Uniform estimate verification", {}, {}};
  auto rng = criterion_rng(options, 6);
  constexpr std::size_t levels = 6;
  ExtensionConfig cfg;
  cfg.convergence_tol = options.theorem_tol;
  cfg.tail_exponent = 1.0;
  const std::size_t npairs = options.theorem_pairs;

  auto record = [&](const std::string& label, const PathPairScenario& sc) {
    const auto report = verify_uniform_estimate(*sc.x, *sc.y, sc.params(), levels, npairs, options.seed, cfg);
    add_notes(out, report.notes);
    std::vector<double> worst(levels + 1, 0.0);
    for (const auto& row : report.rows)
      worst[row.level] = std::max(worst[row.level], row.rhs > 0.0 ? row.lhs / row.rhs : (row.lhs > 0.0 ? INFINITY : 0.0));
    const std::string head = label + " (" + case_name(report.estimate_case) + ", p=" + fmt(sc.p) +
                             ", delta=" + fmt(sc.delta) + ", beta=" + fmt(sc.beta) + ", eps=" + fmt(sc.epsilon) + ")";
    out.checks.push_back(holds(head + ": report passes", report.passed()));
    for (std::size_t k = 2; k <= levels; ++k)
      out.checks.push_back(at_most(head + ": max lhs/rhs, level " + std::to_string(k), worst[k], 1.0));
  };

  const auto base = random_bv_path(rng, 2, 6, 0.3);
  for (double target : {1e-2, 1e-3}) {
    double amplitude = target / 30.0;
    PathPairScenario sc;
    for (int it = 0; it < 4; ++it) {
      sc = make_scenario(base, sinusoidal_perturbation(base, amplitude, 96), 1.0, 1.0, 0.0, levels, npairs,
                         options.seed);
      amplitude *= target / sc.epsilon;
    }
    out.checks.push_back(within("measured eps / target " + fmt(target), sc.epsilon / target, 0.99, 1.01));
    record("eps target " + fmt(target), sc);
  }
  const auto rough_base = random_bv_path(rng, 2, 6, 0.3);
  const auto rough_pert = sinusoidal_perturbation(rough_base, 1e-3, 96);
  for (double delta : {0.3, 0.9})
    record("p=2.5 lift", make_scenario(rough_base, rough_pert, 2.5, delta, 0.0, levels, npairs, options.seed));
  return out;
}

CriterionOutcome beta_thresholds(const SuiteOptions&) {
  CriterionOutcome out{7, "Beta thresholds", {}, {}};
  const double ps[] = {1.0, 1.1, 1.5, 2.0, 2.5, 3.0, 3.7};
  double worst = 0.0;
  for (double p : ps) {
    std::set<double> deltas{0.0, 0.05, 0.3, 0.5, 0.9, 1.0, 1.0 - fractional_part(p)};
    for (double delta : deltas) {
      if (fractional_part(p) == 0.0 && delta > 1.0 - fractional_part(p)) continue;
      const double ours = beta_threshold(p, delta);
      const long double ref = reference::beta_threshold(p, delta);
      worst = std::max(worst, static_cast<double>(std::fabs((ours - ref) / ref)));
    }
  }
  out.checks.push_back(at_most("max relative deviation from reference evaluation", worst, 1e-12));
  const double sqrt2 = std::numbers::sqrt2;
  out.checks.push_back(at_most("|beta(2, 0) - (4 + 2 sqrt 2)|", std::abs(beta_threshold(2.0, 0.0) - (4.0 + 2.0 * sqrt2)), 1e-12));
  out.checks.push_back(at_most("|beta(2, 1) - (16 + 16 sqrt 2)| / 38.6", std::abs(beta_threshold(2.0, 1.0) - (16.0 + 16.0 * sqrt2)) / 38.6, 1e-12));
  out.checks.push_back(at_most("|beta(1, 1) - 16|", std::abs(beta_threshold(1.0, 1.0) - 16.0), 1e-12));
  return out;
}

CriterionOutcome cde_application(const SuiteOptions& options) {
  CriterionOutcome out{8, "Linear CDE application", {}, {}};
  const auto problem = rotation_problem();
  double series_error = 0.0;
  double rotation_error = 0.0;
  for (double t : {0.1, 0.25, 1.0 / 3.0, 0.5, 0.75, 0.9, 1.0}) {
    const auto exact = solve_exact(problem, t);
    series_error = std::max(series_error, (solve_series(problem, t, 12) - exact).norm());
    const double angle = problem.driver().value_at(t)[0];
    rotation_error = std::max(rotation_error, (exact - Eigen::Vector2d(std::cos(angle), std::sin(angle))).norm());
  }
  out.checks.push_back(at_most("max |series(N=12) - exact|", series_error, 1e-9));
  out.checks.push_back(at_most("max |exact - rotation by gamma_t|", rotation_error, 1e-12));

  const double beta = auto_beta(1.0, 1.0);
  const auto rows = cde_sweep(problem, {1e-1, 1e-2, 1e-3, 1e-4}, beta, options.seed);
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (const auto& row : rows) {
    const std::string tag = "amplitude " + fmt(row.amplitude) + " (eps=" + fmt(row.epsilon) + ", C=" + fmt(row.C) + ")";
    out.checks.push_back(at_most(tag + ": sup|x - y| / bound", row.sup_difference / row.bound, 1.0));
    out.checks.push_back(at_most(tag + ": max increment difference / bound", row.max_increment_difference / row.bound, 1.0));
    lo = std::min(lo, row.normalized);
    hi = std::max(hi, row.normalized);
  }
  out.checks.push_back(below("spread of sup|x - y| / (eps (1 + log2(C/eps)))", hi / lo, 4.0));
  out.notes.push_back("C = omega(0,1) of the joint control; beta = " + fmt(beta) + "; bound scaled by |x0|");
  return out;
}

std::vector<CriterionOutcome> run_suite(const SuiteOptions& options) {
  return {chen_identity(options),    quadrature_oracle(options), neoclassical_sweep(options),
          extension_oracle(options), increment_audit(options),   uniform_estimate(options),
          beta_thresholds(options),  cde_application(options)};
}

}  // namespace roughpath
