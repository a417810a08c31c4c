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
#include "roughpath/cli.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <map>
#include <ostream>

#include "CLI11.hpp"
#include "roughpath/bounds.hpp"
#include "roughpath/cde.hpp"
#include "roughpath/error.hpp"
#include "roughpath/experiments.hpp"
#include "roughpath/extension.hpp"
#include "roughpath/io.hpp"
#include "roughpath/partition.hpp"

namespace roughpath::cli {

namespace {

namespace fs = std::filesystem;

struct Invocation {
  std::string command;
  std::string config_file;
  std::string out;
  std::vector<std::string> inputs;
  std::map<std::string, std::string> flags;  // only the flags actually given
};

struct Resolved {
  Json config;
  fs::path input_base;  // relative inputs are resolved against this directory
  fs::path out;
};

struct Outcome {
  CsvReport report;
  Json body;
  bool passed;
  std::string line;  // one-line human summary
};

const std::vector<double> kNeoclassicalPs = {1.0, 1.1, 1.5, 2.0, 2.5, 3.7};

Json defaults_for(const std::string& command) {
  Json c{{"command", command}, {"seed", kDefaultSeed}};
  if (command == "signature") {
    c["inputs"] = Json::array();
    c["depth"] = 2;
    c["interval"] = {0.0, 1.0};
  } else if (command == "extend") {
    c["inputs"] = Json::array();
    c["p"] = 1.0;
    c["beta"] = "auto";
    c["depth"] = 5;
    c["tol"] = 1e-10;
    c["max_order"] = 22;
    c["tail_exponent"] = 1.0;
    c["pairs"] = 64;
    c["interval"] = {0.0, 1.0};
    c["check_tol"] = 1e-8;
  } else if (command == "partition") {
    c["inputs"] = Json::array();
    c["order"] = 4;
    c["tol"] = 1e-12;
    c["root_finder"] = "illinois";
    c["interval"] = {0.0, 1.0};
    c["residual_limit"] = 1e-9;
  } else if (command == "neoclassical") {
    c["p"] = kNeoclassicalPs;
    c["depth"] = 12;
    c["grid"] = {0.01, 10.0};
    c["grid_points"] = 16;
  } else if (command == "verify-theorem") {
    c["inputs"] = Json::array();
    c["p"] = 1.0;
    c["delta"] = 1.0;
    c["beta"] = "auto";
    c["levels"] = 6;
    c["pairs"] = 64;
    c["tol"] = 1e-8;
    c["tail_exponent"] = 1.0;
    c["allow_small_beta"] = false;
    c["allow_large_epsilon"] = false;
  } else if (command == "cde-compare") {
    c["inputs"] = Json::array();
    c["amplitudes"] = {1e-1, 1e-2, 1e-3, 1e-4};
    c["p"] = 1.0;
    c["delta"] = 1.0;
    c["beta"] = "auto";
    c["depth"] = 12;
  } else if (command == "all") {
    c["pairs"] = 64;
    c["tol"] = 1e-8;
    c["extension_tol"] = 1e-10;
  } else {
    throw SchemaError("unknown command '" + command + "'");
  }
  return c;
}

Json parse_flag(const std::string& key, const std::string& text) {
  auto fail = [&]() -> Json { throw SchemaError("--" + key + ": cannot parse '" + text + "'"); };
  if (key == "beta" && text == "auto") return "auto";
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (key == "seed" || key == "depth" || key == "levels" || key == "pairs" || key == "order") {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || text.empty()) return fail();
    return v;
  }
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || text.empty()) return fail();
  return v;
}

Resolved resolve(const Invocation& inv) {
  Resolved r;
  r.config = defaults_for(inv.command);
  r.input_base = fs::current_path();
  std::string out_dir = "roughpath-out";
  if (!inv.config_file.empty()) {
    const Json file = read_json(inv.config_file);
    if (!file.is_object()) throw SchemaError("config must be a JSON object");
    for (auto it = file.begin(); it != file.end(); ++it) {
      const std::string& key = it.key();
      if (key == "command") {
        if (it.value() != inv.command) throw SchemaError("config is for command " + it.value().dump());
        continue;
      }
      if (key == "out") {
        if (!it.value().is_string()) throw SchemaError("out must be a string");
        out_dir = it.value().get<std::string>();
        continue;
      }
      if (!r.config.contains(key)) throw SchemaError("key '" + key + "' does not apply to " + inv.command);
      r.config[key] = it.value();
    }
    if (file.contains("inputs")) r.input_base = fs::absolute(inv.config_file).parent_path();
  }
  for (const auto& [key, text] : inv.flags) {
    if (!r.config.contains(key)) throw SchemaError("--" + key + " does not apply to " + inv.command);
    r.config[key] = parse_flag(key, text);
  }
  if (!inv.inputs.empty()) {
    if (!r.config.contains("inputs")) throw SchemaError(inv.command + " takes no input files");
    r.config["inputs"] = inv.inputs;
    r.input_base = fs::current_path();
  }
  if (!inv.out.empty()) out_dir = inv.out;
  r.out = out_dir;
  return r;
}

// Typed accessors; every mismatch is a schema error naming the key.
double real(const Json& c, const char* key) {
  const Json& v = c.at(key);
  if (!v.is_number()) throw SchemaError(std::string(key) + " must be a number");
  return v.get<double>();
}

std::size_t count(const Json& c, const char* key) {
  const Json& v = c.at(key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
    throw SchemaError(std::string(key) + " must be a non-negative integer");
  return v.get<std::size_t>();
}

bool boolean(const Json& c, const char* key) {
  const Json& v = c.at(key);
  if (!v.is_boolean()) throw SchemaError(std::string(key) + " must be true or false");
  return v.get<bool>();
}

std::vector<double> reals(const Json& c, const char* key) {
  const Json& v = c.at(key);
  if (v.is_number()) return {v.get<double>()};
  if (!v.is_array() || v.empty()) throw SchemaError(std::string(key) + " must be a number or a non-empty array");
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number()) throw SchemaError(std::string(key) + " must hold numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

std::pair<double, double> interval(const Json& c) {
  const auto v = reals(c, "interval");
  if (v.size() != 2 || !(0.0 <= v[0] && v[0] <= v[1] && v[1] <= 1.0))
    throw SchemaError("interval must be [s, t] with 0 <= s <= t <= 1");
  return {v[0], v[1]};
}

// nullopt for "auto".
std::optional<double> beta_setting(const Json& c) {
  const Json& v = c.at("beta");
  if (v.is_string() && v.get<std::string>() == "auto") return std::nullopt;
  if (!v.is_number() || !(v.get<double>() > 0.0)) throw SchemaError("beta must be a positive number or \"auto\"");
  return v.get<double>();
}

std::vector<fs::path> inputs(const Resolved& r, std::size_t min, std::size_t max) {
  const Json& v = r.config.at("inputs");
  if (!v.is_array()) throw SchemaError("inputs must be an array of file names");
  if (v.size() < min || v.size() > max) {
    std::string expect = min == max ? std::to_string(min) : std::to_string(min) + " to " + std::to_string(max);
    throw SchemaError(r.config.at("command").get<std::string>() + " expects " + expect + " input file(s)");
  }
  std::vector<fs::path> out;
  for (const auto& x : v) {
    if (!x.is_string()) throw SchemaError("inputs must be file names");
    fs::path p = x.get<std::string>();
    out.push_back(p.is_absolute() ? p : r.input_base / p);
  }
  return out;
}

PathPtr load_path(const fs::path& file) { return std::make_shared<const PiecewiseLinearPath>(read_path(file)); }

std::string word_label(std::size_t dim, std::size_t level, std::size_t index) {
  std::string out;
  std::vector<std::size_t> letters(level);
  for (std::size_t j = level; j-- > 0;) {
    letters[j] = index % dim + 1;
    index /= dim;
  }
  for (std::size_t j = 0; j < level; ++j) out += (j ? " " : "") + std::to_string(letters[j]);
  return out;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

Outcome cmd_signature(const Resolved& r) {
  const auto path = load_path(inputs(r, 1, 1)[0]);
  const auto [s, t] = interval(r.config);
  const auto depth = count(r.config, "depth");
  const auto sig = signature(*path, s, t, depth);
  CsvReport rep({"level", "word", "value"});
  for (std::size_t k = 0; k <= depth; ++k) {
    const auto level = sig.level(k);
    for (std::size_t i = 0; i < level.size(); ++i)
      rep.add_row({std::to_string(k), word_label(path->dim(), k, i), format_double(level[i])});
  }
  return {rep, Json{{"tensor", tensor_to_json(sig)}, {"passed", true}}, true, "signature: depth " + std::to_string(depth)};
}

Outcome cmd_extend(const Resolved& r) {
  const auto path = load_path(inputs(r, 1, 1)[0]);
  const auto& c = r.config;
  const auto [s, t] = interval(c);
  const double p = real(c, "p");
  const double beta = beta_setting(c).value_or(1.05 * extension_beta_threshold(p));
  ExtensionConfig cfg;
  cfg.target_depth = count(c, "depth");
  cfg.convergence_tol = real(c, "tol");
  cfg.max_order = count(c, "max_order");
  cfg.tail_exponent = real(c, "tail_exponent");
  const auto n0 = static_cast<std::size_t>(std::floor(p));
  const auto cal = calibrated_control({path}, p, beta, std::max(cfg.target_depth, n0), count(c, "pairs"),
                                      c.at("seed").get<std::uint64_t>());
  const auto x = path_functional(path, n0, p, beta, cal.control);
  const auto lifted = lyons_extend_traced(x, s, t, cfg);
  const auto exact = signature(*path, s, t, cfg.target_depth);

  CsvReport rep({"level", "word", "lifted", "signature", "abs_error"});
  double worst = 0.0;
  for (std::size_t k = 0; k <= cfg.target_depth; ++k) {
    const auto a = lifted.value.level(k);
    const auto b = exact.level(k);
    for (std::size_t i = 0; i < a.size(); ++i) {
      const double e = std::abs(a[i] - b[i]);
      worst = std::max(worst, e);
      rep.add_row({std::to_string(k), word_label(path->dim(), k, i), format_double(a[i]), format_double(b[i]),
                   format_double(e)});
    }
  }
  Json levels = Json::array();
  for (const auto& lv : lifted.trace.levels) levels.push_back({{"level", lv.level}, {"increments", lv.increments}});
  const double check_tol = real(c, "check_tol");
  const bool passed = worst <= check_tol;
  Json body{{"beta", beta},
            {"control_scale", cal.scale},
            {"final_order", lifted.trace.final_order},
            {"last_change", lifted.trace.last_change},
            {"increments", levels},
            {"warnings", lifted.trace.warnings},
            {"max_abs_error", worst},
            {"check_tol", check_tol},
            {"passed", passed}};
  return {rep, body, passed, "extend: max |lift - signature| = " + format_double(worst)};
}

Outcome cmd_partition(const Resolved& r) {
  const auto& c = r.config;
  const auto files = inputs(r, 0, 1);
  const auto [s, t] = interval(c);
  std::optional<Control> omega;
  if (files.empty())
    omega.emplace([](double a, double b) { return b - a; }, "time");
  else
    omega.emplace(arc_length_control({load_path(files[0])}, 1.0));
  BalanceOptions opts;
  opts.tol = real(c, "tol");
  const std::string finder = c.at("root_finder").is_string() ? c.at("root_finder").get<std::string>() : "";
  if (finder == "illinois")
    opts.method = RootFinder::illinois;
  else if (finder == "bisection")
    opts.method = RootFinder::bisection;
  else
    throw SchemaError("root_finder must be \"illinois\" or \"bisection\"");
  const auto part = total_dyadic_partition(*omega, s, t, count(c, "order"), opts);
  const auto audit = audit_partition(*omega, part);

  CsvReport rep({"index", "time", "omega_from_start"});
  for (std::size_t i = 0; i < part.points.size(); ++i)
    rep.add_row({std::to_string(i), format_double(part.points[i]), format_double((*omega)(s, part.points[i]))});
  const double limit = real(c, "residual_limit");
  const double cell = audit.total_control / std::ldexp(1.0, static_cast<int>(part.order));
  const bool passed = audit.max_balance_residual <= limit && audit.max_interval_control <= cell * (1.0 + limit);
  Json body{{"control", omega->description()},
            {"order", part.order},
            {"max_balance_residual", audit.max_balance_residual},
            {"max_interval_control", audit.max_interval_control},
            {"total_control", audit.total_control},
            {"residual_limit", limit},
            {"passed", passed}};
  return {rep, body, passed, "partition: max balance residual " + format_double(audit.max_balance_residual)};
}

Outcome cmd_neoclassical(const Resolved& r) {
  const auto& c = r.config;
  const auto ps = reals(c, "p");
  const auto grid = reals(c, "grid");
  if (grid.size() != 2 || !(0.0 < grid[0] && grid[0] <= grid[1])) throw SchemaError("grid must be [min, max] with 0 < min <= max");
  const auto points = count(c, "grid_points");
  if (points < 1) throw SchemaError("grid_points must be positive");
  const auto nmax = count(c, "depth");
  std::vector<double> xs;
  for (std::size_t i = 0; i < points; ++i)
    xs.push_back(points == 1 ? grid[0] : grid[0] * std::pow(grid[1] / grid[0], static_cast<double>(i) / (points - 1)));

  CsvReport rep({"p", "x", "y", "n", "lhs", "rhs", "pass"});
  double worst = -INFINITY;
  double worst_equality = 0.0;
  bool passed = true;
  for (double p : ps)
    for (double x : xs)
      for (double y : xs)
        for (std::size_t n = 0; n <= nmax; ++n) {
          const auto sides = neoclassical_sides(p, x, y, static_cast<int>(n));
          bool ok = sides.lhs <= sides.rhs * (1.0 + 1e-10);
          if (p == 1.0) {
            const double rel = std::abs(sides.lhs - sides.rhs) / sides.rhs;
            worst_equality = std::max(worst_equality, rel);
            ok = ok && rel < 1e-10;
          }
          worst = std::max(worst, sides.lhs / sides.rhs - 1.0);
          passed = passed && ok;
          rep.add_row({format_double(p), format_double(x), format_double(y), std::to_string(n),
                       format_double(sides.lhs), format_double(sides.rhs), yes_no(ok)});
        }
  Json body{{"max_lhs_over_rhs_minus_one", worst}, {"max_equality_defect_p1", worst_equality}, {"passed", passed}};
  return {rep, body, passed, "neoclassical: max lhs/rhs - 1 = " + format_double(worst)};
}

Outcome cmd_verify(const Resolved& r) {
  const auto& c = r.config;
  const auto files = inputs(r, 2, 2);
  const auto x = load_path(files[0]);
  const auto y = load_path(files[1]);
  const double p = real(c, "p");
  const double delta = real(c, "delta");
  const auto beta = beta_setting(c);
  const auto levels = count(c, "levels");
  const auto pairs = count(c, "pairs");
  const auto seed = c.at("seed").get<std::uint64_t>();
  const auto sc = make_scenario(x, y, p, delta, beta.value_or(0.0), levels, pairs, seed);
  auto params = sc.params();
  params.allow_small_beta = boolean(c, "allow_small_beta");
  params.allow_epsilon_at_least_one = boolean(c, "allow_large_epsilon");
  ExtensionConfig cfg;
  cfg.convergence_tol = real(c, "tol");
  cfg.tail_exponent = real(c, "tail_exponent");
  const auto report = verify_uniform_estimate(*sc.x, *sc.y, params, levels, pairs, seed, cfg);

  CsvReport rep({"level", "s", "t", "omega", "lhs", "rhs", "slack", "pass"});
  for (const auto& row : report.rows)
    rep.add_row({std::to_string(row.level), format_double(row.s), format_double(row.t), format_double(row.omega),
                 format_double(row.lhs), format_double(row.rhs), format_double(row.slack()), yes_no(row.pass())});
  Json worst = Json::array();
  const auto slack = report.worst_slack();
  for (std::size_t k = 1; k < slack.size(); ++k) worst.push_back({{"level", k}, {"worst_slack", slack[k]}});
  const bool passed = report.passed();
  Json body{{"case", case_name(report.estimate_case)},
            {"beta", sc.beta},
            {"beta_auto", !beta.has_value()},
            {"beta_threshold", report.beta_threshold},
            {"beta_ok", report.beta_ok},
            {"epsilon", sc.epsilon},
            {"epsilon_ok", report.epsilon_ok},
            {"omega_total", params.omega_total},
            {"control_scale", sc.control_scale},
            {"worst_slack", worst},
            {"notes", report.notes},
            {"passed", passed}};
  return {rep, body, passed,
          "verify-theorem: " + case_name(report.estimate_case) + ", eps = " + format_double(sc.epsilon)};
}

Outcome cmd_cde(const Resolved& r) {
  const auto& c = r.config;
  const auto files = inputs(r, 0, 1);
  const LinearCdeProblem problem = files.empty() ? rotation_problem() : read_cde_problem(files[0]);
  const double beta = beta_setting(c).value_or(auto_beta(real(c, "p"), real(c, "delta")));
  const auto amplitudes = reals(c, "amplitudes");
  const auto depth = count(c, "depth");
  const auto rows = cde_sweep(problem, amplitudes, beta, c.at("seed").get<std::uint64_t>());

  CsvReport rep({"amplitude", "epsilon", "C", "sup_difference", "max_increment_difference", "bound", "normalized",
                 "pass"});
  bool passed = true;
  double lo = INFINITY;
  double hi = 0.0;
  for (const auto& row : rows) {
    const bool ok = row.sup_difference <= row.bound && row.max_increment_difference <= row.bound;
    passed = passed && ok;
    lo = std::min(lo, row.normalized);
    hi = std::max(hi, row.normalized);
    rep.add_row({format_double(row.amplitude), format_double(row.epsilon), format_double(row.C),
                 format_double(row.sup_difference), format_double(row.max_increment_difference),
                 format_double(row.bound), format_double(row.normalized), yes_no(ok)});
  }
  const double spread = hi / lo;
  const bool spread_ok = rows.size() < 2 || spread < 4.0;
  const double series_error = (solve_series(problem, 1.0, depth) - solve_exact(problem, 1.0)).norm();
  const double tail = series_tail_bound(problem, 1.0, depth);
  const bool series_ok = series_error <= tail + 1e-12;
  passed = passed && spread_ok && series_ok;
  Json body{{"beta", beta},
            {"operator_norm", problem.operator_norm()},
            {"series", {{"depth", depth}, {"error_at_1", series_error}, {"tail_bound", tail}, {"passed", series_ok}}},
            {"normalized_spread", spread},
            {"spread_limit", 4.0},
            {"notes", {"C = omega(0,1) of the joint control", "bound scaled by |x0|"}},
            {"passed", passed}};
  return {rep, body, passed, "cde-compare: spread " + format_double(spread)};
}

Outcome cmd_all(const Resolved& r, std::ostream& out) {
  const auto& c = r.config;
  SuiteOptions options;
  options.seed = c.at("seed").get<std::uint64_t>();
  options.theorem_pairs = count(c, "pairs");
  options.theorem_tol = real(c, "tol");
  options.extension_tol = real(c, "extension_tol");

  CsvReport rep({"criterion", "title", "check", "measured", "relation", "limit", "upper", "pass"});
  Json criteria = Json::array();
  bool passed = true;
  for (const auto& outcome : run_suite(options)) {
    for (const auto& check : outcome.checks)
      rep.add_row({std::to_string(outcome.id), outcome.title, check.name, format_double(check.measured),
                   check.relation, format_double(check.limit),
                   check.relation == "in" ? format_double(check.upper) : "", yes_no(check.pass)});
    criteria.push_back({{"id", outcome.id}, {"title", outcome.title}, {"passed", outcome.passed()},
                        {"notes", outcome.notes}});
    out << "criterion " << outcome.id << " (" << outcome.title << "): " << (outcome.passed() ? "PASS" : "FAIL") << '\n';
    passed = passed && outcome.passed();
  }
  return {rep, Json{{"criteria", criteria}, {"passed", passed}}, passed, "all: criteria 1-8"};
}

void error_record(std::ostream& err, const char* kind, int code, const std::string& message) {
  err << Json{{"error", kind}, {"code", code}, {"message", message}}.dump() << std::endl;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rough path toolkit: signatures, dyadic extensions, uniform estimates, linear CDEs"};
  app.require_subcommand(1);
  Invocation inv;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"signature", "Signature tensor of a path"},
      {"extend", "Lift a path's low levels and compare with its signature"},
      {"partition", "Total dyadic partition and its balance audit"},
      {"neoclassical", "Neo-classical inequality sweep"},
      {"verify-theorem", "Uniform estimate report for two paths"},
      {"cde-compare", "Linear CDE perturbation sweep against the flow-difference bound"},
      {"all", "Acceptance suite, criteria 1-8"}};
  const std::vector<std::pair<std::string, std::string>> value_flags = {
      {"seed", "Seed (unsigned 64-bit)"},          {"depth", "Depth N"},
      {"levels", "Levels checked"},                {"p", "p"},
      {"delta", "delta"},                          {"beta", "beta (number or auto)"},
      {"pairs", "Number of sampled (s,t) pairs"},  {"tol", "Tolerance"},
      {"order", "Partition order K"}};
  std::map<std::string, std::string> raw;
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--config", inv.config_file, "JSON config; flags override its values");
    sub->add_option("--out", inv.out, "Output directory");
    for (const auto& [flag, fhelp] : value_flags) sub->add_option("--" + flag, raw[name + "/" + flag], fhelp);
    sub->add_option("inputs", inv.inputs, "Input files");
  }

  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
      return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
      error_record(err, "usage", kSchemaError, e.what());
      return kSchemaError;
    }
    for (auto* sub : app.get_subcommands()) {
      inv.command = sub->get_name();
      for (const auto& [flag, fhelp] : value_flags)
        if (sub->get_option("--" + flag)->count() > 0) inv.flags[flag] = raw[inv.command + "/" + flag];
    }
    const Resolved r = resolve(inv);
    Outcome outcome = [&] {
      if (inv.command == "signature") return cmd_signature(r);
      if (inv.command == "extend") return cmd_extend(r);
      if (inv.command == "partition") return cmd_partition(r);
      if (inv.command == "neoclassical") return cmd_neoclassical(r);
      if (inv.command == "verify-theorem") return cmd_verify(r);
      if (inv.command == "cde-compare") return cmd_cde(r);
      return cmd_all(r, out);
    }();
    ReportStamp stamp{r.config, r.config.at("seed").get<std::uint64_t>()};
    write_reports(r.out, stamp, outcome.report, outcome.body);
    out << outcome.line << " -> " << (outcome.passed ? "PASS" : "FAIL") << " (" << (r.out / "report.csv").string()
        << ")\n";
    return outcome.passed ? kOk : kChecksFailed;
  } catch (const SchemaError& e) {
    error_record(err, "schema", kSchemaError, e.what());
    return kSchemaError;
  } catch (const InvalidInput& e) {
    error_record(err, "schema", kSchemaError, e.what());
    return kSchemaError;
  } catch (const InvalidCase& e) {
    error_record(err, "schema", kSchemaError, e.what());
    return kSchemaError;
  } catch (const Json::exception& e) {
    error_record(err, "schema", kSchemaError, e.what());
    return kSchemaError;
  } catch (const UnreadableInput& e) {
    error_record(err, "unreadable_input", kUnreadableInput, e.what());
    return kUnreadableInput;
  } catch (const ConvergenceError& e) {
    error_record(err, "non_convergent", kNonConvergent, e.what());
    return kNonConvergent;
  } catch (const NonMonotoneControl& e) {
    error_record(err, "non_monotone_control", kNonMonotone, e.what());
    return kNonMonotone;
  } catch (const std::exception& e) {
    error_record(err, "internal", kInternalError, e.what());
    return kInternalError;
  }
}

}  // namespace roughpath::cli
