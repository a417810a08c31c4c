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
#include "roughpath/io.hpp"

#include <charconv>
#include <cstdio>
#include <cmath>
#include <fstream>
#include <sstream>

#include "roughpath/error.hpp"

namespace roughpath {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

double parse_number(const std::string& cell, std::size_t line_no) {
  double value = 0.0;
  const char* end = cell.data() + cell.size();
  auto [ptr, ec] = std::from_chars(cell.data(), end, value);
  if (ec != std::errc() || ptr != end || cell.empty())
    throw SchemaError("line " + std::to_string(line_no) + ": '" + cell + "' is not a number");
  return value;
}

std::vector<double> number_array(const Json& j, const std::string& what) {
  if (!j.is_array()) throw SchemaError(what + " must be an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number()) throw SchemaError(what + " must be an array of numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

const Json& require(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key))
    throw SchemaError(std::string("missing field '") + key + "'");
  return doc.at(key);
}

// Library validation errors on parsed input are schema problems of the file.
template <class F>
auto as_schema(F&& build) {
  try {
    return build();
  } catch (const InvalidInput& e) {
    throw SchemaError(e.what());
  }
}

// RFC 4180 quoting for cells holding commas, quotes or line breaks.
std::string csv_cell(const std::string& cell) {
  if (cell.find_first_of(",\"\r\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

PiecewiseLinearPath parse_path_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw SchemaError("path CSV is empty");
  ++line_no;
  const auto header = split_commas(line);
  if (header.size() < 2 || header[0] != "time")
    throw SchemaError("path CSV header must be time,x1,...,xd");
  for (std::size_t k = 1; k < header.size(); ++k)
    if (header[k] != "x" + std::to_string(k)) throw SchemaError("path CSV header must be time,x1,...,xd");
  const std::size_t d = header.size() - 1;

  std::vector<double> times;
  std::vector<std::vector<double>> points;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split_commas(line);
    if (cells.size() != d + 1)
      throw SchemaError("line " + std::to_string(line_no) + ": expected " + std::to_string(d + 1) + " cells");
    times.push_back(parse_number(cells[0], line_no));
    std::vector<double> x(d);
    for (std::size_t k = 0; k < d; ++k) x[k] = parse_number(cells[k + 1], line_no);
    points.push_back(std::move(x));
  }
  return as_schema([&] { return PiecewiseLinearPath(std::move(times), points); });
}

PiecewiseLinearPath path_from_json(const Json& doc) {
  auto times = number_array(require(doc, "times"), "times");
  const Json& pts = require(doc, "points");
  if (!pts.is_array()) throw SchemaError("points must be an array of arrays");
  std::vector<std::vector<double>> points;
  for (const auto& p : pts) points.push_back(number_array(p, "points[i]"));
  return as_schema([&] { return PiecewiseLinearPath(std::move(times), points); });
}

Json read_json(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw UnreadableInput("cannot open " + file.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UnreadableInput(file.string() + ": " + e.what());
  }
}

PiecewiseLinearPath read_path(const std::filesystem::path& file) {
  const auto ext = file.extension().string();
  if (ext == ".json") return path_from_json(read_json(file));
  if (ext != ".csv") throw UnreadableInput(file.string() + ": expected a .csv or .json path file");
  std::ifstream in(file);
  if (!in) throw UnreadableInput("cannot open " + file.string());
  return parse_path_csv(in);
}

void write_path_csv(std::ostream& out, const PiecewiseLinearPath& path) {
  out << "time";
  for (std::size_t k = 1; k <= path.dim(); ++k) out << ",x" << k;
  out << '\n';
  for (std::size_t i = 0; i < path.samples(); ++i) {
    out << format_double(path.times()[i]);
    for (double v : path.point(i)) out << ',' << format_double(v);
    out << '\n';
  }
}

Json path_to_json(const PiecewiseLinearPath& path) {
  Json points = Json::array();
  for (std::size_t i = 0; i < path.samples(); ++i) {
    auto p = path.point(i);
    points.push_back(std::vector<double>(p.begin(), p.end()));
  }
  return Json{{"times", std::vector<double>(path.times().begin(), path.times().end())},
              {"points", std::move(points)}};
}

Json tensor_to_json(const TruncatedTensor& tensor) {
  Json levels = Json::array();
  for (std::size_t k = 0; k <= tensor.depth(); ++k) {
    auto level = tensor.level(k);
    levels.push_back(std::vector<double>(level.begin(), level.end()));
  }
  return Json{{"dim", tensor.dim()}, {"depth", tensor.depth()}, {"levels", std::move(levels)}};
}

TruncatedTensor tensor_from_json(const Json& doc) {
  const Json& dim = require(doc, "dim");
  const Json& depth = require(doc, "depth");
  if (!dim.is_number_unsigned() || !depth.is_number_unsigned())
    throw SchemaError("dim and depth must be non-negative integers");
  const Json& levels_doc = require(doc, "levels");
  if (!levels_doc.is_array() || levels_doc.size() != depth.get<std::size_t>() + 1)
    throw SchemaError("levels must hold depth + 1 arrays");
  std::vector<std::vector<double>> levels;
  for (const auto& level : levels_doc) levels.push_back(number_array(level, "levels[k]"));
  return as_schema([&] { return TruncatedTensor::from_levels(dim.get<std::size_t>(), levels); });
}

LinearCdeProblem problem_from_json(const Json& doc, const std::filesystem::path& base_dir) {
  const Json& a_doc = require(doc, "A");
  if (!a_doc.is_array() || a_doc.empty()) throw SchemaError("A must be a non-empty array of matrices");
  const auto x0v = number_array(require(doc, "x0"), "x0");
  const auto e = static_cast<Eigen::Index>(x0v.size());
  std::vector<Eigen::MatrixXd> A;
  for (const auto& m : a_doc) {
    if (!m.is_array() || static_cast<Eigen::Index>(m.size()) != e)
      throw SchemaError("every A_i must have one row per state coordinate");
    Eigen::MatrixXd mat(e, e);
    for (Eigen::Index r = 0; r < e; ++r) {
      const auto row = number_array(m[static_cast<std::size_t>(r)], "A_i row");
      if (static_cast<Eigen::Index>(row.size()) != e) throw SchemaError("every A_i must be square");
      for (Eigen::Index c = 0; c < e; ++c) mat(r, c) = row[static_cast<std::size_t>(c)];
    }
    A.push_back(std::move(mat));
  }
  const Json& driver_doc = require(doc, "driver");
  std::shared_ptr<const PiecewiseLinearPath> driver;
  if (driver_doc.is_string())
    driver = std::make_shared<const PiecewiseLinearPath>(read_path(base_dir / driver_doc.get<std::string>()));
  else
    driver = std::make_shared<const PiecewiseLinearPath>(path_from_json(driver_doc));
  const Eigen::VectorXd x0 = Eigen::Map<const Eigen::VectorXd>(x0v.data(), e);
  return as_schema([&] { return LinearCdeProblem(std::move(A), x0, driver); });
}

LinearCdeProblem read_cde_problem(const std::filesystem::path& file) {
  return problem_from_json(read_json(file), file.parent_path());
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

std::string ReportStamp::config_hash() const { return hex64(fnv1a64(config.dump())); }

CsvReport::CsvReport(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void CsvReport::add_row(std::vector<std::string> cells) {
  if (cells.size() != columns_.size()) throw InvalidInput("report row does not match the columns");
  rows_.push_back(std::move(cells));
}

void CsvReport::write(std::ostream& out, const ReportStamp& stamp) const {
  const std::string prefix = std::to_string(kSchemaVersion) + "," + stamp.config_hash() + "," +
                             std::to_string(stamp.seed);
  out << "schema,config_hash,seed";
  for (const auto& c : columns_) out << ',' << csv_cell(c);
  out << '\n';
  for (const auto& row : rows_) {
    out << prefix;
    for (const auto& cell : row) out << ',' << csv_cell(cell);
    out << '\n';
  }
}

Json stamped_summary(const ReportStamp& stamp, const Json& body) {
  Json out{{"schema", kSchemaVersion},
           {"config_hash", stamp.config_hash()},
           {"seed", stamp.seed},
           {"config", stamp.config}};
  for (auto it = body.begin(); it != body.end(); ++it) out[it.key()] = it.value();
  return out;
}

void write_reports(const std::filesystem::path& dir, const ReportStamp& stamp,
                   const CsvReport& report, const Json& body) {
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(dir / "report.csv", std::ios::binary);
    if (!out) throw UnreadableInput("cannot write " + (dir / "report.csv").string());
    report.write(out, stamp);
  }
  std::ofstream out(dir / "summary.json", std::ios::binary);
  if (!out) throw UnreadableInput("cannot write " + (dir / "summary.json").string());
  out << stamped_summary(stamp, body).dump(2) << '\n';
}

}  // namespace roughpath
